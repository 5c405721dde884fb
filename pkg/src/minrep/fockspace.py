"""Level-truncated Fock modules with exact sparse matrices.

States are unnormalized occupation monomials a*^n |0> so that every matrix
entry stays Gaussian rational; the squared norms are the factorial weights
prod n_i!.  Operators that would raise a state past the cutoff flag the
offending column, and any identity consumed from matrices is restricted to
columns that cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

from . import linalg, oscrep
from .reports import Report
from .scalars import QI
from .weylalg import (Mode, Polarization, WeylElement, WeylMonomial, commutator,
                      matrix_from_quadratic, mode_action_matrix, quadratic_blocks,
                      quadratic_from_matrix)


class FockError(ValueError):
    pass


def basis_size(num_modes: int, cutoff: int) -> int:
    return sum(comb(num_modes + j - 1, j) for j in range(cutoff + 1))


@dataclass(frozen=True)
class TruncatedFock:
    modes: tuple[Mode, ...]
    cutoff: int
    states: tuple[tuple[int, ...], ...]
    index: dict

    @property
    def dim(self) -> int:
        return len(self.states)

    def level(self, i: int) -> int:
        return sum(self.states[i])

    def norm_weight(self, i: int) -> int:
        w = 1
        for n in self.states[i]:
            w *= factorial(n)
        return w

    def level_indices(self, level: int) -> list[int]:
        return [i for i, s in enumerate(self.states) if sum(s) == level]

    def vacuum_index(self) -> int:
        return self.index[(0,) * len(self.modes)]


def enumerate_basis(modes, cutoff: int, max_states: int | None = None) -> TruncatedFock:
    """Occupation vectors with total level <= cutoff, graded then lex order."""
    if cutoff < 0:
        raise FockError("cutoff must be nonnegative")
    modes = tuple(modes)
    k = len(modes)
    total = basis_size(k, cutoff)
    if max_states is not None and total > max_states:
        raise FockError(f"basis would need {total} states, over the cap {max_states}")
    states = []
    for level in range(cutoff + 1):
        level_states = set()
        for combo in combinations_with_replacement(range(k), level):
            occ = [0] * k
            for m in combo:
                occ[m] += 1
            level_states.add(tuple(occ))
        states.extend(sorted(level_states))
    fock = TruncatedFock(modes=modes, cutoff=cutoff, states=tuple(states),
                         index={s: i for i, s in enumerate(states)})
    if fock.dim != total:
        raise FockError("basis enumeration does not match the closed-form count")
    return fock


@dataclass
class SparseOperator:
    dim: int
    entries: dict = field(default_factory=dict)   # (row, col) -> QI
    level_raise: int = 0
    overflow_cols: set = field(default_factory=set)
    fock: TruncatedFock | None = None

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, QI(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SparseOperator(self.dim, out, max(self.level_raise, other.level_raise),
                              self.overflow_cols | other.overflow_cols, self.fock)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SparseOperator":
        q = QI.of(c)
        if not q:
            return SparseOperator(self.dim, {}, 0, set(self.overflow_cols), self.fock)
        return SparseOperator(self.dim, {k: q * v for k, v in self.entries.items()},
                              self.level_raise, set(self.overflow_cols), self.fock)

    def __matmul__(self, other):
        by_col: dict[int, list] = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        out: dict[tuple, QI] = {}
        for (r, c), v in other.entries.items():
            for r2, u in by_col.get(r, ()):
                key = (r2, c)
                s = out.get(key, QI(0)) + u * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SparseOperator(self.dim, out, self.level_raise + other.level_raise,
                              set(other.overflow_cols), self.fock)

    def restrict_columns(self, cols) -> "SparseOperator":
        cols = set(cols)
        return SparseOperator(self.dim,
                              {k: v for k, v in self.entries.items() if k[1] in cols},
                              self.level_raise, self.overflow_cols & cols, self.fock)

    def equal_on_columns(self, other: "SparseOperator", cols) -> bool:
        cols = set(cols)
        a = {k: v for k, v in self.entries.items() if k[1] in cols}
        b = {k: v for k, v in other.entries.items() if k[1] in cols}
        return a == b

    def column_map(self) -> dict:
        out: dict[int, list] = {}
        for (r, c), v in self.entries.items():
            out.setdefault(c, []).append((r, v))
        return out

    def apply(self, vec: dict) -> dict:
        out: dict[int, QI] = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                s = out.get(r, QI(0)) + v * vec[c]
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def diagonal(self) -> list:
        if any(r != c for r, c in self.entries):
            raise FockError("operator is not diagonal in the occupation basis")
        return [self.entries.get((i, i), QI(0)) for i in range(self.dim)]

    def conj_transpose_weighted(self) -> "SparseOperator":
        """W^-1 t(conj M) W with W the diagonal of norm weights."""
        f = self.fock
        out = {}
        for (r, c), v in self.entries.items():
            w = Fraction(f.norm_weight(r), f.norm_weight(c))
            out[(c, r)] = v.conj() * QI(w)
        return SparseOperator(self.dim, out, -self.level_raise, set(), f)


def safe_columns(fock: TruncatedFock, *raises: int) -> list[int]:
    """Columns whose level survives applying operators with the given raises."""
    budget = fock.cutoff - sum(max(0, r) for r in raises)
    return [i for i in range(fock.dim) if fock.level(i) <= budget]


def operator_matrix(w: WeylElement, fock: TruncatedFock) -> SparseOperator:
    """Exact matrix of a Weyl element on the truncated occupation basis."""
    pos = {m: i for i, m in enumerate(fock.modes)}
    for m in w.modes():
        if m not in pos:
            raise FockError(f"mode {m} is not part of this Fock module")
    entries: dict[tuple, QI] = {}
    overflow: set[int] = set()
    terms = [(q, [pos[m] for m in mono.annihilators], [pos[m] for m in mono.creators])
             for mono, q in w.terms.items()]
    for col, state in enumerate(fock.states):
        for q, ann, cre in terms:
            occ = list(state)
            coeff = 1
            dead = False
            for i in ann:
                if occ[i] == 0:
                    dead = True
                    break
                coeff *= occ[i]
                occ[i] -= 1
            if dead:
                continue
            for i in cre:
                occ[i] += 1
            if sum(occ) > fock.cutoff:
                overflow.add(col)
                continue
            row = fock.index[tuple(occ)]
            s = entries.get((row, col), QI(0)) + q * coeff
            if s:
                entries[(row, col)] = s
            else:
                entries.pop((row, col), None)
    return SparseOperator(fock.dim, entries, max(0, w.max_level_raise()), overflow, fock)


def helicity_spectrum(fock: TruncatedFock, level: int | None = None) -> dict:
    """Histogram of the helicity eigenvalues on one level (or the whole space).

    Requires the four modes a1, a2, b1, b2; h is diagonal with eigenvalue
    (n_a1 + n_a2) - (n_b1 + n_b2).
    """
    want = {("a", 1), ("a", 2), ("b", 1), ("b", 2)}
    if set(fock.modes) != want:
        raise FockError("helicity spectrum needs exactly the modes a1,a2,b1,b2")
    signs = [1 if m[0] == "a" else -1 for m in fock.modes]
    hist: dict[int, int] = {}
    for s in fock.states:
        if level is not None and sum(s) != level:
            continue
        h = sum(sg * n for sg, n in zip(signs, s))
        hist[h] = hist.get(h, 0) + 1
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# Lowest-weight decomposition


@dataclass(frozen=True)
class MultiplicityRow:
    level: int
    weight: tuple          # Cartan eigenvalues of the algebra
    isospin_double: int    # 2j of the gauge irrep
    multiplicity: int


@dataclass
class MultiplicityTable:
    rows: list
    level_range: tuple

    def as_dicts(self):
        return [{"level": r.level, "weight": list(r.weight),
                 "isospin_2j": r.isospin_double, "multiplicity": r.multiplicity}
                for r in sorted(self.rows,
                                key=lambda r: (r.level, r.weight, r.isospin_double))]

    def lw_dimension(self, level: int) -> int:
        return sum(r.multiplicity * (r.isospin_double + 1)
                   for r in self.rows if r.level == level)

    def rows_at(self, level: int) -> list:
        return sorted((r for r in self.rows if r.level == level),
                      key=lambda r: (r.weight, r.isospin_double))


def _diag_int(op: SparseOperator) -> list[int]:
    out = []
    for q in op.diagonal():
        f = q.real_fraction()
        if f.denominator != 1:
            raise FockError("Cartan eigenvalue is not an integer")
        out.append(int(f))
    return out


def lowest_weight_vectors(alg, fock: TruncatedFock):
    """Joint kernel of the lowering operators, block by (level, weight).

    Returns {(level, weight): [(cols, vector)]} with each vector a QI column
    over the block's basis states.  The Cartan operators must be diagonal in
    the occupation basis, which holds for every generator set here, so the
    weight blocks are coordinate subspaces and the kernel can be taken
    block by block.
    """
    f_mats = [operator_matrix(f, fock) for f in alg.F]
    f_cols = [fm.column_map() for fm in f_mats]
    h_diags = [_diag_int(operator_matrix(h, fock)) for h in alg.H]
    blocks: dict[tuple, list[int]] = {}
    for i in range(fock.dim):
        key = (fock.level(i), tuple(d[i] for d in h_diags))
        blocks.setdefault(key, []).append(i)
    out = {}
    for key, cols in sorted(blocks.items()):
        rows_used = sorted({r for cm in f_cols for c in cols for r, _ in cm.get(c, ())})
        rpos = {r: i for i, r in enumerate(rows_used)}
        mat = []
        for cm in f_cols:
            block = [[QI(0)] * len(cols) for _ in rows_used]
            for j, c in enumerate(cols):
                for r, v in cm.get(c, ()):
                    block[rpos[r]][j] = v
            mat.extend(block)
        if rows_used:
            kern = linalg.kernel(mat, one=QI(1), zero=QI(0))
        else:
            kern = [[QI(1) if i == j else QI(0) for j in range(len(cols))]
                    for i in range(len(cols))]
        if kern:
            out[key] = [(cols, v) for v in kern]
    return out


def joint_weight_decomposition(alg, gauge, fock: TruncatedFock) -> MultiplicityTable:
    """Organize lowest-weight vectors of `alg` into gauge irreps.

    The gauge Cartan (first H of `gauge`) is diagonal; within each
    (level, weight) block the sl2 ladder count m_{2j} = N_{2j} - N_{2j+2}
    gives the multiplicities.  The charge profile must be symmetric and
    unimodal and the gauge raising operator must act inside the block,
    otherwise the decomposition is inconsistent and an error is raised.
    """
    lw = lowest_weight_vectors(alg, fock)
    q_diag = _diag_int(operator_matrix(gauge.H[0], fock))
    e_mat = operator_matrix(gauge.E[0], fock)
    rows = []
    for (level, weight), vecs in sorted(lw.items()):
        buckets: dict[int, list] = {}
        for cols, v in vecs:
            qs = {q_diag[c] for c, x in zip(cols, v) if x}
            if len(qs) != 1:
                raise FockError("lowest-weight vector mixes gauge charges")
            buckets.setdefault(qs.pop(), []).append((cols, v))
        counts = {q: len(vs) for q, vs in buckets.items()}
        if any(counts.get(q, 0) != counts.get(-q, 0) for q in counts):
            raise FockError(f"asymmetric gauge charge profile {counts}")
        _check_gauge_ladder(buckets, e_mat, fock)
        mults = {}
        for q in sorted((q for q in counts if q >= 0), reverse=True):
            m = counts.get(q, 0) - counts.get(q + 2, 0)
            if m < 0:
                raise FockError(f"gauge charge counts are not unimodal: {counts}")
            if m:
                mults[q] = m
        # reconstruct the profile from the multiplicities: exact bookkeeping
        for q in counts:
            rebuilt = sum(m for qq, m in mults.items()
                          if qq >= abs(q) and (qq - abs(q)) % 2 == 0)
            if rebuilt != counts[q]:
                raise FockError("charge profile does not match the irrep content")
        for q, m in sorted(mults.items()):
            rows.append(MultiplicityRow(level, weight, q, m))
    return MultiplicityTable(rows=rows, level_range=(0, fock.cutoff))


def _check_gauge_ladder(buckets, e_mat, fock):
    """Raising by the gauge E must stay inside the lowest-weight space."""
    for q, vs in buckets.items():
        target = buckets.get(q + 2, [])
        tgt_vectors = [_full_vector(cols, v, fock.dim) for cols, v in target]
        for cols, v in vs:
            image = e_mat.apply({c: x for c, x in zip(cols, v) if x})
            if not image:
                continue
            vec = [QI(0)] * fock.dim
            for r, x in image.items():
                vec[r] = x
            if not tgt_vectors:
                raise FockError("gauge raising hits an empty charge space")
            if not linalg.in_span([list(t) for t in tgt_vectors], vec):
                raise FockError("gauge raising leaves the lowest-weight space")


def _full_vector(cols, v, dim):
    out = [QI(0)] * dim
    for c, x in zip(cols, v):
        out[c] = x
    return out


# ---------------------------------------------------------------------------
# Flavored bilinears and the finite-cutoff closure of the commutator algebra


def _flavored(mode: Mode, flavor: int) -> Mode:
    return (mode[0], flavor) + mode[1:]


def flavored_element(w: WeylElement, flavor: int) -> WeylElement:
    terms = {}
    for mono, q in w.terms.items():
        key = WeylMonomial.make([_flavored(m, flavor) for m in mono.creators],
                                [_flavored(m, flavor) for m in mono.annihilators])
        terms[key] = terms.get(key, QI(0)) + q
    return WeylElement(terms)


def flavor_sum(w: WeylElement, flavors: int) -> WeylElement:
    out = WeylElement.zero()
    for f in range(1, flavors + 1):
        out = out + flavored_element(w, f)
    return out


def flavored_polarization(pol: Polarization, flavor: int) -> Polarization:
    return Polarization(tuple(flavored_element(p, flavor) for p in pol.phi),
                        tuple(flavored_element(p, flavor) for p in pol.phi_tilde))


def one_flavor_bilinears(family: str, k: int):
    """Spanning bilinears of one flavor plus the mode/polarization data.

    sp_real: the anti-hermitian quadratics over k modes c_1..c_k, a real
             basis of sp(2k,R) whose brackets stay in the real span.
    u_pq:    phi~ X phi for a real basis of u(k,k), scalar part dropped.
    so_star: likewise for so*(4k).
    """
    mono = WeylElement.monomial
    if family == "sp_real":
        modes = [("c", i) for i in range(1, k + 1)]
        i_one = QI(0, 1)
        elems = []
        for i in range(k):
            elems.append(mono([modes[i]], [modes[i]], i_one))
        for i in range(k):
            for j in range(i + 1, k):
                elems.append(mono([modes[i]], [modes[j]]) - mono([modes[j]], [modes[i]]))
                elems.append(mono([modes[i]], [modes[j]], i_one)
                             + mono([modes[j]], [modes[i]], i_one))
        for i in range(k):
            for j in range(i, k):
                elems.append(mono([modes[i], modes[j]], []) - mono([], [modes[i], modes[j]]))
                elems.append(mono([modes[i], modes[j]], [], i_one)
                             + mono([], [modes[i], modes[j]], i_one))
        if len(elems) != k * (2 * k + 1):
            raise FockError("sp(2k,R) bilinear basis has the wrong dimension")
        return elems, modes, None, oscrep.form_spec("sp_real", k)
    if family in ("u_pq", "so_star"):
        size = k if family == "u_pq" else 2 * k
        pol = oscrep.standard_polarization(size)
        modes = ([("a", i) for i in range(1, size + 1)]
                 + [("b", i) for i in range(1, size + 1)])
        if family == "u_pq":
            mats = u_pq_matrix_basis(2 * size)
            spec = oscrep.form_spec("u_pq", k)
        else:
            mats = oscrep.so_star_matrix_basis(k)
            spec = oscrep.form_spec("so_star", k)
        elems = [quadratic_from_matrix(m, pol).without_scalar() for m in mats]
        return elems, modes, pol, spec
    raise FockError(f"unknown closure family {family!r}")


def u_pq_matrix_basis(size: int):
    """Real basis of u(p,q), p = q = size/2, as size x size QI matrices."""
    p = size // 2
    sgn = [1] * p + [-1] * p
    out = []
    for a in range(size):
        out.append(oscrep.basis_matrix(size, a, a, QI(0, 1)))
    for a in range(size):
        for b in range(a + 1, size):
            s = sgn[a] * sgn[b]
            m = oscrep.basis_matrix(size, a, b, 1)
            m[b][a] = QI(-s)
            out.append(m)
            m2 = oscrep.basis_matrix(size, a, b, QI(0, 1))
            m2[b][a] = QI(0, s)
            out.append(m2)
    spec = oscrep.form_spec("u_pq", p)
    for m in out:
        if not oscrep.matrix_membership(m, spec):
            raise FockError("u(p,q) basis element fails membership")
    if len(out) != size * size:
        raise FockError("u(p,q) basis has the wrong dimension")
    return out


def central_pairing(x: WeylElement, y: WeylElement, modes) -> QI:
    """Closed-form central term 2 tr(gamma_x beta_y) - 2 tr(beta_x gamma_y).

    beta/gamma are the creator-creator and annihilator-annihilator blocks;
    this is the trace-form cocycle produced by the double contractions and
    serves as the matrix-side cross-check of the symbolic scalar part.
    """
    _, bx, gx = quadratic_blocks(x.without_scalar(), modes)
    _, by, gy = quadratic_blocks(y.without_scalar(), modes)
    t1 = linalg.trace(linalg.mat_mul(gx, by))
    t2 = linalg.trace(linalg.mat_mul(bx, gy))
    return QI(2) * (t1 - t2)


def truncated_closure_check(family: str, k: int, flavors: int, level: int = 0,
                            pair_limit: int | None = None) -> Report:
    """Commutators of flavored bilinears close with central charge = flavors.

    Every pairwise commutator must decompose as (flavor-diagonal quadratic,
    identical across flavors, whose matrix lies in the family algebra) plus
    a scalar equal to flavors * (trace-form pairing of the two bilinears).
    With level > 0 a sparse-matrix cross-check of a sample of commutators
    runs on a Fock truncation at that level.
    """
    rep = Report(f"closure/{family}/k{k}/N{flavors}")
    elems, modes, pol, spec = one_flavor_bilinears(family, k)
    flavored = [flavor_sum(e, flavors) for e in elems]

    charges = []
    pairs = [(s, t) for s in range(len(elems)) for t in range(s, len(elems))]
    if pair_limit is not None and pair_limit < len(pairs):
        # keep every pair with a nonzero trace-form pairing (the central
        # charge is read off there), fill up with an even subsample
        keep = [(s, t) for s, t in pairs
                if central_pairing(elems[s], elems[t], modes)]
        step = max(1, len(pairs) // pair_limit)
        sampled = [p for p in pairs[::step] if p not in keep]
        pairs = sorted(keep + sampled[:max(0, pair_limit - len(keep))])
    for s, t in pairs:
        br = commutator(flavored[s], flavored[t])
        scalar = br.scalar_part()
        quad = br.without_scalar()
        same, member = _closure_structure(quad, family, flavors, modes, pol, spec)
        rep.add(f"{family}/k{k}N{flavors}/pair{s:03d},{t:03d}/closure", same and member,
                detail="flavor-uniform quadratic inside the algebra")
        omega = central_pairing(elems[s], elems[t], modes)
        want = omega * flavors
        rep.add(f"{family}/k{k}N{flavors}/pair{s:03d},{t:03d}/central", scalar == want,
                detail=f"scalar {scalar}, trace form {omega}",
                defect=str(scalar - want))
        if omega:
            charges.append(scalar / omega)
    rep.add(f"{family}/k{k}N{flavors}/central-charge",
            bool(charges) and all(c == flavors for c in charges),
            detail=f"{len(charges)} nonzero pairings, all at charge {flavors}")
    if level > 0:
        _matrix_cross_check(rep, family, k, flavors, level, elems, flavored)
    return rep


def _closure_structure(quad, family, flavors, modes, pol, spec):
    """Split a commutator by flavor and test membership of its matrix."""
    try:
        parts = [_project_flavor(quad, f) for f in range(1, flavors + 1)]
    except ValueError:
        return False, False
    total = WeylElement.zero()
    for p in parts:
        total = total + p
    if total != quad:
        return False, False
    try:
        if family == "sp_real":
            mats = [mode_action_matrix(p, _mode_frame(modes, f))
                    for f, p in enumerate(parts, start=1)]
            # sign and transpose are irrelevant: the family is stable under both
            member = oscrep.matrix_membership(mats[0], spec)
        else:
            mats = [matrix_from_quadratic(p, flavored_polarization(pol, f))
                    for f, p in enumerate(parts, start=1)]
            member = oscrep.matrix_membership(mats[0], spec)
    except ValueError:
        return False, False
    same = all(m == mats[0] for m in mats[1:])
    return same, member


def _mode_frame(modes, flavor: int):
    """Elementary (annihilator, creator) frame over one flavor's modes."""
    fl = [_flavored(m, flavor) for m in modes]
    return ([WeylElement.annihilator(m) for m in fl]
            + [WeylElement.creator(m) for m in fl])


def _project_flavor(w: WeylElement, flavor: int) -> WeylElement:
    terms = {}
    for mono, q in w.terms.items():
        ms = list(mono.creators) + list(mono.annihilators)
        if not ms:
            continue
        fs = {m[1] for m in ms}
        if len(fs) > 1:
            raise ValueError("cross-flavor monomial in a closure commutator")
        if fs == {flavor}:
            terms[mono] = q
    return WeylElement(terms)


def _matrix_cross_check(rep, family, k, flavors, level, elems, flavored):
    all_modes = sorted({m for w in flavored for m in w.modes()})
    fock = enumerate_basis(all_modes, level)
    n = len(elems)
    sample = sorted({0, n // 3, (2 * n) // 3, n - 1})
    for s in sample:
        for t in sample:
            if s >= t:
                continue
            x, y = flavored[s], flavored[t]
            sym = operator_matrix(commutator(x, y), fock)
            mx, my = operator_matrix(x, fock), operator_matrix(y, fock)
            prod = (mx @ my) - (my @ mx)
            cols = safe_columns(fock, mx.level_raise, my.level_raise)
            rep.add(f"{family}/k{k}N{flavors}/matrix/pair{s:03d},{t:03d}",
                    sym.equal_on_columns(prod, cols),
                    detail=f"Fock cross-check at level {level}")


# ---------------------------------------------------------------------------
# Gauge groups acting on flavors


def gauge_generators(family: str, k: int, flavors: int) -> list:
    """Generators of the flavor gauge action: O(N), U(N) or Sp(2N) type.

    These are the quadratics mixing flavors that commute with every
    flavored bilinear of the family; the commutation is itself verified by
    check_dual_pair in the test suites rather than assumed.
    """
    mono = WeylElement.monomial
    out = []
    if family == "sp_real":
        modes = [("c", i) for i in range(1, k + 1)]
        for f in range(1, flavors + 1):
            for g in range(f + 1, flavors + 1):
                el = WeylElement.zero()
                for m in modes:
                    el = el + mono([_flavored(m, f)], [_flavored(m, g)]) \
                        - mono([_flavored(m, g)], [_flavored(m, f)])
                out.append(el)
        return out
    if family == "u_pq":
        # u(N) acting on flavors: a-modes in the defining rep, b-modes in
        # the conjugate, so the generator of A is sum A a*a + conj(A) b*b.
        size = k
        a_modes = [("a", i) for i in range(1, size + 1)]
        b_modes = [("b", i) for i in range(1, size + 1)]

        def add_gen(f, g, c):
            el = WeylElement.zero()
            for m in a_modes:
                el = el + mono([_flavored(m, f)], [_flavored(m, g)], c)
                if f != g:
                    el = el - mono([_flavored(m, g)], [_flavored(m, f)], c.conj())
            for m in b_modes:
                el = el + mono([_flavored(m, f)], [_flavored(m, g)], c.conj())
                if f != g:
                    el = el - mono([_flavored(m, g)], [_flavored(m, f)], c)
            out.append(el)

        for f in range(1, flavors + 1):
            add_gen(f, f, QI(0, 1))
        for f in range(1, flavors + 1):
            for g in range(f + 1, flavors + 1):
                add_gen(f, g, QI(1))
                add_gen(f, g, QI(0, 1))
        return out
    if family == "so_star":
        size = 2 * k
        a_modes = [("a", i) for i in range(1, size + 1)]
        b_modes = [("b", i) for i in range(1, size + 1)]
        for f in range(1, flavors + 1):
            for g in range(1, flavors + 1):
                el = WeylElement.zero()
                for am, bm in zip(a_modes, b_modes):
                    el = el + mono([_flavored(am, f)], [_flavored(am, g)]) \
                        - mono([_flavored(bm, g)], [_flavored(bm, f)])
                out.append(el)
        for f in range(1, flavors + 1):
            for g in range(f, flavors + 1):
                e_el = WeylElement.zero()
                f_el = WeylElement.zero()
                for am, bm in zip(a_modes, b_modes):
                    e_el = e_el + mono([_flavored(am, f)], [_flavored(bm, g)]) \
                        + mono([_flavored(am, g)], [_flavored(bm, f)])
                    f_el = f_el + mono([_flavored(bm, f)], [_flavored(am, g)]) \
                        + mono([_flavored(bm, g)], [_flavored(am, f)])
                out.append(e_el)
                out.append(f_el)
        return out
    raise FockError(f"unknown gauge family {family!r}")
