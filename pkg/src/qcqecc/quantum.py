"""Quantum stabilizer and quantum synchronizable codes from two-generator QC codes."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from . import distance, gf, matfq
from .errors import (
    BudgetExceeded,
    ChainInvalid,
    CosetExponentInvalid,
    FormulaRankMismatch,
    NotNested,
    NotSelfOrthogonal,
    ToleranceExceeded,
)
from .polyring import Poly, RingElem, cyclotomic_cosets, gcd_many, min_poly, ord as poly_ord
from .qccode import TwoGenQc, dual, is_dual_containing, two_gen_so_conditions

NOT_COMPUTED = "not computed"


class ConstructionWarning(UserWarning):
    """A stated parameter inequality fails although the construction still verifies."""


@dataclass
class StabilizerParams:
    """Parameters [[n, k, d]]_q of a stabilizer code.

    ``d_status`` is "exact", "degenerate" (k = 0: minimum nonzero weight of the
    larger code) or "lower-bound" (the search budget ran out).
    """

    n: int
    k: int
    d: int | None
    q: int
    construction: str
    d_status: str = "exact"
    provenance: dict = field(default_factory=dict)

    def __str__(self):
        d = "?" if self.d is None else str(self.d)
        return f"[[{self.n},{self.k},{d}]]_{self.q}"

    def as_tuple(self):
        return (self.n, self.k, self.d)


def _basis(code):
    return matfq.rref_basis(code if isinstance(code, matfq.MatFq) else code.generator_matrix())


def _difference(big, small, weight, budget, partial):
    try:
        res = distance.min_weight(big, small, weight, budget)
        return res.value, ("degenerate" if res.degenerate else "exact")
    except BudgetExceeded as exc:
        if not partial:
            raise
        return exc.lower_bound, "lower-bound"


def _combine(parts):
    vals = [v for v, _ in parts]
    status = {s for _, s in parts}
    d = min(vals)
    if "lower-bound" in status:
        return d, "lower-bound"
    if "degenerate" in status:
        return d, "degenerate"
    return d, "exact"


def css(c1, c2, budget: int = distance.DEFAULT_BUDGET, partial: bool = False,
        provenance: dict | None = None) -> StabilizerParams:
    """CSS code from nested codes c2 inside c1 (Euclidean duals)."""
    b1, b2 = _basis(c1), _basis(c2)
    if b1.cols != b2.cols or not matfq.contains_rows(b1, b2):
        raise NotNested("second code is not contained in the first")
    n = b1.cols
    k = b1.rows - b2.rows
    d2p = matfq.rref_basis(matfq.kernel_basis(b2))
    d1p = matfq.rref_basis(matfq.kernel_basis(b1))
    d, status = _combine([
        _difference(b1, b2, distance.HAMMING, budget, partial),
        _difference(d2p, d1p, distance.HAMMING, budget, partial),
    ])
    return StabilizerParams(n, k, d, b1.ctx.q, "E-CSS", status, dict(provenance or {}))


def euclidean_stabilizer(c: TwoGenQc, budget: int = distance.DEFAULT_BUDGET,
                         partial: bool = False) -> StabilizerParams:
    """CSS code from a Euclidean self-orthogonal code C, using C inside its dual."""
    if not two_gen_so_conditions(c, "E").holds:
        raise NotSelfOrthogonal("code is not Euclidean self-orthogonal")
    sp = css(dual(c, "E"), c, budget, partial, provenance=c.params())
    formula = 2 * (c.g1.degree + c.g2.degree - c.m)
    if sp.k != formula:
        raise FormulaRankMismatch(f"k = {sp.k} but degree formula gives {formula}")
    return sp


def hermitian_stabilizer(c: TwoGenQc, budget: int = distance.DEFAULT_BUDGET,
                         partial: bool = False) -> StabilizerParams:
    """Stabilizer code over F_q from a Hermitian self-orthogonal code over F_{q^2}."""
    if not two_gen_so_conditions(c, "H").holds:
        raise NotSelfOrthogonal("code is not Hermitian self-orthogonal")
    g = c.generator_matrix()
    n = g.cols
    k = n - 2 * c.dimension()
    formula = 2 * (c.g1.degree + c.g2.degree - c.m)
    if k != formula:
        raise FormulaRankMismatch(f"k = {k} but degree formula gives {formula}")
    d, status = _difference(matfq.dual_basis(g, "H"), g, distance.HAMMING, budget, partial)
    return StabilizerParams(n, k, d, c.ctx.sub_q, "H", status, c.params())


def symplectic_stabilizer(c: TwoGenQc, budget: int = distance.DEFAULT_BUDGET,
                          partial: bool = False) -> StabilizerParams:
    """Stabilizer code of length m from a symplectic self-orthogonal code of length 2m."""
    if not two_gen_so_conditions(c, "S").holds:
        raise NotSelfOrthogonal("code is not symplectic self-orthogonal")
    g = c.generator_matrix()
    n = g.cols // 2
    k = n - c.dimension()
    formula = c.g1.degree + c.g2.degree - c.m
    if k != formula:
        raise FormulaRankMismatch(f"k = {k} but degree formula gives {formula}")
    d, status = _difference(matfq.dual_basis(g, "S"), g, distance.SYMPLECTIC, budget, partial)
    return StabilizerParams(n, k, d, c.ctx.q, "S", status, c.params())


STABILIZERS = {"E": euclidean_stabilizer, "H": hermitian_stabilizer, "S": symplectic_stabilizer}


# ---- quantum synchronizable codes -------------------------------------------

@dataclass
class SyncParams:
    """Parameters (a_l, a_r)-[[n, k]]_q of a quantum synchronizable code."""

    a_l: int
    a_r: int
    n: int
    k: int
    q: int
    max_tolerance: int
    phase_floor: int | str = NOT_COMPUTED
    bit_floor: int | str = NOT_COMPUTED

    def __str__(self):
        return f"({self.a_l},{self.a_r})-[[{self.n},{self.k}]]_{self.q}"


@dataclass
class QscChain:
    """Nested pair C1^perp <= C1 <= C2 with the polynomial data fixing the tolerance.

    ``eta`` is the gcd of column ``column`` of C1's generators and ``f`` the
    cofactor with eta = f * (gcd of the same column of C2).
    """

    inner: TwoGenQc
    outer: TwoGenQc
    eta: Poly
    f: Poly
    column: int = 1
    warnings: list = field(default_factory=list)
    formula_k: int | None = None
    expected_order: int | None = None

    @property
    def m(self) -> int:
        return self.inner.m


def _column(c: TwoGenQc, j: int):
    m = c.m
    one = RingElem(Poly.constant(c.ctx, 1), m)
    a1 = (RingElem(c.g1, m) * (one if j == 1 else c.v1)).poly
    a2 = (RingElem(c.g2, m) * (c.v2 if j == 1 else one)).poly
    return a1, a2


def _column_gcd(c: TwoGenQc, j: int) -> Poly:
    a1, a2 = _column(c, j)
    return gcd_many(Poly.xm_minus_1(c.ctx, c.m), a1, a2)


def verify_chain(chain: QscChain) -> None:
    """Membership-oracle check of C1^perp <= C1 <= C2 and eta = f * b."""
    c1, c2 = chain.inner, chain.outer
    if c1.m != c2.m or c1.ctx is not c2.ctx:
        raise ChainInvalid("inner and outer codes live in different rings")
    g1 = c1.generator_matrix()
    if not matfq.contains_rows(g1, matfq.dual_basis(g1, "E")):
        raise ChainInvalid("inner code does not contain its Euclidean dual")
    if not matfq.contains_rows(c2.generator_matrix(), g1):
        raise ChainInvalid("inner code is not contained in the outer code")
    eta = _column_gcd(c1, chain.column)
    b = _column_gcd(c2, chain.column)
    if eta != chain.eta or (chain.f * b).monic() != eta:
        raise ChainInvalid("eta is not f times the outer column gcd")


def _floor(code, budget):
    try:
        d = distance.min_distance(code, distance.HAMMING, budget)
    except BudgetExceeded:
        return NOT_COMPUTED
    return (d - 1) // 2


def qsc_from_chain(chain: QscChain, a_l: int, a_r: int,
                   budget: int = distance.DEFAULT_BUDGET) -> SyncParams:
    if a_l < 0 or a_r < 0:
        raise ToleranceExceeded("misalignments must be non-negative")
    verify_chain(chain)
    tol = poly_ord(chain.f, bound=max(chain.m * chain.inner.ctx.q, 1 << 20))
    if a_l + a_r >= tol:
        raise ToleranceExceeded(f"a_l + a_r = {a_l + a_r} is not below ord(f) = {tol}")
    m = chain.m
    k1 = chain.inner.dimension()
    q = chain.inner.ctx.q
    phase = bit = NOT_COMPUTED
    if q ** k1 <= budget and q ** chain.outer.dimension() <= budget:
        phase = _floor(chain.inner, budget)
        bit = _floor(chain.outer, budget)
    return SyncParams(a_l, a_r, 2 * m + a_l + a_r, 2 * (k1 - m), q, tol, phase, bit)


def _warn(chain_warnings: list, msg: str):
    chain_warnings.append(msg)
    warnings.warn(msg, ConstructionWarning, stacklevel=3)


def _ring(ctx, v, m):
    if isinstance(v, str):
        v = Poly.parse(ctx, v)
    return RingElem(v, m)


def build_qsc_prime_power(q: int, t: int, r1: int, r2: int, s1: int, s2: int, v1, v2) -> QscChain:
    """Chain for block length m = p^t with generators powers of (x - 1)."""
    ctx = gf.field_of_order(q)
    p = ctx.p
    m = p ** t
    notes: list[str] = []
    if not 0 < r1 < r2 < (m - 1) / 2:
        _warn(notes, f"exponents r = ({r1}, {r2}) violate 0 < r1 < r2 < (p^t - 1)/2 = {(m - 1) / 2}")
    if not (0 < s1 < r1 and s1 < s2 < r2):
        _warn(notes, f"exponents s = ({s1}, {s2}) violate 0 < s1 < r1 and s1 < s2 < r2")
    if not r1 - s1 > p ** (t - 1):
        _warn(notes, f"r1 - s1 = {r1 - s1} is not above p^(t-1) = {p ** (t - 1)}")
    for e in (r1, r2, s1, s2):
        if not 0 <= e <= m:
            raise ChainInvalid(f"exponent {e} outside [0, {m}]")
    xm1 = Poly.from_ints(ctx, [ctx.neg(1), 1])
    v1, v2 = _ring(ctx, v1, m), _ring(ctx, v2, m)
    inner = TwoGenQc(ctx, m, xm1 ** r1, xm1 ** r2, v1, v2)
    outer = TwoGenQc(ctx, m, xm1 ** s1, xm1 ** s2, v1, v2)
    f = xm1 ** (r1 - s1) if r1 >= s1 else Poly.constant(ctx, 1)
    chain = QscChain(inner, outer, _column_gcd(inner, 1), f, 1, notes,
                     formula_k=2 * m - 2 * r1 - 2 * r2, expected_order=m)
    verify_chain(chain)
    k = 2 * (inner.dimension() - m)
    if k != chain.formula_k:
        raise FormulaRankMismatch(f"k from rank is {k}, formula gives {chain.formula_k}")
    return chain


def build_qsc_general(q: int, l: int, t: int, exps_r: dict, exps_j: dict, v1, v2) -> QscChain:
    """Chain for m = l p^t with generators products of minimal polynomials M_s.

    ``exps_r`` and ``exps_j`` map each coset representative s to the exponent
    pairs of M_s in (g1, g2) for the inner and outer code respectively.
    """
    ctx = gf.field_of_order(q)
    p = ctx.p
    if math.gcd(l, p) != 1:
        raise CosetExponentInvalid(f"l = {l} must be coprime to the characteristic {p}")
    pt = p ** t
    m = l * pt
    cosets = cyclotomic_cosets(q, l)
    reps = [c.rep for c in cosets]
    size = {c.rep: c.size for c in cosets}
    rep_of = {x: c.rep for c in cosets for x in c.members}
    exps_r = {int(k): tuple(v) for k, v in exps_r.items()}
    exps_j = {int(k): tuple(v) for k, v in exps_j.items()}
    for name, ex in (("r", exps_r), ("j", exps_j)):
        if sorted(ex) != reps:
            raise CosetExponentInvalid(f"{name}-exponents must be given for representatives {reps}")
        for s, pair in ex.items():
            if len(pair) != 2 or not all(0 <= e <= pt for e in pair):
                raise CosetExponentInvalid(f"{name}-exponents for M_{s} must be two integers in [0, {pt}]")
    notes: list[str] = []
    for s in reps:
        r1s, r2s = exps_r[s]
        neg = rep_of[(-s) % l]
        if not 0 < r1s < r2s < pt - exps_r[neg][1]:
            _warn(notes, f"coset {s}: 0 < r1 < r2 < p^t - r2(-s) fails for {exps_r[s]}")
        j1s, j2s = exps_j[s]
        if not (0 < j1s < r1s and j1s < j2s < r2s):
            _warn(notes, f"coset {s}: 0 < j1 < r1, j1 < j2 < r2 fails for {exps_j[s]}")
    diffs = {s: exps_r[s][0] - exps_j[s][0] for s in reps}
    ok = any(
        math.gcd(s, l) == 1 and (
            diffs[s] > p ** (t - 1)
            or (diffs[s] > 0 and any(u != s and diffs[u] > p ** (t - 1) for u in reps)))
        for s in reps)
    if not ok:
        _warn(notes, "no coset satisfies the order condition on r1 - j1")
    M = {s: min_poly(s, l, ctx) for s in reps}

    def prod(ex, i):
        out = Poly.constant(ctx, 1)
        for s in reps:
            out = out * M[s] ** ex[s][i]
        return out

    v1, v2 = _ring(ctx, v1, m), _ring(ctx, v2, m)
    inner = TwoGenQc(ctx, m, prod(exps_r, 0), prod(exps_r, 1), v1, v2)
    outer = TwoGenQc(ctx, m, prod(exps_j, 0), prod(exps_j, 1), v1, v2)
    f = Poly.constant(ctx, 1)
    for s in reps:
        if diffs[s] < 0:
            raise ChainInvalid(f"coset {s}: inner exponent below outer exponent")
        f = f * M[s] ** diffs[s]
    formula_k = 2 * m - 2 * sum((exps_r[s][0] + exps_r[s][1]) * size[s] for s in reps)
    chain = QscChain(inner, outer, _column_gcd(inner, 1), f, 1, notes,
                     formula_k=formula_k, expected_order=m)
    verify_chain(chain)
    k = 2 * (inner.dimension() - m)
    if k != formula_k:
        raise FormulaRankMismatch(f"k from rank is {k}, formula gives {formula_k}")
    return chain
