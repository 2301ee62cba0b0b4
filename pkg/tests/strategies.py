"""Hypothesis strategies for random codes over small fields."""

from hypothesis import strategies as st

from qcqecc import gf
from qcqecc.polyring import Poly, RingElem, factor_xm_minus_1, gcd, gcd_many
from qcqecc.qccode import TGenQc, TwoGenQc

FIELDS = (2, 3, 4, 5)


def vec(r: RingElem) -> list[int]:
    return [int(x) for x in r.vector()]


@st.composite
def ring_elems(draw, ctx, m, nonzero=False):
    coeffs = draw(st.lists(st.integers(0, ctx.q - 1), min_size=m, max_size=m))
    if nonzero and not any(coeffs):
        coeffs[draw(st.integers(0, m - 1))] = 1
    return RingElem(Poly(ctx, coeffs), m)


_FACTORS = {}


def factors(ctx, m):
    key = (ctx.q, m)
    if key not in _FACTORS:
        _FACTORS[key] = factor_xm_minus_1(ctx, m)
    return _FACTORS[key]


@st.composite
def divisors(draw, ctx, m):
    g = Poly.constant(ctx, 1)
    for f, e in factors(ctx, m):
        g = g * f ** draw(st.integers(0, e))
    return g


@st.composite
def two_gen(draw, q=None, max_m=12):
    ctx = gf.field_of_order(q if q is not None else draw(st.sampled_from(FIELDS)))
    m = draw(st.integers(1, max_m))
    g1 = draw(divisors(ctx, m))
    g2 = draw(divisors(ctx, m))
    v1 = draw(ring_elems(ctx, m))
    v2 = draw(ring_elems(ctx, m))
    d = (v1 * v2 - 1).poly
    if d.is_zero() or gcd(d, Poly.xm_minus_1(ctx, m)).degree != 0:
        v2 = RingElem(Poly(ctx), m)
    return TwoGenQc(ctx, m, g1, g2, v1, v2)


@st.composite
def t_gen(draw, q=None, max_m=9, max_l=3, max_t=2):
    ctx = gf.field_of_order(q if q is not None else draw(st.sampled_from(FIELDS)))
    m = draw(st.integers(1, max_m))
    l = draw(st.integers(1, max_l))
    t = draw(st.integers(1, max_t))
    xm = Poly.xm_minus_1(ctx, m)
    rows = []
    for _ in range(t):
        g = draw(divisors(ctx, m))
        ks = [draw(ring_elems(ctx, m)) for _ in range(l)]
        if gcd_many(xm.exact_div(g), *[k.poly for k in ks]).degree != 0:
            ks[0] = RingElem(Poly.constant(ctx, 1), m)
        rows.append((g, ks))
    return TGenQc(ctx, m, rows)
