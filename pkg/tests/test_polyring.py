import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qcqecc import gf, matfq
from qcqecc.errors import BothZero, FieldTooLarge, ParseError, ZeroConstantTerm, ZeroPolynomial
from qcqecc.polyring import (
    Poly,
    RingElem,
    bar,
    cyclotomic_coset,
    cyclotomic_cosets,
    divides,
    factor_xm_minus_1,
    gcd,
    is_irreducible,
    ls_product,
    min_poly,
    multiplicative_order,
    ord as poly_ord,
    perp,
    perp_hermitian,
    power_map_q,
    star,
)
from strategies import divisors, ring_elems, vec

F2, F3, F4, F5, F7 = (gf.field_of_order(q) for q in (2, 3, 4, 5, 7))


def P(ctx, s):
    return Poly.parse(ctx, s)


def R(ctx, s, m):
    return RingElem(P(ctx, s), m)


def test_zero_polynomial_has_no_degree():
    z = Poly(F2)
    assert z.degree is None and z.is_zero()
    assert Poly(F3, [1, 2, 0, 0]).degree == 1


def test_ring_reduction():
    assert R(F2, "x^2+x+1", 3).poly == P(F2, "x^2+x+1")
    assert R(F2, "x^3", 3).poly == P(F2, "1")
    assert R(F2, "x^9+x^3+1", 8).poly == P(F2, "x^3+x+1")


def test_ring_multiplication():
    a = R(F3, "2*x^2+1", 5)
    assert a * R(F3, "1", 5) == a
    assert (R(F2, "x+1", 3) * R(F2, "x^2+x+1", 3)).is_zero()


def test_parse_forms():
    assert P(F3, "(1 2 0 1)") == P(F3, "x^3+2*x+1")
    assert P(F4, "(w+1 w 1)") == P(F4, "x^2+w*x+w+1")
    assert P(F2, "0").is_zero()
    with pytest.raises(ParseError):
        P(F2, "x^^2")


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_format_round_trip(q, data):
    ctx = gf.field_of_order(q)
    coeffs = data.draw(st.lists(st.integers(0, q - 1), max_size=9))
    p = Poly(ctx, coeffs)
    assert Poly.parse(ctx, str(p)) == p


def test_gcd_examples():
    f = P(F2, "x^3+x+1")
    assert gcd(f, Poly(F2)) == f.monic()
    g = P(F2, "x^10+x^8+x^6+x^4+x^3+1")
    assert gcd(g, Poly.xm_minus_1(F2, 21)) == g
    with pytest.raises(BothZero):
        gcd(Poly(F2), Poly(F2))


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_gcd_properties(q, data):
    ctx = gf.field_of_order(q)
    a = Poly(ctx, data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=8)))
    b = Poly(ctx, data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=8)))
    if a.is_zero() and b.is_zero():
        return
    d = gcd(a, b)
    F = oracles.field(q)
    assert oracles.poly_divides(F, list(map(int, d.c)), list(map(int, a.c)))
    assert oracles.poly_divides(F, list(map(int, d.c)), list(map(int, b.c)))
    c = Poly(ctx, data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=4)))
    if not c.is_zero():
        assert divides(gcd(c * a, c * b), c * d)


def test_star():
    assert star(P(F2, "x+1")) == P(F2, "x+1")
    assert star(P(F4, "x^2+w*x+1")) == P(F4, "x^2+w*x+1")
    assert star(P(F3, "x^3+2*x+1")) == P(F3, "x^3+2*x^2+1")


def test_bar():
    assert bar(R(F5, "3", 7)) == R(F5, "3", 7)
    assert bar(R(F2, "x", 4)) == R(F2, "x^3", 4)


def test_power_map_q():
    assert power_map_q(P(F4, "w*x+1")) == P(F4, "(w+1)*x+1")
    assert power_map_q(P(F4, "x^3+x+1")) == P(F4, "x^3+x+1")


def test_perp_conventions():
    m = 6
    xm = Poly.xm_minus_1(F3, m)
    assert perp(Poly.constant(F3, 1), m) == xm  # dual of the full space is zero
    assert perp(Poly(F3), m) == Poly.constant(F3, 1)  # dual of the zero code is everything


def test_perp_against_kernel_oracle():
    m = 9
    k = P(F2, "x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1")
    p = perp(k, m)
    G = matfq.circulant(RingElem(k, m), m)
    K = matfq.kernel_basis(G)
    assert matfq.row_space_equal(K, matfq.circulant(RingElem(p, m), m))
    F = oracles.field(2)
    rows = [oracles.shift(vec(RingElem(k, m)), s) for s in range(m)]
    ker = oracles.nullspace(F, rows, m)
    assert oracles.rank(F, ker) == m - p.degree


def test_perp_hermitian_example():
    # F4, m = 3, k = x^2+wx+w+1; the cyclic code <k> and <perp_H(k)> are Hermitian-orthogonal
    m = 3
    k = P(F4, "x^2+w*x+w+1")
    ph = perp_hermitian(k, m)
    F = oracles.field(4)
    a = [oracles.shift(vec(RingElem(k, m)), s) for s in range(m)]
    b = [oracles.shift(vec(RingElem(ph, m)), s) for s in range(m)]
    assert all(oracles.herm(F, u, v) == 0 for u in a for v in b)
    assert oracles.rank(F, a) + oracles.rank(F, b) == m


def test_perp_hermitian_on_subfield_coefficients():
    for s in ("x+1", "x^2+x+1", "x^4+x^3+x^2+x+1"):
        assert perp_hermitian(P(F4, s), 5) == perp(P(F4, s), 5)


def test_divides():
    assert divides(P(F3, "x+1"), Poly(F3))
    for m in range(1, 12):
        assert divides(P(F2, "x+1"), Poly.xm_minus_1(F2, m))
    m = 21
    g = P(F2, "x^10+x^8+x^6+x^4+x^3+1")
    h = Poly.xm_minus_1(F2, m).exact_div(g)
    one = RingElem(Poly.constant(F2, 1), m)
    v1, v2 = R(F2, "x^3+x+1", m), R(F2, "x^3+x^2", m)
    # the one-generator self-orthogonality clause h | g-bar (v1 v1-bar + v2 v2-bar)
    assert divides(h, (bar(RingElem(g, m)) * (v1 * bar(v1) + v2 * bar(v2))).poly)
    assert not divides(h, (bar(RingElem(g, m)) * one).poly)


def test_factorisation_examples():
    f = factor_xm_minus_1(F2, 3)
    assert f == [(P(F2, "x+1"), 1), (P(F2, "x^2+x+1"), 1)]
    assert factor_xm_minus_1(F3, 9) == [(P(F3, "x+2"), 9)]
    f7 = factor_xm_minus_1(F7, 5)
    assert f7 == [(P(F7, "x+6"), 1), (P(F7, "x^4+x^3+x^2+x+1"), 1)]


def _splits_in_range(q, m):
    p = gf.field_of_order(q).p
    while m % p == 0:
        m //= p
    return q ** multiplicative_order(q, m) <= 1 << 16


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
@pytest.mark.parametrize("m", list(range(1, 25)))
def test_factorisation_multiplies_back(q, m):
    ctx = gf.field_of_order(q)
    if not _splits_in_range(q, m):
        with pytest.raises(FieldTooLarge):
            factor_xm_minus_1(ctx, m)
        return
    prod = Poly.constant(ctx, 1)
    for f, e in factor_xm_minus_1(ctx, m):
        assert is_irreducible(f) and f == f.monic()
        prod = prod * f ** e
    assert prod == Poly.xm_minus_1(ctx, m)


def test_cosets():
    c = cyclotomic_coset(1, 7, 5)
    assert set(c.members) == {1, 2, 3, 4} and c.rep == 1
    reps = [c.rep for c in cyclotomic_cosets(2, 15)]
    assert reps == [0, 1, 3, 5, 7]
    for cs in cyclotomic_cosets(3, 26):
        assert all((3 * x) % 26 in cs.members for x in cs.members)
        assert cs.rep == min(cs.members)


def test_min_poly():
    assert min_poly(0, 5, F7) == P(F7, "x-1")
    assert min_poly(1, 5, F7) == P(F7, "x^4+x^3+x^2+x+1")
    for q, l in ((2, 15), (3, 13), (4, 5), (5, 12)):
        ctx = gf.field_of_order(q)
        prod = Poly.constant(ctx, 1)
        for c in cyclotomic_cosets(q, l):
            prod = prod * min_poly(c.rep, l, ctx)
        assert prod == Poly.xm_minus_1(ctx, l)


def test_order():
    assert poly_ord(P(F2, "x+1")) == 1
    assert poly_ord(P(F2, "x^2+x+1")) == 3
    xm1 = P(F3, "x-1")
    assert poly_ord(xm1 ** 10) == 27
    with pytest.raises(ZeroPolynomial):
        poly_ord(Poly(F3))
    with pytest.raises(ZeroConstantTerm):
        poly_ord(P(F3, "x^2+x"))


@pytest.mark.parametrize("p,t", [(2, 4), (3, 3), (5, 2), (7, 2)])
def test_order_of_powers_of_x_minus_1_closed_form(p, t):
    ctx = gf.field_of_order(p)
    xm1 = Poly.from_ints(ctx, [p - 1, 1])
    for e in range(1, p ** t + 1):
        expect = 1
        while expect < e:
            expect *= p
        assert poly_ord(xm1 ** e) == expect


def test_order_brute_force():
    # least tau with f | x^tau - 1 by trying tau = 1, 2, ...
    F = oracles.field(3)
    for s in ("x^2+1", "x^2+x+2", "x^3+2*x+1", "x^4+x+2"):
        f = P(F3, s)
        tau = next(t for t in range(1, 200)
                   if oracles.poly_divides(F, list(map(int, f.c)), [2] + [0] * (t - 1) + [1]))
        assert poly_ord(f) == tau


def test_ls_product_small():
    u = (R(F2, "1", 2), R(F2, "x", 2))
    assert ls_product(u, u).is_zero()
    z = (RingElem(Poly(F3), 4),)
    assert ls_product(z, (R(F3, "x+2", 4),)).is_zero()


@settings(max_examples=200)
@given(st.sampled_from([2, 3]), st.integers(1, 8), st.integers(1, 3), st.data())
def test_ls_product_equals_shift_orthogonality(q, m, l, data):
    ctx = gf.field_of_order(q)
    F = oracles.field(q)
    u = [data.draw(ring_elems(ctx, m)) for _ in range(l)]
    v = [data.draw(ring_elems(ctx, m)) for _ in range(l)]
    if data.draw(st.booleans()):
        # bias towards orthogonal pairs: take v from the dual of the shifts of u
        rows = [sum((oracles.shift(vec(a), s) for a in u), []) for s in range(m)]
        ns = oracles.nullspace(F, rows, l * m)
        if ns:
            pick = ns[data.draw(st.integers(0, len(ns) - 1))]
            v = [RingElem(Poly(ctx, pick[j * m:(j + 1) * m]), m) for j in range(l)]
    brute = all(
        oracles.dot(F, sum((oracles.shift(vec(a), s) for a in u), []), sum((vec(b) for b in v), [])) == 0
        for s in range(m))
    assert ls_product(u, v).is_zero() == brute


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 12), st.data())
def test_dimension_law(q, m, data):
    ctx = gf.field_of_order(q)
    g = data.draw(divisors(ctx, m))
    assert matfq.rank(matfq.circulant(RingElem(g, m), m)) == m - g.degree
    k = data.draw(ring_elems(ctx, m))
    expect = m - (m if k.is_zero() else gcd(k.poly, Poly.xm_minus_1(ctx, m)).degree)
    assert matfq.rank(matfq.circulant(k, m)) == expect
