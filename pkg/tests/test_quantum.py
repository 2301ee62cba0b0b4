import warnings

import pytest
from hypothesis import assume, given, settings

import oracles
from qcqecc import gf, matfq, quantum, repro
from qcqecc.errors import (
    ChainInvalid,
    CosetExponentInvalid,
    NotNested,
    NotSelfOrthogonal,
    ToleranceExceeded,
)
from qcqecc.io import Description
from qcqecc.matfq import MatFq
from qcqecc.qccode import two_gen_so_conditions
from strategies import two_gen


def bundled(name):
    return Description(repro.load(name)).code


def sync_cfg(name):
    return repro.load(name)["sync"]


def brute_order(f: list[int], p: int) -> int:
    """Smallest e with f | x^e - 1 over F_p (f ascending, prime field)."""
    F = oracles.field(p)
    e = 1
    while True:
        xe = [F.neg(1)] + [0] * (e - 1) + [1]
        if oracles.poly_divides(F, f, xe):
            return e
        e += 1


@pytest.mark.parametrize("name,kind,params", [
    # stated parameters of the constructed stabilizer codes
    ("euclidean-18-12-2", "E", "[[18,12,2]]_2"),
    ("euclidean-30-24-2", "E", "[[30,24,2]]_2"),
    ("euclidean-12-8-2-q3", "E", "[[12,8,2]]_3"),
    ("hermitian-6-0-4", "H", "[[6,0,4]]_2"),
    ("hermitian-10-0-4", "H", "[[10,0,4]]_2"),
    ("symplectic-9-2-3", "S", "[[9,2,3]]_2"),
    ("symplectic-9-6-2", "S", "[[9,6,2]]_2"),
    ("symplectic-13-0-5", "S", "[[13,0,5]]_2"),
    ("symplectic-7-0-4-q3", "S", "[[7,0,4]]_3"),
    ("worked-euclidean", "E", "[[18,12,2]]_2"),
    ("worked-hermitian", "H", "[[6,2,2]]_2"),
    ("worked-symplectic", "S", "[[6,3,2]]_2"),
])
def test_stabilizer_parameters(name, kind, params):
    sp = quantum.STABILIZERS[kind](bundled(name))
    assert str(sp) == params
    assert sp.d_status == ("degenerate" if sp.k == 0 else "exact")


def test_not_self_orthogonal_is_rejected():
    with pytest.raises(NotSelfOrthogonal):
        quantum.euclidean_stabilizer(bundled("worked-euclidean-as-printed"))


def test_css_equal_codes_is_degenerate():
    F2 = gf.field_of_order(2)
    c = MatFq(F2, [[1, 1, 1, 0], [0, 1, 1, 1]])
    sp = quantum.css(c, c)
    assert sp.k == 0 and sp.d_status == "degenerate"
    assert sp.d == 2  # smallest of the nonzero weights 3, 2, 3


def test_css_requires_nesting():
    F2 = gf.field_of_order(2)
    with pytest.raises(NotNested):
        quantum.css(MatFq(F2, [[1, 1, 0]]), MatFq(F2, [[1, 0, 0]]))


def test_partial_distance_reports_lower_bound():
    sp = quantum.euclidean_stabilizer(bundled("euclidean-30-24-2"), budget=4, partial=True)
    assert sp.d_status == "lower-bound"
    assert 1 <= sp.d <= 2


@settings(max_examples=100)
@given(two_gen(q=4, max_m=7))
def test_hermitian_dimension_identity(c):
    assume(two_gen_so_conditions(c, "H"))
    sp = quantum.hermitian_stabilizer(c)
    assert sp.k == 2 * c.m - 2 * c.dimension()
    assert sp.q == 2


@settings(max_examples=100)
@given(two_gen(max_m=8))
def test_symplectic_k_matches_rank(c):
    assume(two_gen_so_conditions(c, "S"))
    sp = quantum.symplectic_stabilizer(c)
    F = oracles.field(c.ctx.q)
    assert sp.k == c.m - oracles.rank(F, oracles.qc_rows(F, _products(c)))


def _products(c):
    return [[[int(x) for x in r.vector()] for r in row] for row in c.as_tgen().generator_polys()]


# ---- synchronizable codes ----------------------------------------------------

@pytest.mark.parametrize("name,n,k,tol", [
    ("qsc-q3-t3", 54, 4, 27),  # published parameters
    ("qsc-q5-t2", 50, 10, 25),  # published parameters
    ("qsc-q3-l3", 162, 30, 27),  # ord(f) for deg f = 23 < 27 is 27
])
def test_prime_power_sync_codes(name, n, k, tol):
    cfg = sync_cfg(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", quantum.ConstructionWarning)
        ch = quantum.build_qsc_prime_power(cfg["q"], cfg["t"], *cfg["r"], *cfg["s"], cfg["v1"], cfg["v2"])
    sp = quantum.qsc_from_chain(ch, 0, 0)
    assert (sp.n, sp.k, sp.max_tolerance) == (n, k, tol)
    p = ch.inner.ctx.p
    assert sp.max_tolerance == brute_order([int(x) for x in ch.f.c], p)


def test_misalignment_lengthens_code():
    cfg = sync_cfg("qsc-q5-t2")
    ch = quantum.build_qsc_prime_power(cfg["q"], cfg["t"], *cfg["r"], *cfg["s"], cfg["v1"], cfg["v2"])
    sp = quantum.qsc_from_chain(ch, 3, 21)
    assert (sp.n, sp.k) == (50 + 24, 10)
    assert str(sp) == "(3,21)-[[74,10]]_5"
    with pytest.raises(ToleranceExceeded):
        quantum.qsc_from_chain(ch, 5, 20)
    with pytest.raises(ToleranceExceeded):
        quantum.qsc_from_chain(ch, -1, 0)


def test_equal_exponents_give_no_tolerance():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", quantum.ConstructionWarning)
        ch = quantum.build_qsc_prime_power(5, 2, 6, 9, 6, 9, "x^2", "0")
    assert ch.f.degree == 0
    assert quantum.qsc_from_chain(ch, 0, 0).max_tolerance == 1
    with pytest.raises(ToleranceExceeded):
        quantum.qsc_from_chain(ch, 1, 0)


def test_bound_violations_warn():
    cfg = sync_cfg("qsc-q3-t3")
    with pytest.warns(quantum.ConstructionWarning):
        ch = quantum.build_qsc_prime_power(cfg["q"], cfg["t"], *cfg["r"], *cfg["s"], cfg["v1"], cfg["v2"])
    assert ch.warnings


def test_general_with_l1_matches_prime_power():
    cfg = sync_cfg("qsc-q5-t2")
    a = quantum.build_qsc_prime_power(5, 2, *cfg["r"], *cfg["s"], cfg["v1"], cfg["v2"])
    b = quantum.build_qsc_general(5, 1, 2, {0: cfg["r"]}, {0: cfg["s"]}, cfg["v1"], cfg["v2"])
    assert a.inner == b.inner and a.outer == b.outer and a.f == b.f


def test_small_general_instance():
    # m = 6 over F2: cosets {0}, {1, 2}; f = M_1 = x^2+x+1 of order 3
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        ch = quantum.build_qsc_general(2, 3, 1, {0: (0, 0), 1: (1, 1)}, {0: (0, 0), 1: (0, 0)}, "x", "0")
    assert any(issubclass(x.category, quantum.ConstructionWarning) for x in w)
    sp = quantum.qsc_from_chain(ch, 1, 1)
    assert (sp.n, sp.k, sp.max_tolerance) == (14, 4, 3)
    assert [int(x) for x in ch.f.c] == [1, 1, 1]


def test_general_q7_instance():
    cfg = sync_cfg("qsc-q7-l5")
    ch = quantum.build_qsc_general(cfg["q"], cfg["l"], cfg["t"], cfg["r"], cfg["j"], cfg["v1"], cfg["v2"])
    sp = quantum.qsc_from_chain(ch, 0, 0)
    # rank of C1 and degree formula agree on 212; ord(f) = 245
    assert (sp.n, sp.k, sp.max_tolerance) == (490, 212, 245)
    assert ch.formula_k == 212


def test_coset_exponent_validation():
    with pytest.raises(CosetExponentInvalid):
        quantum.build_qsc_general(3, 3, 1, {0: (1, 2)}, {0: (0, 1)}, "x", "0")
    with pytest.raises(CosetExponentInvalid):
        quantum.build_qsc_general(2, 3, 1, {0: (0, 0)}, {0: (0, 0)}, "x", "0")
    with pytest.raises(CosetExponentInvalid):
        quantum.build_qsc_general(2, 3, 1, {0: (0, 0), 1: (1, 5)}, {0: (0, 0), 1: (0, 0)}, "x", "0")


def test_chain_must_be_nested():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", quantum.ConstructionWarning)
        with pytest.raises(ChainInvalid):
            quantum.build_qsc_general(2, 3, 1, {0: (0, 0), 1: (0, 0)}, {0: (0, 0), 1: (1, 1)}, "x", "0")


def test_chain_contains_its_dual():
    cfg = sync_cfg("qsc-q5-t2")
    ch = quantum.build_qsc_prime_power(5, 2, *cfg["r"], *cfg["s"], cfg["v1"], cfg["v2"])
    g = ch.inner.generator_matrix()
    assert matfq.contains_rows(g, matfq.dual_basis(g, "E"))
    assert matfq.contains_rows(ch.outer.generator_matrix(), g)
