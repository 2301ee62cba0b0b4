"""Polynomials over F_q and the residue ring R = F_q[x]/(x^m - 1).

Besides plain polynomial arithmetic this module holds the dualisation
operators used throughout the package (reciprocal, bar map, coefficientwise
Frobenius, Euclidean and Hermitian dual generators), the Ling-Sole product,
cyclotomic cosets, minimal polynomials, the factorisation of x^m - 1 and the
order of a polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import gf
from .errors import (
    BothZero,
    DivisorZero,
    LengthMismatch,
    OrderBoundExceeded,
    ParseError,
    RootOfUnityUnavailable,
    ZeroConstantTerm,
    ZeroLength,
    ZeroPolynomial,
)

ORDER_CAP = 1 << 20


def _as_codes(ctx: gf.GF, coeffs) -> np.ndarray:
    out = []
    for c in coeffs:
        if isinstance(c, gf.FieldElem):
            ctx.check(c.ctx)
            out.append(c.code)
        else:
            out.append(int(c))
    arr = np.array(out, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= ctx.q):
        raise ValueError("element code out of range")
    return arr


def _trimmed(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


class Poly:
    """Univariate polynomial over a finite field, ascending coefficient codes.

    The zero polynomial has an empty coefficient array and ``degree`` None.
    """

    __slots__ = ("ctx", "c", "_hash")

    def __init__(self, ctx: gf.GF, coeffs=()):
        self.ctx = ctx
        arr = coeffs if isinstance(coeffs, np.ndarray) else _as_codes(ctx, coeffs)
        arr = np.array(_trimmed(arr.astype(np.int64, copy=False)))
        arr.flags.writeable = False
        self.c = arr
        self._hash = None

    # ---- constructors ---------------------------------------------------

    @classmethod
    def from_ints(cls, ctx: gf.GF, ints) -> "Poly":
        """Integers taken modulo p (prime-subfield coefficients)."""
        return cls(ctx, np.array([int(i) % ctx.p for i in ints], dtype=np.int64))

    @classmethod
    def constant(cls, ctx: gf.GF, c) -> "Poly":
        code = ctx(c).code
        return cls(ctx, np.array([code], dtype=np.int64))

    @classmethod
    def monomial(cls, ctx: gf.GF, k: int, c=1) -> "Poly":
        a = np.zeros(k + 1, dtype=np.int64)
        a[k] = ctx(c).code
        return cls(ctx, a)

    @classmethod
    def x(cls, ctx: gf.GF) -> "Poly":
        return cls.monomial(ctx, 1)

    @classmethod
    def xm_minus_1(cls, ctx: gf.GF, m: int) -> "Poly":
        a = np.zeros(m + 1, dtype=np.int64)
        a[m] = 1
        a[0] = ctx.neg(1)
        return cls(ctx, a)

    @classmethod
    def parse(cls, ctx: gf.GF, text: str) -> "Poly":
        """Parse ``"(1 0 2 1)"`` (ascending list) or ``"x^3+2*x+1"``."""
        s = text.strip()
        if s.startswith("(") and s.endswith(")") and "x" not in s:
            inner = s[1:-1].split()
            if not inner:
                return cls(ctx)
            return cls(ctx, [gf.parse_elem(ctx, tok).code for tok in inner])
        terms = gf.parse_terms(ctx, s, var="x")
        if not terms:
            return cls(ctx)
        a = np.zeros(max(terms) + 1, dtype=np.int64)
        for k, c in terms.items():
            a[k] = c
        return cls(ctx, a)

    # ---- basic properties -----------------------------------------------

    @property
    def degree(self) -> int | None:
        return None if self.c.size == 0 else self.c.size - 1

    def is_zero(self) -> bool:
        return self.c.size == 0

    def is_one(self) -> bool:
        return self.c.size == 1 and self.c[0] == 1

    @property
    def lead(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return int(self.c[-1])

    def coeff(self, i: int) -> gf.FieldElem:
        return self.ctx.elem(int(self.c[i]) if 0 <= i < self.c.size else 0)

    @property
    def coeffs(self) -> tuple[gf.FieldElem, ...]:
        return tuple(self.ctx.elem(int(v)) for v in self.c)

    def padded(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=np.int64)
        out[: self.c.size] = self.c[:n]
        return out

    def __call__(self, a):
        a = self.ctx(a).code
        acc = 0
        for v in self.c[::-1]:
            acc = self.ctx.add(self.ctx.mul(acc, a), int(v))
        return self.ctx.elem(acc)

    # ---- arithmetic -----------------------------------------------------

    def _coerce(self, b) -> "Poly":
        if isinstance(b, Poly):
            self.ctx.check(b.ctx)
            return b
        if isinstance(b, RingElem):
            return self._coerce(b.poly)
        return Poly.constant(self.ctx, b)

    def __add__(self, b):
        b = self._coerce(b)
        n = max(self.c.size, b.c.size)
        return Poly(self.ctx, self.ctx.vadd(self.padded(n), b.padded(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, self.ctx.vneg(self.c))

    def __sub__(self, b):
        b = self._coerce(b)
        n = max(self.c.size, b.c.size)
        return Poly(self.ctx, self.ctx.vsub(self.padded(n), b.padded(n)))

    def __rsub__(self, b):
        return self._coerce(b) - self

    def __mul__(self, b):
        b = self._coerce(b)
        return Poly(self.ctx, _convolve(self.ctx, self.c, b.c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> "Poly":
        code = self.ctx(c).code if not isinstance(c, (int, np.integer)) else int(c)
        return Poly(self.ctx, self.ctx.vmul(self.c, code))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        return self.scale(self.ctx.inv(self.lead))

    def __divmod__(self, b):
        b = self._coerce(b)
        if b.is_zero():
            raise DivisorZero("division by the zero polynomial")
        ctx = self.ctx
        db = b.c.size - 1
        r = self.c.copy()
        if r.size <= db:
            return Poly(ctx), Poly(ctx, r)
        quo = np.zeros(r.size - db, dtype=np.int64)
        inv_lead = ctx.inv(b.lead)
        bc = b.c
        for i in range(r.size - 1, db - 1, -1):
            top = int(r[i])
            if top:
                f = ctx.mul(top, inv_lead)
                quo[i - db] = f
                r[i - db: i + 1] = ctx.vsub(r[i - db: i + 1], ctx.vmul(bc, f))
        return Poly(ctx, quo), Poly(ctx, r[:db])

    def __floordiv__(self, b):
        return divmod(self, b)[0]

    def __mod__(self, b):
        return divmod(self, b)[1]

    def exact_div(self, b) -> "Poly":
        q, r = divmod(self, b)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __eq__(self, b):
        if isinstance(b, Poly):
            return (self.ctx.p, self.ctx.gamma) == (b.ctx.p, b.ctx.gamma) and np.array_equal(self.c, b.c)
        if isinstance(b, (int, gf.FieldElem)):
            return self == Poly.constant(self.ctx, b)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.p, self.ctx.gamma, self.c.tobytes()))
        return self._hash

    def __lt__(self, b: "Poly"):
        return self.sort_key() < b.sort_key()

    def sort_key(self):
        return (self.c.size, tuple(int(v) for v in self.c[::-1]))

    # ---- text -----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r} over {self.ctx!r})"

    def to_list_str(self) -> str:
        return "(" + " ".join(self.ctx.format(int(v)) for v in self.c) + ")"


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.c.size - 1, -1, -1):
        c = int(f.c[k])
        if not c:
            continue
        cs = f.ctx.format(c)
        if k == 0:
            terms.append(cs)
            continue
        if "+" in cs:
            cs = f"({cs})"
        xs = "x" if k == 1 else f"x^{k}"
        terms.append(xs if c == 1 else f"{cs}*{xs}")
    return "+".join(terms)


def _convolve(ctx: gf.GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    if ctx.gamma == 1:
        return np.convolve(a, b) % ctx.p
    if b.size > a.size:
        a, b = b, a
    out = np.zeros(a.size + b.size - 1, dtype=np.int64)
    for j, v in enumerate(b.tolist()):
        if v:
            out[j: j + a.size] = ctx.vadd(out[j: j + a.size], ctx.vmul(a, v))
    return out


# ---- polynomial-level operations ------------------------------------------

def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcd_many(*polys: Poly) -> Poly:
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise BothZero("gcd of zero polynomials")
    return reduce(gcd, nonzero[1:], nonzero[0].monic())


def divides(a: Poly, b) -> bool:
    if isinstance(b, RingElem):
        b = b.poly
    if a.is_zero():
        raise DivisorZero("divisibility by the zero polynomial")
    return (b % a).is_zero()


def star(k: Poly) -> Poly:
    """Reciprocal polynomial x^deg(k) k(1/x)."""
    if isinstance(k, RingElem):
        k = k.poly
    if k.is_zero():
        raise ZeroPolynomial("reciprocal of the zero polynomial")
    return Poly(k.ctx, k.c[::-1].copy())


def power_map_q(k):
    """Apply a -> a^q to every coefficient (q^2 = field order)."""
    if isinstance(k, RingElem):
        return RingElem(power_map_q(k.poly), k.m)
    return Poly(k.ctx, k.ctx.vfrob(k.c))


def is_irreducible(f: Poly) -> bool:
    """Ben-Or test: gcd(x^(q^i) - x, f) = 1 for i <= deg f / 2."""
    n = f.degree
    if n is None or n < 1:
        return False
    x = Poly.x(f.ctx)
    h = x % f
    for _ in range(n // 2):
        h = powmod(h, f.ctx.q, f)
        if not gcd(h - x, f).is_one():
            return False
    return True


def powmod(a: Poly, e: int, f: Poly) -> Poly:
    out = Poly.constant(a.ctx, 1) % f
    base = a % f
    while e:
        if e & 1:
            out = (out * base) % f
        base = (base * base) % f
        e >>= 1
    return out


# ---- the ring R = F_q[x]/(x^m - 1) -----------------------------------------

def _fold(ctx: gf.GF, a: np.ndarray, m: int) -> np.ndarray:
    if a.size <= m:
        out = np.zeros(m, dtype=np.int64)
        out[: a.size] = a
        return out
    pad = (-a.size) % m
    blocks = np.concatenate([a, np.zeros(pad, dtype=np.int64)]).reshape(-1, m)
    return ctx.vsum(blocks, axis=0)


class RingElem:
    """Residue class of a polynomial modulo x^m - 1."""

    __slots__ = ("poly", "m")

    def __init__(self, poly: Poly, m: int):
        if m <= 0:
            raise ZeroLength("block length must be positive")
        if isinstance(poly, RingElem):
            poly = poly.poly
        self.m = m
        self.poly = poly if (poly.c.size <= m) else Poly(poly.ctx, _fold(poly.ctx, poly.c, m))

    @classmethod
    def from_vector(cls, ctx: gf.GF, vec, m: int) -> "RingElem":
        return cls(Poly(ctx, np.asarray(vec, dtype=np.int64)), m)

    @property
    def ctx(self) -> gf.GF:
        return self.poly.ctx

    def vector(self) -> np.ndarray:
        return self.poly.padded(self.m)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def _coerce(self, b) -> "RingElem":
        if isinstance(b, RingElem):
            if b.m != self.m:
                raise LengthMismatch(f"ring lengths {self.m} and {b.m} differ")
            self.ctx.check(b.ctx)
            return b
        if isinstance(b, Poly):
            return RingElem(b, self.m)
        return RingElem(Poly.constant(self.ctx, b), self.m)

    def __add__(self, b):
        return RingElem(self.poly + self._coerce(b).poly, self.m)

    __radd__ = __add__

    def __sub__(self, b):
        return RingElem(self.poly - self._coerce(b).poly, self.m)

    def __rsub__(self, b):
        return self._coerce(b) - self

    def __neg__(self):
        return RingElem(-self.poly, self.m)

    def __mul__(self, b):
        return RingElem(self.poly * self._coerce(b).poly, self.m)

    __rmul__ = __mul__

    def __eq__(self, b):
        if isinstance(b, RingElem):
            return self.m == b.m and self.poly == b.poly
        if isinstance(b, (Poly, int, gf.FieldElem)):
            return self == self._coerce(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.poly))

    def bar(self) -> "RingElem":
        return bar(self)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"RingElem({self.poly}, m={self.m})"


def ring_new(coeffs, m: int, ctx: gf.GF | None = None) -> RingElem:
    """Residue class of the polynomial with the given ascending coefficients."""
    if isinstance(coeffs, Poly):
        return RingElem(coeffs, m)
    coeffs = list(coeffs)
    if ctx is None:
        if not coeffs or not isinstance(coeffs[0], gf.FieldElem):
            raise ValueError("field context required")
        ctx = coeffs[0].ctx
    return RingElem(Poly(ctx, coeffs), m)


def mul_mod(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def bar(k: RingElem) -> RingElem:
    """k(x^-1) mod x^m - 1: coefficient i moves to (m - i) mod m."""
    v = k.vector()
    out = np.concatenate([v[:1], v[1:][::-1]])
    return RingElem(Poly(k.ctx, out), k.m)


def perp(k, m: int | None = None) -> Poly:
    """Generator polynomial of the Euclidean dual of the cyclic code <k>.

    Returned as a monic divisor of x^m - 1 (possibly x^m - 1 itself, the
    generator of the zero code); ``perp(0) = 1``.
    """
    if isinstance(k, RingElem):
        m = k.m
        k = k.poly
    ctx = k.ctx
    xm = Poly.xm_minus_1(ctx, m)
    g = xm if k.is_zero() else gcd(k, xm)
    f = xm.exact_div(g)
    f0 = int(f.c[0])
    return star(f).scale(ctx.inv(f0)).monic()


def perp_hermitian(k, m: int | None = None) -> Poly:
    """Generator polynomial of the Hermitian dual of <k> over GF(q^2)."""
    if isinstance(k, RingElem):
        m = k.m
        k = k.poly
    a = perp(power_map_q(k), m)
    b = power_map_q(perp(k, m))
    assert a == b, "Frobenius does not commute with dualisation"
    return a


def ls_product(u, v) -> RingElem:
    """Sum of u_i * bar(v_i) over the components."""
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise LengthMismatch("component counts differ")
    if not u:
        raise LengthMismatch("empty tuples")
    acc = RingElem(Poly(u[0].ctx), u[0].m)
    for a, b in zip(u, v):
        acc = acc + a * bar(b)
    return acc


def cyclic_generator(k, m: int | None = None) -> Poly:
    """Monic generator gcd(k, x^m - 1) of the cyclic code <k>."""
    if isinstance(k, RingElem):
        m = k.m
        k = k.poly
    xm = Poly.xm_minus_1(k.ctx, m)
    return xm if k.is_zero() else gcd(k, xm)


# ---- cyclotomic cosets, minimal polynomials, factorisation, order ----------

@dataclass(frozen=True)
class CyclotomicCoset:
    rep: int
    members: tuple[int, ...]
    l: int

    @property
    def size(self) -> int:
        return len(self.members)


def cyclotomic_coset(s: int, q: int, l: int) -> CyclotomicCoset:
    s %= l
    members = {s}
    t = s * q % l
    while t not in members:
        members.add(t)
        t = t * q % l
    mem = tuple(sorted(members))
    return CyclotomicCoset(mem[0], mem, l)


def cyclotomic_cosets(q: int, l: int) -> list[CyclotomicCoset]:
    """All q-cyclotomic cosets modulo l, ordered by representative."""
    if math.gcd(q, l) != 1:
        raise ValueError("cyclotomic cosets need gcd(q, l) = 1")
    seen = set()
    out = []
    for s in range(l):
        if s not in seen:
            c = cyclotomic_coset(s, q, l)
            seen.update(c.members)
            out.append(c)
    return out


def multiplicative_order(q: int, l: int) -> int:
    if l == 1:
        return 1
    e, t = 1, q % l
    while t != 1:
        t = t * q % l
        e += 1
    return e


def _split_m(p: int, m: int) -> tuple[int, int]:
    """m = l * p^t with gcd(l, p) = 1; returns (l, p^t)."""
    pt = 1
    while m % p == 0:
        m //= p
        pt *= p
    return m, pt


class _Embedding:
    """F_q inside GF(q^e), both built by :func:`gf.ctx_new`."""

    def __init__(self, small: gf.GF, e: int):
        self.small = small
        self.big = gf.ctx_new(small.p, small.gamma * e)
        big = self.big
        if small.gamma == 1:
            beta = 0
        else:
            mod = small.modulus
            beta = None
            for cand in range(big.q):
                acc = 0
                for c in reversed(mod):
                    acc = big.add(big.mul(acc, cand), big.from_int(c))
                if acc == 0:
                    beta = cand
                    break
            assert beta is not None
        self.forward = []
        for code in range(small.q):
            if small.gamma == 1:
                self.forward.append(code)
                continue
            acc = 0
            pw = 1
            for d in small.digits(code):
                acc = big.add(acc, big.mul(big.from_int(d), pw))
                pw = big.mul(pw, beta)
            self.forward.append(acc)
        self.back = {b: s for s, b in enumerate(self.forward)}


def _embedding(ctx: gf.GF, e: int) -> _Embedding:
    key = (ctx.p, ctx.gamma, e)
    if key not in _EMBED_CACHE:
        _EMBED_CACHE[key] = _Embedding(ctx, e)
    return _EMBED_CACHE[key]


_EMBED_CACHE: dict = {}


def min_poly(s: int, l: int, ctx: gf.GF) -> Poly:
    """Minimal polynomial over F_q of alpha^s, alpha a fixed primitive l-th root of unity."""
    q = ctx.q
    if math.gcd(l, ctx.p) != 1:
        raise RootOfUnityUnavailable(f"gcd({l}, {ctx.p}) != 1")
    e = multiplicative_order(q, l)
    emb = _embedding(ctx, e)
    big = emb.big
    if (big.q - 1) % l:
        raise RootOfUnityUnavailable(f"{l} does not divide {big.q} - 1")
    alpha = big.power(big.generator, (big.q - 1) // l)
    coset = cyclotomic_coset(s, q, l)
    prod = [1]
    for i in coset.members:
        root = big.neg(big.power(alpha, i))
        nxt = [0] * (len(prod) + 1)
        for j, c in enumerate(prod):
            nxt[j + 1] = big.add(nxt[j + 1], c)
            nxt[j] = big.add(nxt[j], big.mul(c, root))
        prod = nxt
    try:
        codes = [emb.back[c] for c in prod]
    except KeyError:
        raise AssertionError("minimal polynomial has coefficients outside F_q") from None
    return Poly(ctx, codes)


def factor_xm_minus_1(ctx: gf.GF, m: int) -> list[tuple[Poly, int]]:
    """Irreducible factors of x^m - 1 with multiplicities, ordered by coset representative."""
    if m < 1:
        raise ZeroLength("m must be positive")
    l, pt = _split_m(ctx.p, m)
    out = [(min_poly(c.rep, l, ctx), pt) for c in cyclotomic_cosets(ctx.q, l)]
    prod = Poly.constant(ctx, 1)
    for f, e in out:
        prod = prod * f ** e
    assert prod == Poly.xm_minus_1(ctx, m), "factor product does not reproduce x^m - 1"
    return out


def coset_factors(ctx: gf.GF, l: int) -> dict[int, Poly]:
    """Map coset representative s -> M_s(x) for x^l - 1."""
    return {c.rep: min_poly(c.rep, l, ctx) for c in cyclotomic_cosets(ctx.q, l)}


def ord(f: Poly, bound: int | None = None) -> int:
    """Least tau >= 1 with f | x^tau - 1, by iterating x^tau mod f."""
    if f.is_zero():
        raise ZeroPolynomial("order of the zero polynomial")
    if f.c[0] == 0:
        raise ZeroConstantTerm("order undefined when f(0) = 0")
    n = f.degree
    if n == 0:
        return 1
    if bound is None:
        bound = ORDER_CAP if f.ctx.q ** n - 1 > ORDER_CAP else f.ctx.q ** n - 1
    ctx = f.ctx
    fm = f.monic().c[:n]
    r = np.zeros(n, dtype=np.int64)
    one = np.zeros(n, dtype=np.int64)
    one[0] = 1
    if n == 1:
        r[0] = ctx.neg(int(fm[0]))
    else:
        r[1] = 1
    tau = 1
    while not np.array_equal(r, one):
        if tau >= bound:
            raise OrderBoundExceeded(f"order exceeds {bound}")
        top = int(r[-1])
        r = np.concatenate([[0], r[:-1]])
        if top:
            r = ctx.vsub(r, ctx.vmul(fm, top))
        tau += 1
    return tau


def parse_poly(ctx: gf.GF, text: str) -> Poly:
    try:
        return Poly.parse(ctx, text)
    except ParseError:
        raise
    except (ValueError, IndexError) as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from exc
