"""Exact arithmetic in prime fields F_p and extension fields GF(p^gamma).

Elements are encoded as integers: the element ``c_0 + c_1 w + ... + c_{g-1} w^{g-1}``
(``w`` the residue class of ``x`` modulo the field modulus) has code
``c_0 + c_1 p + ... + c_{g-1} p^{g-1}``.  Codes are what every other module
stores; :class:`FieldElem` is the user-facing wrapper.

The modulus of GF(p^gamma) is the lexicographically smallest monic irreducible
polynomial of degree gamma over F_p, coefficients compared from the constant
term upwards.  For F_4 this is ``x^2 + x + 1``.
"""

from __future__ import annotations

import functools
import itertools
import re

import numpy as np

from .errors import (
    ContextMismatch,
    DivisionByZero,
    FieldTooLarge,
    NotAQuadraticExtension,
    NotPrime,
    ParseError,
)

MAX_ORDER = 1 << 16
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- plain F_p[x] helpers on ascending coefficient lists (construction only) --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    """Remainder of a by monic-or-not b over F_p."""
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(a[:db])


def _is_irreducible(f, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _pmod(f, list(tail) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, gamma: int) -> tuple[int, ...]:
    if gamma == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=gamma):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """Arithmetic context for GF(p^gamma); immutable once built.

    Use :func:`ctx_new` rather than instantiating directly, so equal fields
    share one cached context.
    """

    def __init__(self, p: int, gamma: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if gamma < 1:
            raise ValueError("extension degree must be positive")
        if p ** gamma > MAX_ORDER:
            raise FieldTooLarge(f"{p}^{gamma} exceeds {MAX_ORDER}")
        self.p = p
        self.gamma = gamma
        self.q = p ** gamma
        self.modulus = smallest_irreducible(p, gamma)
        self.sub_q = p ** (gamma // 2) if gamma % 2 == 0 else None
        self._pw = [p ** i for i in range(gamma)]
        self._build_tables()

    # ---- construction -------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, g = self.p, self.gamma
        if g == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * g - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_pmod(prod, list(self.modulus), p) if len(prod) > g else prod)

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.q
        n = q - 1
        factors = prime_factors(n) if n > 1 else []
        gen = 1
        for cand in range(1, q):
            if all(self._slow_pow(cand, n // r) != 1 for r in factors):
                gen = cand
                break
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[n:] = exp[:n]
        self.generator = gen
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        codes = np.arange(q, dtype=np.int64)
        digits = [(codes // w) % self.p for w in self._pw]
        self._neg = sum(((-d) % self.p) * w for d, w in zip(digits, self._pw))
        self._neg_list = self._neg.tolist()
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(n - log[1:]) % n] if n else 1
        self._inv = inv
        self._inv_list = inv.tolist()
        self._add = None
        if self.gamma > 1 and self.p != 2 and q <= _ADD_TABLE_LIMIT:
            self._add = self._vadd_digits(codes[:, None], codes[None, :])
            self._add_list = self._add.tolist()
        if self.sub_q is not None:
            fr = np.zeros(q, dtype=np.int64)
            fr[1:] = exp[(log[1:] * self.sub_q) % n]
            self._frob = fr
            self._frob_list = fr.tolist()

    # ---- element codes ------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple((a // w) % self.p for w in self._pw)

    def from_digits(self, ds) -> int:
        ds = list(ds)
        if len(ds) > self.gamma:
            raise ValueError("too many coefficients for this field")
        return sum((d % self.p) * w for d, w in zip(ds, self._pw))

    def from_int(self, n: int) -> int:
        """Code of the integer n in the prime subfield."""
        return n % self.p

    # ---- scalar arithmetic on codes ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.gamma == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add_list[a][b]
        return sum(((a // w + b // w) % self.p) * w for w in self._pw)

    def neg(self, a: int) -> int:
        return self._neg_list[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_list[b])

    def mul(self, a: int, b: int) -> int:
        if self.gamma == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv_list[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        n = self.q - 1
        return self._exp_list[(self._log_list[a] * e) % n]

    def frob(self, a: int) -> int:
        """a -> a^q on GF(q^2), q = p^(gamma/2)."""
        if self.sub_q is None:
            raise NotAQuadraticExtension(f"GF({self.q}) is not a quadratic extension")
        return self._frob_list[a]

    # ---- vectorised arithmetic on int64 arrays of codes -----------------

    def _vadd_digits(self, a, b):
        out = 0
        for w in self._pw:
            out = out + ((a // w + b // w) % self.p) * w
        return out

    def vadd(self, a, b):
        if self.gamma == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add is not None:
            return self._add[a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a):
        if self.gamma == 1:
            return (-a) % self.p
        return self._neg[a]

    def vsub(self, a, b):
        if self.gamma == 1:
            return (a - b) % self.p
        return self.vadd(a, self._neg[b])

    def vmul(self, a, b):
        if self.gamma == 1:
            return (a * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vinv(self, a):
        return self._inv[a]

    def vfrob(self, a):
        if self.sub_q is None:
            raise NotAQuadraticExtension(f"GF({self.q}) is not a quadratic extension")
        return self._frob[a]

    def vsum(self, a, axis=0):
        """Field sum of an array along one axis."""
        a = np.asarray(a)
        if self.gamma == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        out = 0
        for w in self._pw:
            out = out + ((a // w) % self.p).sum(axis=axis) % self.p * w
        return out

    # ---- user-facing helpers ------------------------------------------

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            self.check(value.ctx)
            return value
        if isinstance(value, str):
            return parse_elem(self, value)
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, int(value) % self.p)
        if isinstance(value, (tuple, list)):
            return FieldElem(self, self.from_digits(value))
        raise TypeError(f"cannot convert {value!r} to an element of GF({self.q})")

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, int(code))

    def elements(self):
        for c in range(self.q):
            yield FieldElem(self, c)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def w(self) -> "FieldElem":
        if self.gamma == 1:
            raise ValueError("prime field has no adjoined generator")
        return FieldElem(self, self.p)

    def check(self, other: "GF"):
        if other is not self and (other.p, other.gamma) != (self.p, self.gamma):
            raise ContextMismatch(f"GF({other.q}) used with GF({self.q})")

    def format(self, a: int) -> str:
        if self.gamma == 1:
            return str(a)
        terms = []
        for k, c in reversed(list(enumerate(self.digits(a)))):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                base = "w" if k == 1 else f"w^{k}"
                terms.append(base if c == 1 else f"{c}{base}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        if self.gamma == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.gamma})"

    def __reduce__(self):
        return (ctx_new, (self.p, self.gamma))


@functools.lru_cache(maxsize=None)
def ctx_new(p: int, gamma: int = 1) -> GF:
    """Field context for GF(p^gamma); cached so equal fields share tables."""
    return GF(p, gamma)


def field_of_order(q: int) -> GF:
    """Context for the field with q elements."""
    if q > MAX_ORDER:
        raise FieldTooLarge(f"{q} exceeds {MAX_ORDER}")
    for p in prime_factors(q)[:1]:
        gamma = 0
        n = q
        while n % p == 0:
            n //= p
            gamma += 1
        if n == 1:
            return ctx_new(p, gamma)
    raise NotPrime(f"{q} is not a prime power")


class FieldElem:
    """An element of a finite field; immutable and hashable."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: GF, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits(self.code)

    def _other(self, b):
        if isinstance(b, FieldElem):
            self.ctx.check(b.ctx)
            return b.code
        if isinstance(b, (int, np.integer)):
            return int(b) % self.ctx.p
        return NotImplemented

    def __add__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.ctx, self.ctx.sub(c, self.code))

    def __mul__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.ctx, self.ctx.div(self.code, c))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.power(self.code, e))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def pow_q(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.frob(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, b):
        if isinstance(b, FieldElem):
            return self.code == b.code and (self.ctx.p, self.ctx.gamma) == (b.ctx.p, b.ctx.gamma)
        if isinstance(b, (int, np.integer)):
            return self.code == int(b) % self.ctx.p and (self.ctx.gamma == 1 or self.code < self.ctx.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.gamma, self.code))

    def __str__(self):
        return self.ctx.format(self.code)

    def __repr__(self):
        return f"{self.ctx!r}({self.ctx.format(self.code)})"


# ---- module-level operations -----------------------------------------

def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inv()


def pow_q(a: FieldElem) -> FieldElem:
    return a.pow_q()


# ---- text format -----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^|\*|\+|-|\(|\)))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _TermParser:
    """Recursive-descent parser producing {x-degree: element code}."""

    def __init__(self, ctx: GF, text: str, var: str | None):
        self.ctx = ctx
        self.var = var
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def fail(self, msg):
        raise ParseError(f"{msg} in {self.text!r}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input")
        return val

    def _add(self, a, b, sign=1):
        out = dict(a)
        for k, c in b.items():
            if sign < 0:
                c = self.ctx.neg(c)
            out[k] = self.ctx.add(out.get(k, 0), c)
        return {k: c for k, c in out.items() if c}

    def _mul(self, a, b):
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = self.ctx.add(out.get(i + j, 0), self.ctx.mul(x, y))
        return {k: c for k, c in out.items() if c}

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self._add({}, self.term(), sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                acc = self._add(acc, self.term(), -1 if val == "-" else 1)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = self._mul(acc, self.factor())
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = self._mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                self.fail("expected integer exponent")
            out = {0: 1}
            for _ in range(e):
                out = self._mul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            c = val % self.ctx.p
            return {0: c} if c else {}
        if kind == "name":
            if val == "w":
                if self.ctx.gamma == 1:
                    self.fail("'w' used over a prime field")
                return {0: self.ctx.p}
            if self.var is not None and val == self.var:
                return {1: 1}
            self.fail(f"unknown symbol {val!r}")
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                self.fail("unbalanced parenthesis")
            return inner
        self.fail("unexpected token")


def parse_terms(ctx: GF, text: str, var: str | None = "x") -> dict[int, int]:
    return _TermParser(ctx, text, var).parse()


def parse_elem(ctx: GF, text: str) -> FieldElem:
    """Parse ``"w+1"``, ``"2w+1"``, ``"w^2"`` or a decimal residue."""
    terms = parse_terms(ctx, text, var=None)
    return FieldElem(ctx, terms.get(0, 0))


def format_elem(a: FieldElem) -> str:
    return a.ctx.format(a.code)
