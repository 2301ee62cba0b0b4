"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here imports the package's arithmetic: fields are built from
schoolbook polynomial multiplication, matrices are reduced with plain Python
loops, and codes are enumerated by brute force.  Element codes follow the same
public encoding (sum of c_i p^i) so results can be compared directly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _poly_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    d = len(mod) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            for j in range(d + 1):
                prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    out = (prod + [0] * d)[:d]
    return out


class NaiveField:
    """GF(p^g) with a brute-force modulus search: the first monic polynomial
    (coefficients compared from the constant term) whose quotient ring has
    no zero divisors."""

    def __init__(self, p: int, g: int = 1):
        self.p, self.g, self.q = p, g, p ** g
        if g == 1:
            self.modulus = (0, 1)
        else:
            for tail in itertools.product(range(p), repeat=g):
                mod = list(tail) + [1]
                if self._is_field(mod):
                    self.modulus = tuple(mod)
                    break
        self.sub_q = p ** (g // 2) if g % 2 == 0 else None
        # tabulate once so the property suites stay fast
        self._add = [[self._slow_add(a, b) for b in range(self.q)] for a in range(self.q)]
        self._mul = [[self._slow_mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def _is_field(self, mod):
        elems = list(itertools.product(range(self.p), repeat=self.g))[1:]
        for a in elems:
            for b in elems:
                if not any(_poly_mulmod(list(a), list(b), mod, self.p)):
                    return False
        return True

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.g)]

    def code(self, ds):
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def _slow_add(self, a, b):
        return self.code([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self.code([-x for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _slow_mul(self, a, b):
        if self.g == 1:
            return a * b % self.p
        return self.code(_poly_mulmod(self.digits(a), self.digits(b), list(self.modulus), self.p))

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def frob(self, a):
        return self.power(a, self.sub_q)


@lru_cache(maxsize=None)
def field(q: int) -> NaiveField:
    for p in (2, 3, 5, 7, 11, 13):
        g, n = 0, q
        while n % p == 0:
            n //= p
            g += 1
        if n == 1 and g:
            return NaiveField(p, g)
    raise ValueError(q)


# ---- ring F_q[x]/(x^m - 1) on coefficient lists of length m -----------------

def ring_mul(F, a, b):
    m = len(a)
    out = [0] * m
    for i in range(m):
        if a[i]:
            for j in range(m):
                if b[j]:
                    out[(i + j) % m] = F.add(out[(i + j) % m], F.mul(a[i], b[j]))
    return out


def ring_add(F, a, b):
    return [F.add(x, y) for x, y in zip(a, b)]


def shift(v, s):
    """x^s * v in the ring."""
    m = len(v)
    return [v[(i - s) % m] for i in range(m)]


def poly_divides(F, d, f):
    """d | f for ascending coefficient lists (trailing zeros allowed)."""
    d = _strip(d)
    f = _strip(list(f))
    if not d:
        return not f
    inv = F.inv(d[-1])
    while len(f) >= len(d):
        c = F.mul(f[-1], inv)
        off = len(f) - len(d)
        for i, x in enumerate(d):
            f[off + i] = F.sub(f[off + i], F.mul(c, x))
        f = _strip(f)
    return not f


def _strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


# ---- matrices ----------------------------------------------------------------

def rref(F, rows):
    """Reduced row-echelon basis (zero rows removed) by plain elimination."""
    a = [list(r) for r in rows]
    if not a:
        return []
    n = len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        s = F.inv(a[r][c])
        a[r] = [F.mul(s, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return a[:r]


def rank(F, rows):
    return len(rref(F, rows))


def in_span(F, rows, v):
    return rank(F, list(rows) + [list(v)]) == rank(F, rows)


def nullspace(F, rows, n):
    """Basis of {v : r . v = 0 for every row r} (Euclidean), by back-substitution."""
    red = rref(F, rows)
    piv = []
    for r in red:
        piv.append(next(i for i, x in enumerate(r) if x))
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, pc in zip(red, piv):
            v[pc] = F.neg(r[f])
        basis.append(v)
    return basis


def dot(F, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(x, y))
    return acc


def herm(F, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(F.frob(x), y))
    return acc


def symp(F, u, v):
    n = len(u) // 2
    return F.sub(dot(F, u[:n], v[n:]), dot(F, u[n:], v[:n]))


PAIRINGS = {"E": dot, "H": herm, "S": symp}


def gram_zero(F, rows, kind):
    pair = PAIRINGS[kind]
    return all(pair(F, a, b) == 0 for a in rows for b in rows)


def dual_rows(F, rows, n, kind):
    """Dual under the chosen pairing, via the Euclidean nullspace of a twisted matrix."""
    if kind == "E":
        return nullspace(F, rows, n)
    if kind == "H":
        return nullspace(F, [[F.frob(x) for x in r] for r in rows], n)
    h = n // 2
    tw = [list(r[h:]) + [F.neg(x) for x in r[:h]] for r in rows]
    return nullspace(F, tw, n)


def span(F, rows):
    """Every codeword of the row space (small codes only)."""
    basis = rref(F, rows)
    n = len(rows[0]) if rows else 0
    words = []
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        w = [0] * n
        for c, r in zip(coeffs, basis):
            if c:
                w = [F.add(x, F.mul(c, y)) for x, y in zip(w, r)]
        words.append(tuple(w))
    return words


def hamming(v):
    return sum(1 for x in v if x)


def symplectic_weight(v):
    h = len(v) // 2
    return sum(1 for i in range(h) if v[i] or v[h + i])


def min_weight(F, big, small=(), weight=hamming):
    """Minimum weight of span(big) minus span(small); None if the difference is empty."""
    inner = set(span(F, small)) if small else {tuple([0] * len(big[0]))}
    ws = [weight(w) for w in span(F, big) if w not in inner]
    return min(ws) if ws else None


# ---- quasi-cyclic generator matrices ----------------------------------------

def qc_rows(F, products):
    """Full circulant stack of each generator row (all m shifts)."""
    rows = []
    for row in products:
        m = len(row[0])
        for s in range(m):
            rows.append([c for comp in row for c in shift(comp, s)])
    return rows
