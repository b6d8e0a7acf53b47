"""Exact arithmetic in finite fields F_q and in F_q[x].

Conventions used throughout the package:

* A field F_q, q = p^m, is F_p[t]/(modulus).  The modulus is stored as a
  coefficient tuple over F_p, low degree first, monic.  When no modulus is
  supplied the canonical one is chosen: the monic irreducible of degree m
  whose coefficient tuple (c_0, ..., c_{m-1}) is smallest in lexicographic
  order (compared componentwise, low degree first).
* Field elements are indexed 0..q-1 by sum(c_i * p^i); the index doubles as
  the canonical element order.
* Polynomials over F_q store a tuple of element indices, low degree first,
  with no trailing zeros.  The zero polynomial has an empty tuple and its
  degree is the NEG_INF sentinel, never a number.
* Deterministic order on polynomials: by degree, then by the coefficient
  tuple compared low degree first.  All enumeration and factor output uses
  this order.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator

from .budget import resolve_budget
from .errors import (
    BudgetExceeded,
    CurveClassError,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroPolynomial,
)

_TABLE_LIMIT = 128
_EDS_SEED = 0x5EED


class _NegInf:
    """Degree of the zero polynomial.  Compares below every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("curveclass-neg-inf")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1 if d == 2 else 2
    if n > 1:
        result = -result
    return result


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += mobius(d // e) * q**e
    assert total % d == 0
    return total // d


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over the prime field, used to bootstrap moduli


def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv) % p
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - factor * b[i]) % p
        _fp_trim(a)
    return a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _fp_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _fp_powmod_x(e: int, mod: list[int], p: int) -> list[int]:
    """x^e mod the monic polynomial ``mod`` over F_p."""
    result = [1]
    base = _fp_rem([0, 1], mod, p)
    while e:
        if e & 1:
            result = _fp_rem(_fp_mul(result, base, p), mod, p)
        base = _fp_rem(_fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _fp_is_irreducible(coeffs: list[int], p: int) -> bool:
    d = len(coeffs) - 1
    if d < 1:
        return False
    xq = _fp_powmod_x(p**d, coeffs, p)
    if _fp_trim([(a - b) % p for a, b in itertools.zip_longest(xq, [0, 1], fillvalue=0)]):
        return False
    for ell in prime_factors(d):
        xe = _fp_powmod_x(p ** (d // ell), coeffs, p)
        diff = _fp_trim([(a - b) % p for a, b in itertools.zip_longest(xe, [0, 1], fillvalue=0)])
        if not diff:
            return False
        if len(_fp_gcd(diff, coeffs, p)) != 1:
            return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        cand = list(tail) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise CurveClassError("no irreducible modulus found")  # unreachable


# ---------------------------------------------------------------------------


class Field:
    """F_q with exact index-based arithmetic and optional lookup tables."""

    __slots__ = (
        "p",
        "m",
        "q",
        "modulus",
        "_red",
        "_pw",
        "_add_t",
        "_mul_t",
        "_inv_t",
        "_zero",
        "_one",
    )

    def __init__(self, p: int, m: int, modulus: Iterable[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p!r} is not prime")
        if not isinstance(m, int) or m < 1:
            raise CurveClassError(f"extension degree m = {m!r} must be a positive integer")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            mod = _canonical_modulus(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {m}")
            if m >= 1 and not _fp_is_irreducible(list(mod), p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
        self.modulus = mod
        self._pw = [p**i for i in range(m + 1)]
        # x^(m+j) mod modulus, as digit tuples of length m
        red0 = tuple((-mod[i]) % p for i in range(m))
        red = [red0]
        for _ in range(m - 2):
            prev = red[-1]
            top = prev[m - 1]
            nxt = [0] * m
            for t in range(1, m):
                nxt[t] = prev[t - 1]
            if top:
                for t in range(m):
                    nxt[t] = (nxt[t] + top * red0[t]) % p
            red.append(tuple(nxt))
        self._red = red
        self._add_t = self._mul_t = self._inv_t = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1)

    # -- index/digit plumbing ------------------------------------------------

    def digits(self, idx: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(idx % p)
            idx //= p
        return tuple(out)

    def index_of(self, digits: Iterable[int]) -> int:
        idx = 0
        for i, c in enumerate(digits):
            idx += (int(c) % self.p) * self._pw[i]
        return idx

    def _build_tables(self):
        q = self.q
        add_t = [0] * (q * q)
        mul_t = [0] * (q * q)
        inv_t = [0] * q
        digs = [self.digits(i) for i in range(q)]
        p, m = self.p, self.m
        for a in range(q):
            da = digs[a]
            row = a * q
            for b in range(a, q):
                db = digs[b]
                s = self.index_of((da[i] + db[i]) % p for i in range(m))
                add_t[row + b] = s
                add_t[b * q + a] = s
                pr = self._mul_digits_raw(da, db)
                pi = self.index_of(pr)
                mul_t[row + b] = pi
                mul_t[b * q + a] = pi
                if pi == 1:
                    inv_t[a] = b
                    inv_t[b] = a
        self._add_t = add_t
        self._mul_t = mul_t
        self._inv_t = inv_t

    def _mul_digits_raw(self, da, db) -> tuple[int, ...]:
        p, m = self.p, self.m
        res = [0] * (2 * m - 1) if m > 1 else [0]
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    res[i + j] = (res[i + j] + ai * bj) % p
        for k in range(2 * m - 2, m - 1, -1):
            c = res[k]
            if c:
                res[k] = 0
                red = self._red[k - m]
                for t in range(m):
                    if red[t]:
                        res[t] = (res[t] + c * red[t]) % p
        return tuple(res[:m])

    # -- index-level ops -----------------------------------------------------

    def add_idx(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a * self.q + b]
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return self.index_of((da[i] + db[i]) % p for i in range(self.m))

    def neg_idx(self, a: int) -> int:
        p = self.p
        return self.index_of((p - c) % p for c in self.digits(a))

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a * self.q + b]
        return self.index_of(self._mul_digits_raw(self.digits(a), self.digits(b)))

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow_idx(a, self.q - 2)

    def pow_idx(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_idx(self.inv_idx(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul_idx(result, base)
            base = self.mul_idx(base, base)
            e >>= 1
        return result

    # -- public element API --------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise CurveClassError("element from a different field")
            return value
        if isinstance(value, int):
            if self.m == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.q:
                raise CurveClassError(f"element index {value} out of range for q={self.q}")
            return FieldElement(self, value)
        return FieldElement(self, self.index_of(value))

    def from_index(self, idx: int) -> "FieldElement":
        return FieldElement(self, idx)

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.q):
            yield FieldElement(self, i)

    def trace_to_prime_idx(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        acc = 0
        cur = a
        for _ in range(self.m):
            acc = self.add_idx(acc, cur)
            cur = self.pow_idx(cur, self.p)
        digs = self.digits(acc)
        assert all(c == 0 for c in digs[1:])
        return digs[0]

    def is_square_idx(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow_idx(a, (self.q - 1) // 2) == 1

    def sqrt_idx(self, a: int) -> int | None:
        """A square root of a, or None.  Returns min(r, -r) for determinism."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow_idx(a, self.q // 2)
        if not self.is_square_idx(a):
            return None
        q = self.q
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        z = next(i for i in range(1, q) if not self.is_square_idx(i))
        c = self.pow_idx(z, t)
        r = self.pow_idx(a, (t + 1) // 2)
        u = self.pow_idx(a, t)
        while u != 1:
            k = 0
            v = u
            while v != 1:
                v = self.mul_idx(v, v)
                k += 1
            b = self.pow_idx(c, 1 << (s - k - 1))
            r = self.mul_idx(r, b)
            c = self.mul_idx(b, b)
            u = self.mul_idx(u, c)
            s = k
        return min(r, self.neg_idx(r))

    def element_to_json(self, idx: int):
        if self.m == 1:
            return idx
        return list(self.digits(idx))

    def element_from_json(self, data) -> int:
        if isinstance(data, int):
            if self.m == 1:
                return data % self.p
            if not 0 <= data < self.q:
                raise CurveClassError(f"element index {data} out of range")
            return data
        digs = list(data)
        if len(digs) > self.m:
            raise CurveClassError("element digit list longer than extension degree")
        return self.index_of(digs)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m})"


def field_create(p: int, m: int, modulus: Iterable[int] | None = None) -> Field:
    """Construct F_{p^m}; canonical modulus when none is given."""
    return Field(p, m, modulus)


class FieldElement:
    __slots__ = ("field", "idx")

    def __init__(self, field: Field, idx: int):
        self.field = field
        self.idx = idx

    @property
    def digits(self) -> tuple[int, ...]:
        return self.field.digits(self.idx)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_idx(self.idx, other.idx))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_idx(self.idx, other.idx))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul_idx(self.idx, self.field.inv_idx(other.idx)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_idx(self.idx, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_idx(self.idx))

    def __bool__(self):
        return self.idx != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.idx == other.idx
            and self.field == other.field
        )

    def __lt__(self, other):
        return self.idx < other.idx

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.idx))

    def __repr__(self):
        return f"FieldElement({self.idx} in q={self.field.q})"


# ---------------------------------------------------------------------------


class Poly:
    """Polynomial over a Field; immutable, coefficients stored as indices."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_coeffs(cls, field: Field, seq) -> "Poly":
        """Coefficients given as ints, digit lists or FieldElements, low degree first."""
        idxs = []
        for v in seq:
            if isinstance(v, FieldElement):
                idxs.append(field.element(v).idx)
            elif isinstance(v, int):
                idxs.append(field.element(v).idx)
            else:
                idxs.append(field.index_of(v))
        return cls(field, idxs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> FieldElement:
        idx = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, idx)

    def leading(self) -> FieldElement:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add_idx(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg_idx(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        mul, add = F.mul_idx, F.add_idx
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    def scale(self, c) -> "Poly":
        F = self.field
        ci = F.element(c).idx
        return Poly(F, [F.mul_idx(ci, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly"):
        F = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lb = F.inv_idx(b[-1])
        if len(a) - 1 < db:
            return Poly(F, ()), self
        quot = [0] * (len(a) - db)
        mul, sub = F.mul_idx, F.sub_idx
        for shift in range(len(a) - 1 - db, -1, -1):
            top = a[shift + db]
            if top:
                factor = mul(top, inv_lb)
                quot[shift] = factor
                for i in range(db + 1):
                    if b[i]:
                        a[shift + i] = sub(a[shift + i], mul(factor, b[i]))
        return Poly(F, quot), Poly(F, a[: db] if db else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        result = Poly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        return self.scale(self.field.from_index(self.field.inv_idx(self.coeffs[-1])))

    def derivative(self) -> "Poly":
        F = self.field
        p = F.p
        out = []
        for i in range(1, len(self.coeffs)):
            k = i % p
            c = self.coeffs[i]
            if k == 0 or c == 0:
                out.append(0)
            else:
                ki = F.element(k).idx if F.m > 1 else k
                out.append(F.mul_idx(ki, c))
        return Poly(F, out)

    def evaluate(self, x: FieldElement) -> FieldElement:
        F = self.field
        acc = 0
        xi = x.idx
        for c in reversed(self.coeffs):
            acc = F.add_idx(F.mul_idx(acc, xi), c)
        return FieldElement(F, acc)

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def to_json(self) -> list:
        return [self.field.element_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: Field, data) -> "Poly":
        return cls(field, [field.element_from_json(v) for v in data])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.coeffs == other.coeffs
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(terms) + f" over q={self.field.q})"


def x_poly(field: Field) -> Poly:
    return Poly(field, (0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def poly_extgcd(a: Poly, b: Poly):
    """Return (g, s, t) with g = s*a + t*b, g monic (or zero)."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly(F, (1,)), Poly(F, ())
    t0, t1 = Poly(F, ()), Poly(F, (1,))
    while not r1.is_zero:
        qt, rm = divmod(r0, r1)
        r0, r1 = r1, rm
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if r0.is_zero:
        return r0, s0, t0
    lc_inv = F.from_index(F.inv_idx(r0.coeffs[-1]))
    return r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly(base.field, (1,)) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Monic-insensitive irreducibility test over F_q."""
    if f.is_zero or f.degree == 0:
        return False
    f = f.monic()
    d = f.degree
    if d == 1:
        return True
    q = f.field.q
    x = x_poly(f.field)
    # x^(q^j) mod f for the j values we need
    frob = {0: x % f}
    cur = x % f
    for j in range(1, d + 1):
        cur = pow_mod(cur, q, f)
        frob[j] = cur
    if frob[d] != x % f:
        return False
    for ell in prime_factors(d):
        g = poly_gcd(frob[d // ell] - x, f)
        if g.degree != 0:
            return False
    return True


def squarefree(f: Poly) -> bool:
    if f.is_zero:
        raise ZeroPolynomial("squarefree test on the zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero:
        return False
    return poly_gcd(f, d).degree == 0


def _pth_root_poly(f: Poly) -> Poly:
    """For f with zero derivative, the g with g^p = f."""
    F = f.field
    p = F.p
    out = []
    for i in range(0, len(f.coeffs), p):
        c = f.coeffs[i]
        out.append(F.pow_idx(c, F.q // p))
    # sanity: intermediate coefficients must vanish
    for i, c in enumerate(f.coeffs):
        if i % p and c:
            raise CurveClassError("pth-root called on a polynomial with nonzero derivative")
    return Poly(F, out)


def _equal_degree_split(f: Poly, e: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: f monic squarefree, all factors of degree e."""
    if f.degree == e:
        return [f]
    F = f.field
    q, p = F.q, F.p
    n = f.degree
    while True:
        b = Poly(F, [rng.randrange(q) for _ in range(n)])
        if b.degree is NEG_INF or b.degree == 0:
            continue
        if p == 2:
            # additive (trace) splitting
            k = e * F.m  # q^e = 2^(e*m)
            acc = b % f
            cur = b % f
            for _ in range(k - 1):
                cur = (cur * cur) % f
                acc = acc + cur
            g = poly_gcd(acc, f)
        else:
            t = pow_mod(b, (q**e - 1) // 2, f) - Poly(F, (1,))
            g = poly_gcd(t, f)
        if 0 < (g.degree if g.degree is not NEG_INF else -1) < n:
            return _equal_degree_split(g, e, rng) + _equal_degree_split(f // g, e, rng)


def _factor_squarefree_monic(f: Poly, rng: random.Random) -> list[Poly]:
    out: list[Poly] = []
    F = f.field
    q = F.q
    x = x_poly(F)
    cur = f
    h = x % cur
    i = 0
    while cur.degree is not NEG_INF and cur.degree >= 1:
        i += 1
        if 2 * i > cur.degree:
            out.append(cur)
            break
        h = pow_mod(h, q, cur)
        g = poly_gcd(h - x, cur)
        if g.degree is not NEG_INF and g.degree >= 1:
            out.extend(_equal_degree_split(g, i, rng))
            cur = cur // g
            h = h % cur
    return out


def _factor_monic(f: Poly, rng: random.Random) -> dict[Poly, int]:
    out: dict[Poly, int] = {}
    if f.degree == 0:
        return out
    d = f.derivative()
    if d.is_zero:
        g = _pth_root_poly(f)
        for pi, e in _factor_monic(g, rng).items():
            out[pi] = out.get(pi, 0) + f.field.p * e
        return out
    w = poly_gcd(f, d)
    sqf = (f // w).monic()
    rem = f
    for pi in _factor_squarefree_monic(sqf, rng):
        e = 0
        while True:
            qt, r = divmod(rem, pi)
            if not r.is_zero:
                break
            rem = qt
            e += 1
        out[pi] = e
    if rem.degree is not NEG_INF and rem.degree >= 1:
        for pi, e in _factor_monic(rem.monic(), rng).items():
            out[pi] = out.get(pi, 0) + e
    return out


def poly_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Factor f into monic irreducibles with multiplicities.

    Output is sorted by degree then coefficient tuple (low degree first), so
    repeated runs are byte-identical; the internal equal-degree splitting uses
    a fixed-seed stream.  The unit is f's leading coefficient, not returned.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(_EDS_SEED)
    fm = f.monic()
    found = _factor_monic(fm, rng)
    out = sorted(found.items(), key=lambda it: it[0].sort_key())
    # re-multiplication self-check
    prod = Poly(f.field, (1,))
    for pi, e in out:
        prod = prod * pi**e
    if prod != fm:
        raise CurveClassError("factorization self-check failed")
    return out


def monic_polys(field: Field, d: int) -> Iterator[Poly]:
    """Monic degree-d polynomials in lexicographic order of (c_0, ..., c_{d-1})."""
    if d == 0:
        yield Poly(field, (1,))
        return
    for tail in itertools.product(range(field.q), repeat=d):
        yield Poly(field, tail + (1,))


def irreducibles(field: Field, d: int, budget: int | None = None) -> list[Poly]:
    """All monic irreducibles of degree d over F_q, in lexicographic order.

    Uses a product sieve (every reducible has a factor of degree <= d/2), and
    self-checks the count against the necklace formula.
    """
    if d < 1:
        raise CurveClassError("degree must be >= 1")
    q = field.q
    cap = resolve_budget(budget)
    if q**d > cap:
        raise BudgetExceeded(f"q^d = {q**d} exceeds budget {cap}")
    by_deg: dict[int, list[tuple[int, ...]]] = {}
    for e in range(1, d + 1):
        size = q**e
        marks = bytearray(size)
        qpow = [q**i for i in range(e)]
        mul, add = field.mul_idx, field.add_idx
        for e1 in range(1, e // 2 + 1):
            e2 = e - e1
            for gd in by_deg[e1]:
                glen = e1 + 1  # monic: digits gd + implicit 1? store full tuple incl lead
                for tail in itertools.product(range(q), repeat=e2):
                    # multiply (gd, monic) * (tail + (1,)) and mark the key
                    prod = [0] * (e + 1)
                    for i in range(glen):
                        gi = gd[i]
                        if gi:
                            for j in range(e2):
                                tj = tail[j]
                                if tj:
                                    prod[i + j] = add(prod[i + j], mul(gi, tj))
                            prod[i + e2] = add(prod[i + e2], gi)
                    key = 0
                    for i in range(e):
                        key += prod[i] * qpow[i]
                    marks[key] = 1
        found = [t for t in _lex_tails(q, e) if not marks[_key_of(t, qpow)]]
        if len(found) != necklace_count(q, e):
            raise CurveClassError("irreducible count does not match the necklace formula")
        by_deg[e] = [t + (1,) for t in found]
    return [Poly(field, t) for t in by_deg[d]]


def _lex_tails(q: int, e: int) -> Iterator[tuple[int, ...]]:
    """Tuples (c_0, ..., c_{e-1}) in lexicographic order."""
    return itertools.product(range(q), repeat=e)


def _key_of(tail: tuple[int, ...], qpow: list[int]) -> int:
    key = 0
    for i, c in enumerate(tail):
        key += c * qpow[i]
    return key


# ---------------------------------------------------------------------------


class ResidueField:
    """The residue field F_q[x]/(pi), elements represented as reduced Polys."""

    def __init__(self, pi: Poly, check: bool = True):
        if check and not is_irreducible(pi):
            raise ReducibleModulus("residue modulus must be irreducible")
        self.base = pi.field
        self.pi = pi.monic()
        self.d = pi.degree
        self.size = self.base.q**self.d
        self.zero = Poly(self.base, ())
        self.one = Poly(self.base, (1,))

    def value(self, f: Poly) -> Poly:
        return f % self.pi

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def sub(self, a: Poly, b: Poly) -> Poly:
        return a - b

    def mul(self, a: Poly, b: Poly) -> Poly:
        return (a * b) % self.pi

    def inv(self, a: Poly) -> Poly:
        if a.is_zero:
            raise ZeroDivisionError("inverse of zero residue")
        g, s, _ = poly_extgcd(a, self.pi)
        if g.degree != 0:
            raise CurveClassError("residue not invertible; modulus reducible?")
        return (s.scale(g.leading().inverse())) % self.pi

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            return self.pow(self.inv(a), -e)
        return pow_mod(a, e, self.pi)

    def elements(self) -> Iterator[Poly]:
        for key in range(self.size):
            digs = []
            k = key
            for _ in range(self.d):
                digs.append(k % self.base.q)
                k //= self.base.q
            yield Poly(self.base, digs)

    def is_square(self, a: Poly) -> bool:
        if a.is_zero or self.base.p == 2:
            return True
        return self.pow(a, (self.size - 1) // 2) == self.one

    def sqrt(self, a: Poly) -> Poly | None:
        """Canonical square root (the smaller of r, -r in poly order), or None."""
        if a.is_zero:
            return self.zero
        if self.base.p == 2:
            return self.pow(a, self.size // 2)
        if not self.is_square(a):
            return None
        Q = self.size
        s, t = 0, Q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        z = next(e for e in self.elements() if not e.is_zero and not self.is_square(e))
        c = self.pow(z, t)
        r = self.pow(a, (t + 1) // 2)
        u = self.pow(a, t)
        while u != self.one:
            k = 0
            v = u
            while v != self.one:
                v = self.mul(v, v)
                k += 1
            b = self.pow(c, 1 << (s - k - 1))
            r = self.mul(r, b)
            c = self.mul(b, b)
            u = self.mul(u, c)
            s = k
        rn = -r
        return r if r.sort_key() <= rn.sort_key() else rn

    def trace_to_prime(self, a: Poly) -> int:
        """Absolute trace down to F_p, as an integer in [0, p)."""
        n = self.base.m * self.d
        acc = self.zero
        cur = self.value(a)
        for _ in range(n):
            acc = acc + cur
            cur = self.pow(cur, self.base.p)
        if acc.is_zero:
            return 0
        if acc.degree != 0:
            raise CurveClassError("trace did not land in the prime field")
        return self.base.digits(acc.coeffs[0])[0]

    def artin_schreier_solve(self, a: Poly) -> Poly | None:
        """Solve z^2 + z = a in the residue field (characteristic 2 only)."""
        if self.base.p != 2:
            raise CurveClassError("artin_schreier_solve requires characteristic 2")
        m, d = self.base.m, self.d
        n = m * d
        basis = []
        for j in range(d):
            for i in range(m):
                basis.append(Poly(self.base, (0,) * j + (self.base._pw[i],)))

        def coords(v: Poly) -> list[int]:
            out = [0] * n
            for j, cidx in enumerate(v.coeffs):
                for i, bit in enumerate(self.base.digits(cidx)):
                    out[j * m + i] = bit
            return out

        cols = []
        for b in basis:
            img = self.add(self.mul(b, b), b)
            cols.append(coords(img))
        # solve M z = coords(a) over F_2; M given by columns
        rhs = coords(self.value(a))
        rows = [[cols[c][r] for c in range(n)] + [rhs[r]] for r in range(n)]
        pivots = []
        rank = 0
        for col in range(n):
            sel = None
            for r in range(rank, n):
                if rows[r][col]:
                    sel = r
                    break
            if sel is None:
                continue
            rows[rank], rows[sel] = rows[sel], rows[rank]
            for r in range(n):
                if r != rank and rows[r][col]:
                    rows[r] = [(x ^ y) for x, y in zip(rows[r], rows[rank])]
            pivots.append(col)
            rank += 1
        for r in range(rank, n):
            if rows[r][n]:
                return None
        sol = [0] * n
        for r, col in enumerate(pivots):
            sol[col] = rows[r][n]
        acc = self.zero
        for c, bit in enumerate(sol):
            if bit:
                acc = acc + basis[c]
        return self.value(acc)
