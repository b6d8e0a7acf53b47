"""Brute-force divisor class group oracle for small curves.

Independent of the zeta machinery: elements of Pic^0 are enumerated directly
as reduced Mumford pairs (u, v) with u monic of degree <= g, deg v < deg u
and u | v^2 - f, and the group law is Cantor composition plus reduction.
Supported models: the projective line (trivial group) and odd-characteristic
double covers y^2 = f with deg f = 2g + 1 (one point at infinity).  The
group structure is read off from exact l-power torsion counts.

Every run re-verifies the group axioms on the enumerated set: identity and
inverses on all elements, plus seeded random closure and associativity
checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .budget import ORACLE_ENUM_CAP, ORACLE_ORDER_CAP
from .curve import Curve, DoubleCover, ProjectiveLine
from .errors import BudgetExceeded, CurveClassError, OracleUnsupportedModel
from .gf import Poly, ResidueField, monic_polys, poly_extgcd, poly_factor, prime_factors

_SANITY_SEED = 0xD1F0
_SANITY_TRIALS = 100


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Finite abelian group as order plus invariant factors d_1 | d_2 | ..."""

    order: int
    invariant_factors: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.invariant_factors),
            "order": self.order,
        }


def p_torsion_dim(structure: AbelianGroupStructure, p: int) -> int:
    """dim_{F_p} of the p-torsion subgroup."""
    return sum(1 for d in structure.invariant_factors if d % p == 0)


# ---------------------------------------------------------------------------
# Mumford arithmetic (h = 0, odd characteristic, deg f = 2g + 1)


def _sqrt_mod_prime_power(f: Poly, pi: Poly, e: int) -> list[Poly]:
    """All v mod pi^e with v^2 = f; f squarefree, pi irreducible."""
    field = f.field
    rf = ResidueField(pi, check=False)
    fbar = f % pi
    if fbar.is_zero:
        # ramified: v = 0 works mod pi, and nothing lifts past e = 1
        return [Poly(field)] if e == 1 else []
    s = rf.sqrt(fbar)
    if s is None:
        return []
    mod = pi
    for _ in range(1, e):
        # Hensel step: s <- s + t*mod with 2*s*t = -(s^2 - f)/mod (mod pi)
        mod_next = mod * pi
        r = (s * s - f) % mod_next
        c = (r // mod) % pi
        two_s = rf.value(s + s)
        t = rf.mul(-c % pi, rf.inv(two_s))
        s = (s + t * mod) % mod_next
        mod = mod_next
    if not ((s * s - f) % mod).is_zero:
        raise CurveClassError("internal: Hensel lift failed")
    return sorted({s % mod, (-s) % mod}, key=Poly.sort_key)


def _sqrt_mod(f: Poly, u: Poly) -> list[Poly]:
    """All v with deg v < deg u and u | v^2 - f."""
    field = f.field
    cur = [Poly(field)]
    cur_mod = Poly.from_coeffs(field, [1])
    for pi, e in poly_factor(u):
        local = _sqrt_mod_prime_power(f, pi, e)
        if not local:
            return []
        mod_i = pi**e
        g, a, b = poly_extgcd(cur_mod, mod_i)
        if g.degree != 0:
            raise CurveClassError("internal: moduli must be coprime")
        new_mod = cur_mod * mod_i
        nxt = []
        for xv in cur:
            for yv in local:
                z = (xv * b * mod_i + yv * a * cur_mod) % new_mod
                nxt.append(z)
        cur, cur_mod = nxt, new_mod
    return sorted(cur, key=Poly.sort_key)


def _mumford_elements(f: Poly, g: int) -> list[tuple[Poly, Poly]]:
    field = f.field
    one = Poly.from_coeffs(field, [1])
    out: list[tuple[Poly, Poly]] = [(one, Poly(field))]
    for d in range(1, g + 1):
        for u in monic_polys(field, d):
            for v in _sqrt_mod(f, u):
                out.append((u, v))
    return out


def _compose(D1, D2, f: Poly, g: int):
    u1, v1 = D1
    u2, v2 = D2
    d0, e1, e2 = poly_extgcd(u1, u2)
    d, c1, c2 = poly_extgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    dd = d * d
    u = (u1 * u2) // dd
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)) // d) % u
    while u.degree > g:
        u = (f - v * v) // u
        u = u.monic()
        v = (-v) % u
    return (u, v)


def _negate(D, f: Poly):
    u, v = D
    return (u, (-v) % u if u.degree > 0 else Poly(f.field))


def _scalar(n: int, D, f: Poly, g: int, identity):
    acc = identity
    add = D
    while n:
        if n & 1:
            acc = _compose(acc, add, f, g)
        n >>= 1
        if n:
            add = _compose(add, add, f, g)
    return acc


def _group_sanity(elements, f: Poly, g: int, identity) -> None:
    elem_set = set(elements)
    for x in elements:
        if _compose(x, identity, f, g) != x:
            raise CurveClassError("internal: identity law fails")
        if _compose(x, _negate(x, f), f, g) != identity:
            raise CurveClassError("internal: inverse law fails")
    rng = random.Random(_SANITY_SEED)
    n = len(elements)
    for _ in range(_SANITY_TRIALS):
        a = elements[rng.randrange(n)]
        b = elements[rng.randrange(n)]
        c = elements[rng.randrange(n)]
        ab = _compose(a, b, f, g)
        if ab not in elem_set:
            raise CurveClassError("internal: composition left the divisor set")
        if _compose(ab, c, f, g) != _compose(a, _compose(b, c, f, g), f, g):
            raise CurveClassError("internal: associativity fails")


def _invariant_factors(elements, f: Poly, g: int, identity) -> tuple[int, ...]:
    N = len(elements)
    if N == 1:
        return ()
    parts: dict[int, list[int]] = {}
    for l in prime_factors(N):
        a = 0
        n = N
        while n % l == 0:
            n //= l
            a += 1
        cofactor = N // l**a
        # multiplication by the cofactor projects onto the l-Sylow subgroup,
        # hitting each Sylow element exactly cofactor times
        counts = [0] * (a + 1)
        for x in elements:
            y = _scalar(cofactor, x, f, g, identity)
            j = 0
            while y != identity:
                y = _scalar(l, y, f, g, identity)
                j += 1
            counts[j] += 1
        if counts[0] != cofactor:
            raise CurveClassError("internal: Sylow projection miscount")
        # running sums are cofactor * #Syl[l^j]; successive ratios l^{d_j}
        # give d_j = number of cyclic l-components with exponent >= j
        profile = []
        prev = counts[0]
        running = counts[0]
        for j in range(1, a + 1):
            running += counts[j]
            if running % prev:
                raise CurveClassError("internal: torsion counts must nest")
            ratio = running // prev
            d = 0
            while ratio > 1:
                if ratio % l:
                    raise CurveClassError("internal: torsion ratio not an l-power")
                ratio //= l
                d += 1
            profile.append(d)
            prev = running
        if running != N:
            raise CurveClassError("internal: torsion counts must exhaust the group")
        if any(profile[i] < profile[i + 1] for i in range(len(profile) - 1)):
            raise CurveClassError("internal: exponent profile must be non-increasing")
        # the conjugate partition of the profile is the exponent multiset
        exps = []
        i = 1
        while profile and profile[0] >= i:
            exps.append(sum(1 for dj in profile if dj >= i))
            i += 1
        if sum(exps) != a:
            raise CurveClassError("internal: exponents must sum to the l-valuation")
        parts[l] = exps
    r = max(len(v) for v in parts.values())
    inv = []
    for i in range(r):
        d = 1
        for l, exps in parts.items():
            j = r - 1 - i
            if j < len(exps):
                d *= l ** exps[j]
        inv.append(d)
    inv = [d for d in inv if d > 1]
    prod = 1
    for d in inv:
        prod *= d
    if prod != N:
        raise CurveClassError("internal: invariant factors must multiply to the order")
    for i in range(len(inv) - 1):
        if inv[i + 1] % inv[i]:
            raise CurveClassError("internal: invariant factor chain broken")
    return tuple(inv)


def jacobian_group(curve: Curve, budget: int | None = None) -> AbelianGroupStructure:
    """Enumerate Pic^0(F_q) and return its abelian group structure."""
    model = curve.model
    if isinstance(model, ProjectiveLine):
        return AbelianGroupStructure(order=1, invariant_factors=())
    if not isinstance(model, DoubleCover):
        raise OracleUnsupportedModel(f"no oracle for {model!r}")
    field = model.field
    if field.p == 2:
        raise OracleUnsupportedModel("oracle needs odd characteristic")
    if not model.h.is_zero:
        raise OracleUnsupportedModel("oracle needs a completed square (h = 0)")
    f = model.f
    g = curve.genus
    if f.degree != 2 * g + 1:
        raise OracleUnsupportedModel(
            "oracle needs an odd-degree model (one point at infinity)"
        )
    if field.q**g > ORACLE_ENUM_CAP:
        raise BudgetExceeded(
            f"q^g = {field.q ** g} exceeds the enumeration cap {ORACLE_ENUM_CAP}"
        )
    elements = _mumford_elements(f, g)
    if len(elements) > ORACLE_ORDER_CAP:
        raise BudgetExceeded(
            f"group order {len(elements)} exceeds the cap {ORACLE_ORDER_CAP}"
        )
    identity = elements[0]
    _group_sanity(elements, f, g, identity)
    inv = _invariant_factors(elements, f, g, identity)
    return AbelianGroupStructure(order=len(elements), invariant_factors=inv)
