"""Marked-curve models: validation, point counts, closed-point census.

Two model kinds are supported over a finite field F_q:

* ``projective_line`` -- P^1 itself.
* ``double_cover``    -- the smooth projective model of y^2 + h(x)*y = f(x).

Validation computes the genus and the places above x = infinity straight from
the defining data.  In odd characteristic the model must be a completed
square (h = 0) with f squarefree.  In characteristic 2 the model needs
h != 0; smoothness of the affine model is checked at the zeros of h, and the
genus comes from the ramification of the degree-2 cover: the function
u = f/h^2 is reduced at each pole by substitutions u -> u + w^2 + w until the
pole order is odd (ramified, conductor exponent m_P + 1) or the pole is gone
(unramified).
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import resolve_budget
from .counting import affine_count
from .errors import (
    BudgetExceeded,
    CurveClassError,
    GeometricallyReducible,
    SingularModel,
    UnsupportedModel,
)
from .gf import (
    Field,
    Poly,
    ResidueField,
    field_create,
    irreducibles,
    poly_factor,
    poly_gcd,
    squarefree,
    x_poly,
)


@dataclass(frozen=True)
class ProjectiveLine:
    field: Field

    kind = "projective_line"


@dataclass(frozen=True)
class DoubleCover:
    """Affine model y^2 + h(x)*y = f(x); h = 0 outside characteristic 2."""

    field: Field
    f: Poly
    h: Poly

    kind = "double_cover"


@dataclass(frozen=True)
class ClosedPoint:
    """One closed point of the smooth projective model.

    kind is "plain" (projective line), "ramified", "split", "inert" (finite
    points of a double cover, keyed by the monic irreducible pi below them),
    or "infinity".  Split points carry a canonical y-representative of degree
    < deg pi.  An inert point has degree 2*deg(pi).
    """

    id: str
    degree: int
    kind: str
    pi: Poly | None = None
    y_rep: Poly | None = None
    slot: int | None = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "degree": self.degree,
            "kind": self.kind,
            "pi": None if self.pi is None else self.pi.to_json(),
            "y": None if self.y_rep is None else self.y_rep.to_json(),
        }


@dataclass(frozen=True)
class Curve:
    """A validated model together with its genus and places at infinity."""

    model: ProjectiveLine | DoubleCover
    genus: int
    infinity: tuple[ClosedPoint, ...]

    @property
    def field(self) -> Field:
        return self.model.field


# ---------------------------------------------------------------------------
# wire format


def field_from_json(data) -> Field:
    if not isinstance(data, dict):
        raise CurveClassError("field description must be an object")
    try:
        p = int(data["p"])
        m = int(data.get("m", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveClassError(f"bad field description: {exc}") from exc
    modulus = data.get("modulus")
    return field_create(p, m, modulus)


def field_to_json(field: Field) -> dict:
    out: dict = {"p": field.p, "m": field.m}
    if field.m > 1:
        out["modulus"] = list(field.modulus)
    return out


def model_from_json(data) -> ProjectiveLine | DoubleCover:
    if not isinstance(data, dict):
        raise CurveClassError("curve description must be an object")
    if "field" not in data or "model" not in data:
        raise CurveClassError('curve description needs "field" and "model"')
    field = field_from_json(data["field"])
    mdesc = data["model"]
    if not isinstance(mdesc, dict) or "kind" not in mdesc:
        raise CurveClassError('model description needs a "kind"')
    kind = mdesc["kind"]
    if kind == "projective_line":
        return ProjectiveLine(field)
    if kind == "double_cover":
        try:
            f = Poly.from_json(field, mdesc.get("f", []))
            h = Poly.from_json(field, mdesc.get("h", []))
        except CurveClassError:
            raise
        except (TypeError, ValueError) as exc:
            raise CurveClassError(f"bad polynomial data: {exc}") from exc
        return DoubleCover(field, f, h)
    raise CurveClassError(f"unknown model kind {kind!r}")


def model_to_json(model) -> dict:
    if isinstance(model, ProjectiveLine):
        mdesc: dict = {"kind": "projective_line"}
    else:
        mdesc = {"kind": "double_cover", "f": model.f.to_json(), "h": model.h.to_json()}
    return {"field": field_to_json(model.field), "model": mdesc}


def curve_to_json(curve: Curve) -> dict:
    out = model_to_json(curve.model)
    out["genus"] = curve.genus
    out["infinity"] = [pt.to_json() for pt in curve.infinity]
    return out


# ---------------------------------------------------------------------------
# validation


def validate(model) -> Curve:
    """Check the model defines a smooth geometrically irreducible curve.

    Returns the curve with genus and infinity places filled in.  Raises
    SingularModel / GeometricallyReducible / UnsupportedModel otherwise.
    """
    if isinstance(model, ProjectiveLine):
        pt = ClosedPoint(id="d1#inf0", degree=1, kind="infinity", slot=0)
        return Curve(model, 0, (pt,))
    if not isinstance(model, DoubleCover):
        raise CurveClassError(f"unknown model object {model!r}")
    field = model.field
    if model.f.field != field or model.h.field != field:
        raise CurveClassError("model polynomials must live over the model field")
    if field.p == 2:
        return _validate_char2(model)
    return _validate_odd(model)


def _validate_odd(model: DoubleCover) -> Curve:
    f, field = model.f, model.field
    if not model.h.is_zero:
        raise UnsupportedModel(
            "odd characteristic needs h = 0; complete the square first"
        )
    if f.is_zero:
        raise SingularModel("y^2 = 0 is not reduced")
    if f.degree == 0:
        raise GeometricallyReducible(
            "y^2 = c splits into two lines over the algebraic closure"
        )
    if not squarefree(f):
        raise SingularModel("f has a repeated root")
    genus = (f.degree - 1) // 2
    if f.degree % 2 == 1:
        inf = (ClosedPoint(id="d1#inf0", degree=1, kind="infinity", slot=0),)
    elif field.is_square_idx(f.leading().idx):
        inf = (
            ClosedPoint(id="d1#inf0", degree=1, kind="infinity", slot=0),
            ClosedPoint(id="d1#inf1", degree=1, kind="infinity", slot=1),
        )
    else:
        inf = (ClosedPoint(id="d2#inf0", degree=2, kind="infinity", slot=0),)
    return Curve(model, genus, inf)


def _validate_char2(model: DoubleCover) -> Curve:
    f, h, field = model.f, model.h, model.field
    if h.is_zero:
        raise UnsupportedModel(
            "characteristic 2 needs h != 0; y^2 = f is inseparable over F_q(x)"
        )
    _check_smooth_char2(f, h)
    num, den = _reduced_u(f, h)
    ram_total = 0
    if den.degree >= 1:
        for pi, _mult in poly_factor(den):
            m = _finite_ram_order(num, den, pi)
            if m == 0:
                raise CurveClassError(
                    "internal: pole vanished under reduction on a smooth model"
                )
            ram_total += (m + 1) * pi.degree
    m_inf, val_idx = _infinity_normalize(num, den)
    if m_inf:
        ram_total += m_inf + 1
    if ram_total == 0:
        raise GeometricallyReducible(
            "the cover is unramified everywhere, so it is split or a constant"
            " field extension"
        )
    if ram_total % 2:
        raise CurveClassError("internal: ramification total must be even")
    genus = ram_total // 2 - 1
    if m_inf:
        inf = (ClosedPoint(id="d1#inf0", degree=1, kind="infinity", slot=0),)
    elif field.trace_to_prime_idx(val_idx) == 0:
        inf = (
            ClosedPoint(id="d1#inf0", degree=1, kind="infinity", slot=0),
            ClosedPoint(id="d1#inf1", degree=1, kind="infinity", slot=1),
        )
    else:
        inf = (ClosedPoint(id="d2#inf0", degree=2, kind="infinity", slot=0),)
    return Curve(model, genus, inf)


def _check_smooth_char2(f: Poly, h: Poly) -> None:
    # F_y = h, so affine singularities can only sit above zeros of h
    if h.degree < 1:
        return
    fd, hd = f.derivative(), h.derivative()
    for pi, _mult in poly_factor(h.monic()):
        rf = ResidueField(pi, check=False)
        ybar = rf.sqrt(f % pi)
        if ybar is None:
            raise CurveClassError("internal: squaring is not onto")
        fx = rf.add(rf.mul(hd % pi, ybar), fd % pi)
        if fx.is_zero:
            raise SingularModel(
                f"affine model is singular above {pi!r} (both partials vanish)"
            )


def _reduced_u(f: Poly, h: Poly) -> tuple[Poly, Poly]:
    """f/h^2 in lowest terms with monic denominator."""
    num, den = f, h * h
    g = poly_gcd(num, den)
    if g.degree >= 1:
        num, den = num // g, den // g
    lc = den.leading()
    if lc.idx != 1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def _strip(poly: Poly, pi: Poly) -> tuple[int, Poly]:
    """Largest e with pi^e | poly, plus the cofactor (poly nonzero)."""
    e = 0
    while True:
        q, r = divmod(poly, pi)
        if not r.is_zero:
            return e, poly
        poly = q
        e += 1


def _finite_ram_order(num: Poly, den: Poly, pi: Poly) -> int:
    """Conductor order m_P of the reduced cover at pi; 0 when unramified."""
    rf = ResidueField(pi, check=False)
    while True:
        if num.is_zero:
            return 0
        a, _ = _strip(num, pi)
        b, _ = _strip(den, pi)
        v = a - b
        if v >= 0:
            return 0
        if (-v) % 2 == 1:
            return -v
        # even pole: kill the leading term with w = s/pi^k, s^2 = unit part
        k = (-v) // 2
        nn = (num // pi**a) % pi
        dd = (den // pi**b) % pi
        c = rf.mul(nn, rf.inv(dd))
        s = rf.sqrt(c)
        if s is None:
            raise CurveClassError("internal: squaring is not onto")
        pik = pi**k
        num = num * (pik * pik) + den * (s * s + s * pik)
        den = den * (pik * pik)
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num, den = num // g, den // g


def _infinity_normalize(num: Poly, den: Poly) -> tuple[int, int]:
    """(m, value_idx) at x = infinity: m = 0 means unramified with value u(inf)."""
    field = num.field
    xp = x_poly(field)
    while True:
        if num.is_zero:
            return 0, 0
        v = den.degree - num.degree
        if v > 0:
            return 0, 0
        if v == 0:
            val = num.leading() / den.leading()
            return 0, val.idx
        if (-v) % 2 == 1:
            return -v, 0
        k = (-v) // 2
        c = num.leading() / den.leading()
        s_idx = field.sqrt_idx(c.idx)
        if s_idx is None:
            raise CurveClassError("internal: squaring is not onto")
        w = (xp**k).scale(field.from_index(s_idx))
        num = num + den * (w * w + w)


# ---------------------------------------------------------------------------
# point counts over extensions


_EXT_CACHE: dict = {}


def _extension(field: Field, n: int):
    """F_{q^n} plus an embedding of F_q element indices into it."""
    key = (field.p, field.modulus, n)
    hit = _EXT_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 1:
        big = field

        def emb(idx: int) -> int:
            return idx

    elif field.m == 1:
        big = field_create(field.p, n)

        def emb(idx: int) -> int:
            # prime-field constants keep their index in the extension
            return idx

    else:
        big = field_create(field.p, field.m * n)
        mod_poly = Poly(big, field.modulus)
        roots = []
        for fac, _mult in poly_factor(mod_poly):
            if fac.degree == 1:
                roots.append(big.neg_idx(fac.coefficient(0).idx))
        if len(roots) != field.m:
            raise CurveClassError("internal: base modulus must split in the extension")
        rho = min(roots)

        def emb(idx: int, _f=field, _b=big, _r=rho) -> int:
            acc = 0
            for c in reversed(_f.digits(idx)):
                acc = _b.add_idx(_b.mul_idx(acc, _r), c)
            return acc

    _EXT_CACHE[key] = (big, emb)
    return big, emb


def count_points(curve: Curve, n: int, budget: int | None = None) -> int:
    """Number of points of the smooth projective model over F_{q^n}."""
    if n < 1:
        raise CurveClassError("extension degree must be >= 1")
    field = curve.field
    cap = resolve_budget(budget)
    if field.q**n > cap:
        raise BudgetExceeded(f"q^n = {field.q ** n} exceeds budget {cap}")
    inf = sum(pt.degree for pt in curve.infinity if n % pt.degree == 0)
    if isinstance(curve.model, ProjectiveLine):
        return field.q**n + 1
    big, emb = _extension(field, n)
    fco = [list(big.digits(emb(c))) for c in curve.model.f.coeffs]
    hco = [list(big.digits(emb(c))) for c in curve.model.h.coeffs]
    affine = affine_count(big.p, big.m, list(big.modulus), fco, hco)
    return affine + inf


# ---------------------------------------------------------------------------
# closed points


def closed_points(
    curve: Curve, max_degree: int, budget: int | None = None
) -> list[ClosedPoint]:
    """All closed points of degree <= max_degree, deterministically ordered.

    Finite points of a fixed degree are sorted by (deg pi, pi, y-representative)
    and labelled d{D}#{k}; the points above x = infinity close each degree
    block with ids d{D}#inf{slot}.
    """
    if max_degree < 1:
        raise CurveClassError("max_degree must be >= 1")
    cap = resolve_budget(budget)
    field = curve.field
    model = curve.model
    _KIND_RANK = {"plain": 0, "ramified": 0, "split": 1, "inert": 2}
    finite: dict[int, list] = {d: [] for d in range(1, max_degree + 1)}

    for dpi in range(1, max_degree + 1):
        for pi in irreducibles(field, dpi, cap):
            if isinstance(model, ProjectiveLine):
                finite[dpi].append(("plain", pi, None))
                continue
            if field.p != 2:
                v = model.f % pi
                if v.is_zero:
                    finite[dpi].append(("ramified", pi, None))
                    continue
                rf = ResidueField(pi, check=False)
                s = rf.sqrt(v)
                if s is None:
                    if 2 * dpi <= max_degree:
                        finite[2 * dpi].append(("inert", pi, None))
                    continue
                neg = rf.sub(Poly(field), s)
                ys = sorted({s, neg}, key=Poly.sort_key)
                for y in ys:
                    finite[dpi].append(("split", pi, y))
            else:
                hbar = model.h % pi
                if hbar.is_zero:
                    finite[dpi].append(("ramified", pi, None))
                    continue
                rf = ResidueField(pi, check=False)
                hinv = rf.inv(hbar)
                u = rf.mul(model.f % pi, rf.mul(hinv, hinv))
                if rf.trace_to_prime(u) != 0:
                    if 2 * dpi <= max_degree:
                        finite[2 * dpi].append(("inert", pi, None))
                    continue
                z0 = rf.artin_schreier_solve(u)
                if z0 is None:
                    raise CurveClassError("internal: trace-zero class must split")
                y0 = rf.mul(hbar, z0)
                y1 = rf.add(y0, hbar)
                ys = sorted({y0, y1}, key=Poly.sort_key)
                for y in ys:
                    finite[dpi].append(("split", pi, y))

    out: list[ClosedPoint] = []
    for d in range(1, max_degree + 1):
        entries = sorted(
            finite[d],
            key=lambda e: (
                e[1].sort_key(),
                _KIND_RANK[e[0]],
                e[2].sort_key() if e[2] is not None else (),
            ),
        )
        for k, (kind, pi, y) in enumerate(entries):
            out.append(
                ClosedPoint(id=f"d{d}#{k}", degree=d, kind=kind, pi=pi, y_rep=y)
            )
        for pt in curve.infinity:
            if pt.degree == d:
                out.append(pt)
    return out


def census(points: list[ClosedPoint], n: int) -> int:
    """Rational-point count over F_{q^n} implied by a closed-point list."""
    return sum(pt.degree for pt in points if n % pt.degree == 0)
