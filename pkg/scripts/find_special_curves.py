#!/usr/bin/env python3
"""Brute-force searches for the pinned curves in the test suite.

Each search walks monic squarefree polynomials in lexicographic order
(constant coefficient first, ascending) and prints the first hit as a
JSON line, so every frozen constant in tests/ can be re-derived from
scratch.  Takes a few seconds total.
"""

import argparse
import json
from itertools import product

from curveclass.curve import DoubleCover, closed_points, validate
from curveclass.errors import CurveClassError
from curveclass.gf import Poly, field_create
from curveclass.ihara import ihara_sum_exceeds
from curveclass.jacobian import jacobian_group
from curveclass.zeta import l_polynomial


def monic_candidates(field, degree):
    """Monic degree-``degree`` polys, low coefficients first, lex order."""
    for tail in product(range(field.q), repeat=degree):
        yield Poly(field, tail + (1,))


def validated(field, f):
    try:
        return validate(DoubleCover(field=field, f=f, h=Poly(field, ())))
    except CurveClassError:
        return None


def emit(tag, field, curve, lp, extra=None):
    row = {
        "search": tag,
        "q": field.q,
        "f": list(curve.model.f.coeffs),
        "genus": curve.genus,
        "L": list(lp.coeffs),
        "h": lp.class_number,
    }
    if extra:
        row.update(extra)
    print(json.dumps(row, separators=(",", ":")))
    return row


def search_class_number(q, degree, target_h):
    """First monic squarefree f of the given degree with h = target_h."""
    field = field_create(q, 1)
    for f in monic_candidates(field, degree):
        curve = validated(field, f)
        if curve is None:
            continue
        lp = l_polynomial(curve)
        if lp.class_number == target_h:
            return emit(f"h={target_h} deg={degree} q={q}", field, curve, lp)
    raise SystemExit(f"no degree-{degree} curve over F_{q} with h={target_h}")


def search_undetermined(q, p):
    """Genus-2 curve over F_q with p | h and a degree-2 closed point whose
    one-point Ihara sum stays at or below g - 1 = 1.

    Such an instance lands in the open part of the decision table: the
    class-group obstruction is present but the Ihara bound cannot refute.
    """
    field = field_create(q, 1)
    for f in monic_candidates(field, 5):
        curve = validated(field, f)
        if curve is None:
            continue
        lp = l_polynomial(curve)
        if lp.class_number % p != 0:
            continue
        pts = closed_points(curve, 2)
        deg2 = [pt for pt in pts if pt.degree == 2]
        if not deg2:
            continue
        res = ihara_sum_exceeds([2], q, curve.genus)
        if res.exceeds:
            continue
        return emit(f"undetermined p={p} q={q}", field, curve, lp,
                    {"deg2_point": deg2[0].id, "ihara_approx": res.approx})
    raise SystemExit(f"no undetermined genus-2 instance over F_{q}")


def search_oracle_quintic(q):
    """First squarefree monic quintic over F_q, with its divisor class group.

    Pinned as a genus-2 fixture for the zeta-vs-enumeration cross-check.
    """
    field = field_create(q, 1)
    for f in monic_candidates(field, 5):
        curve = validated(field, f)
        if curve is None:
            continue
        lp = l_polynomial(curve)
        structure = jacobian_group(curve)
        assert structure.order == lp.class_number
        return emit(f"oracle quintic q={q}", field, curve, lp,
                    {"invariant_factors": list(structure.invariant_factors)})
    raise SystemExit(f"no squarefree quintic over F_{q}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--all", action="store_true",
                        help="run every search (default)")
    parser.parse_args(argv)

    # ordinary elliptic over F_3 with 3 | h, for the Ihara-refuted case
    search_class_number(3, 3, 3)
    # elliptic over F_3 with 2 and 3 both dividing h
    search_class_number(3, 3, 6)
    # genus-2 instance the decision table must leave open
    search_undetermined(3, 3)
    # genus-2 oracle fixtures
    for q in (3, 5, 7):
        search_oracle_quintic(q)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
