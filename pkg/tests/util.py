"""Shared builders and pinned fixtures for the suite."""

from curveclass import model_from_json, validate


def curve_json(p, m=1, f=None, h=None, modulus=None):
    field = {"p": p, "m": m}
    if modulus is not None:
        field["modulus"] = list(modulus)
    if f is None:
        model = {"kind": "projective_line"}
    else:
        model = {"kind": "double_cover", "f": list(f), "h": list(h or [])}
    return {"field": field, "model": model}


def build(p, m=1, f=None, h=None, modulus=None):
    return validate(model_from_json(curve_json(p, m, f, h, modulus)))


# lex-first hits from scripts/find_special_curves.py, frozen
E_H3_F3 = (1, 2, 1, 1)        # x^3+x^2+2x+1 over F_3: L = 1 - u + 3u^2, h = 3
E_H6_F3 = (0, 2, 1, 1)        # x^3+x^2+2x over F_3: h = 6
G2_X5PX = (0, 1, 0, 0, 0, 1)  # y^2 = x^5+x: h = 12/36/64 over F_3/F_5/F_7

# hand-checked elliptic fixtures
E_Z4_F3 = (0, 1, 0, 1)        # y^2 = x^3+x over F_3: h = 4, class group Z/4
E_V4_F3 = (0, 2, 0, 1)        # y^2 = x^3+2x over F_3: h = 4, Z/2 x Z/2
