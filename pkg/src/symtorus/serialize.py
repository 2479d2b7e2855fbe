"""JSON interchange for every description the tool understands.

Rationals travel as strings "p/q" (bare "p" when the denominator is 1),
so values survive round trips losslessly. Matrices and vectors are
row-major arrays of such strings. The top-level description format is

    {"case": "delzant" | "product_t2s2" | "lagrangian_free"
             | "symplectic_orbits",
     "data": {...}}

Standalone monodromy datum files are also accepted where a datum makes
sense: {"signature": {...}, "dim": d, "free": [...], "torsion": [...]}.
"""

import json
from fractions import Fraction

from symtorus.classify4d import (
    DelzantPolygon,
    ProductT2S2,
    SymplecticOrbitIngredients,
    validate_description,
)
from symtorus.errors import ParseError, ValidationError
from symtorus.lagrangian import LagrangianFreeIngredients
from symtorus.monodromy import validate_datum
from symtorus.orbisurface import is_good, normalize_signature
from symtorus.torus import TorusElement

CASE_TAGS = {
    "delzant": DelzantPolygon,
    "product_t2s2": ProductT2S2,
    "lagrangian_free": LagrangianFreeIngredients,
    "symplectic_orbits": SymplecticOrbitIngredients,
}


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(value, where=""):
    context = " at %s" % where if where else ""
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError("expected an exact rational%s, got %r" % (context, value))
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError("expected a rational string%s, got %r" % (context, value))
    parts = value.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den == 0:
                raise ParseError("zero denominator%s in %r" % (context, value))
            return Fraction(num, den)
    except ValueError:
        pass
    raise ParseError("malformed rational%s: %r" % (context, value))


def _parse_vector(values, where):
    if not isinstance(values, (list, tuple)):
        raise ParseError("expected an array at %s" % where)
    return tuple(parse_rational(v, "%s[%d]" % (where, i))
                 for i, v in enumerate(values))


def _parse_matrix(rows, where):
    if not isinstance(rows, (list, tuple)) or not rows:
        raise ParseError("expected a matrix at %s" % where)
    return tuple(_parse_vector(row, "%s[%d]" % (where, i))
                 for i, row in enumerate(rows))


def parse_signature(obj, where="signature"):
    if not isinstance(obj, dict):
        raise ParseError("expected an object at %s" % where)
    try:
        genus = obj["genus"]
        orders = obj["orders"]
    except KeyError as missing:
        raise ParseError("missing %s in %s" % (missing, where)) from None
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise ParseError("genus must be an integer at %s" % where)
    if not isinstance(orders, list) or any(
            not isinstance(o, int) or isinstance(o, bool) for o in orders):
        raise ParseError("orders must be an integer array at %s" % where)
    try:
        return normalize_signature(genus, orders)
    except ValueError as exc:
        raise ParseError("%s at %s" % (exc, where)) from None


def signature_to_json(sig):
    return {"genus": sig.genus, "orders": list(sig.orders)}


def _parse_images(rows, where):
    if not isinstance(rows, (list, tuple)):
        raise ParseError("expected an array of points at %s" % where)
    return tuple(TorusElement(_parse_vector(row, "%s[%d]" % (where, i)))
                 for i, row in enumerate(rows))


def parse_datum(obj, signature=None, where="datum"):
    if not isinstance(obj, dict):
        raise ParseError("expected an object at %s" % where)
    if signature is None:
        signature = parse_signature(obj.get("signature"), where + ".signature")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer at %s" % where)
    if "free" not in obj or "torsion" not in obj:
        raise ParseError("missing free/torsion arrays at %s" % where)
    free = _parse_images(obj["free"], where + ".free")
    torsion = _parse_images(obj["torsion"], where + ".torsion")
    return validate_datum(signature, free, torsion, dim)


def datum_to_json(datum):
    return {
        "signature": signature_to_json(datum.signature),
        "dim": datum.dim,
        "free": [[format_rational(q) for q in t.coords] for t in datum.free],
        "torsion": [[format_rational(q) for q in t.coords]
                    for t in datum.torsion],
    }


def _parse_delzant(data):
    vertices = data.get("vertices")
    if not isinstance(vertices, list):
        raise ParseError("delzant data needs a vertices array")
    return DelzantPolygon(_parse_matrix(vertices, "vertices"))


def _parse_product(data):
    return ProductT2S2(
        parse_rational(data.get("torus_area"), "torus_area"),
        parse_rational(data.get("sphere_area"), "sphere_area"),
    )


def _parse_lagrangian(data):
    basis = _parse_matrix(data.get("P_basis"), "P_basis")
    if len(basis) != 2 or any(len(r) != 2 for r in basis):
        raise ParseError("P_basis must be a 2x2 matrix")
    c_value = _parse_vector(data.get("c"), "c")
    if len(c_value) != 2:
        raise ParseError("c must be a 2-vector")
    tau_rows = _parse_matrix(data.get("tau"), "tau")
    if len(tau_rows) != 2 or any(len(r) != 2 for r in tau_rows):
        raise ParseError("tau must hold two 2-vectors")
    tau = tuple(TorusElement(row) for row in tau_rows)
    return LagrangianFreeIngredients(basis, c_value, tau)


def _parse_symplectic_orbits(data):
    signature = parse_signature(data.get("signature"))
    if not is_good(signature):
        # Checked before the datum so the signature defect is the one
        # reported; a bad signature cannot carry a valid datum anyway.
        raise ValidationError(
            "bad orbifold: excluded signature (0; o1) or (0; o1, o2) "
            "with distinct orders")
    area = parse_rational(data.get("area"), "area")
    sigma_t = _parse_matrix(data.get("sigma_t"), "sigma_t")
    datum = parse_datum(data, signature=signature, where="data")
    return SymplecticOrbitIngredients(signature, area, sigma_t, datum)


def parse_description(text, source="<input>"):
    """Parse and fully validate a tagged description document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s: invalid JSON: %s" % (source, exc)) from None
    if not isinstance(doc, dict):
        raise ParseError("%s: expected a JSON object" % source)
    if "case" in doc:
        tag = doc["case"]
        if tag not in CASE_TAGS:
            raise ParseError("%s: unknown case tag %r" % (source, tag))
        data = doc.get("data")
        if not isinstance(data, dict):
            raise ParseError("%s: missing data object" % source)
        parser = {
            "delzant": _parse_delzant,
            "product_t2s2": _parse_product,
            "lagrangian_free": _parse_lagrangian,
            "symplectic_orbits": _parse_symplectic_orbits,
        }[tag]
        try:
            desc = parser(data)
            validate_description(desc)
        except ParseError as exc:
            raise ParseError("%s: %s" % (source, exc)) from None
        except ValidationError as exc:
            raise ValidationError("%s: %s" % (source, exc)) from exc
        except (ValueError, TypeError) as exc:
            # domain constructors reject inconsistent shapes/values
            raise ValidationError("%s: %s" % (source, exc)) from exc
        return desc
    raise ParseError("%s: missing case tag" % source)


def parse_datum_document(text, source="<input>"):
    """Parse a standalone monodromy datum or a symplectic-orbit file."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s: invalid JSON: %s" % (source, exc)) from None
    if not isinstance(doc, dict):
        raise ParseError("%s: expected a JSON object" % source)
    try:
        if doc.get("case") == "symplectic_orbits":
            return _parse_symplectic_orbits(doc.get("data") or {}).datum
        if "case" in doc:
            raise ParseError("case %r carries no monodromy datum"
                             % doc["case"])
        return parse_datum(doc, where="datum")
    except ParseError as exc:
        raise ParseError("%s: %s" % (source, exc)) from None
    except ValidationError as exc:
        raise ValidationError("%s: %s" % (source, exc)) from exc
    except (ValueError, TypeError) as exc:
        raise ValidationError("%s: %s" % (source, exc)) from exc


def description_to_json(desc):
    if isinstance(desc, DelzantPolygon):
        return {"case": "delzant", "data": {
            "vertices": [[format_rational(x) for x in p]
                         for p in desc.vertices]}}
    if isinstance(desc, ProductT2S2):
        return {"case": "product_t2s2", "data": {
            "torus_area": format_rational(desc.torus_area),
            "sphere_area": format_rational(desc.sphere_area)}}
    if isinstance(desc, LagrangianFreeIngredients):
        return {"case": "lagrangian_free", "data": {
            "P_basis": [[format_rational(x) for x in row]
                        for row in desc.p_basis],
            "c": [format_rational(x) for x in desc.c_value],
            "tau": [[format_rational(q) for q in t.coords]
                    for t in desc.tau]}}
    if isinstance(desc, SymplecticOrbitIngredients):
        data = datum_to_json(desc.datum)
        data["area"] = format_rational(desc.area)
        data["sigma_t"] = [[format_rational(x) for x in row]
                           for row in desc.sigma_t]
        return {"case": "symplectic_orbits", "data": data}
    raise TypeError("not a manifold description: %r" % (desc,))


def dumps_description(desc, indent=2):
    return json.dumps(description_to_json(desc), indent=indent)
