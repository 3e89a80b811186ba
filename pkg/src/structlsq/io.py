"""JSON encoding of matrices, scalar products and structure classes.

A matrix object is ``{"rows": n, "cols": p, "re": [[...]], "im": [[...]]}``
with ``im`` optional.  Floats go through :func:`repr`-style shortest
round-trip formatting (the default of :mod:`json`), so encode/decode is
lossless.
"""

import json

import numpy as np

from .structures import Kind, ScalarProduct, StructureClass


def matrix_to_json(A):
    A = np.asarray(A)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    n, p = A.shape
    obj = {"rows": int(n), "cols": int(p), "re": np.real(A).astype(float).tolist()}
    if np.iscomplexobj(A) and np.any(A.imag != 0):
        obj["im"] = A.imag.astype(float).tolist()
    return obj


def matrix_from_json(obj):
    if not isinstance(obj, dict) or "re" not in obj:
        raise ValueError("matrix object needs at least a 're' field")
    n = int(obj.get("rows", len(obj["re"])))
    p = int(obj.get("cols", len(obj["re"][0]) if n else 0))
    re = np.array(obj["re"], dtype=float).reshape(n, p)
    if "im" in obj and obj["im"] is not None:
        im = np.array(obj["im"], dtype=float).reshape(n, p)
        return re + 1j * im
    return re


def scalar_product_from_json(obj):
    return ScalarProduct(matrix_from_json(obj["M"]), obj.get("form", "bilinear"))


def structure_from_json(obj):
    """Accept ``"herm"`` / ``"sym-R"`` shorthands or a full object.

    Full form: ``{"kind": ..., "field": "real"|"complex",
    "scalar_product": {"form": ..., "M": <matrix>}}``.
    """
    if isinstance(obj, str):
        name = obj.lower()
        field = "complex"
        for suffix, fld in (("-r", "real"), ("-c", "complex")):
            if name.endswith(suffix):
                name, field = name[: -len(suffix)], fld
        return StructureClass(Kind(name), field)
    sp = obj.get("scalar_product")
    return StructureClass(
        Kind(obj["kind"]),
        obj.get("field", "complex"),
        scalar_product_from_json(sp) if sp is not None else None,
    )


def structure_to_json(S):
    obj = {"kind": S.kind.value, "field": S.field}
    if S.scalar_product is not None:
        obj["scalar_product"] = S.scalar_product.to_json()
    return obj


def dumps(obj):
    return json.dumps(obj, indent=2)
