"""JSON (de)serialization with bit-exact round trips.

All scalars use the exact text form: a rational is "p/q" or "p"; a
cyclotomic number is the array of its power-basis coordinates relative
to the document's conductor.  Deserialization re-runs the full axiom
check and grouplike verification before returning anything.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hopf import GrouplikeSet, HopfAlgebraData, TensorSquareElement, validate
from .linalg import ExactMatrix
from .scalars import scalar_from_json, scalar_to_json

SCHEMA = "hopf-qexp/1"


class SchemaError(ValueError):
    """A malformed or axiom-violating document."""


def algebra_to_dict(H: HopfAlgebraData, r_matrix: TensorSquareElement | None = None) -> dict:
    n = H.dim
    zero = H.zero_scalar
    mult = []
    for (i, j) in sorted(H.mult):
        vec = H.mult[(i, j)]
        dense = [scalar_to_json(vec.get(k, zero)) for k in range(n)]
        mult.append([i, j, dense])
    comult = []
    for k in range(n):
        for (i, j) in sorted(H.comult[k]):
            comult.append([k, i, j, scalar_to_json(H.comult[k][(i, j)])])
    doc = {
        "schema": SCHEMA,
        "kind": "hopf-algebra",
        "name": H.name,
        "dim": n,
        "conductor": H.conductor,
        "basis_labels": list(H.basis_labels),
        "unit": [scalar_to_json(v) for v in H.unit],
        "counit": [scalar_to_json(v) for v in H.counit],
        "mult": mult,
        "comult": comult,
        "antipode": [[scalar_to_json(e) for e in row] for row in H.antipode.entries],
    }
    if H.grouplike_vectors is not None:
        doc["grouplikes"] = [[scalar_to_json(v) for v in g] for g in H.grouplike_vectors]
    if H.grading is not None:
        doc["grading"] = list(H.grading)
    if r_matrix is not None:
        m = r_matrix.coeff_matrix()
        doc["r_matrix"] = [[scalar_to_json(e) for e in row] for row in m.entries]
    return doc


def _field(doc: dict, name: str):
    if name not in doc:
        raise SchemaError(f"missing field: {name}")
    return doc[name]


def algebra_from_dict(doc: dict, check: bool = True) -> HopfAlgebraData:
    if not isinstance(doc, dict):
        raise SchemaError("document is not a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema: {doc.get('schema')!r}")
    try:
        n = int(_field(doc, "dim"))
        cond = int(_field(doc, "conductor"))
        name = str(_field(doc, "name"))
        labels = list(_field(doc, "basis_labels"))

        def sc(data):
            return scalar_from_json(data, cond)

        unit = [sc(v) for v in _field(doc, "unit")]
        counit = [sc(v) for v in _field(doc, "counit")]
        mult = {}
        for i, j, dense in _field(doc, "mult"):
            mult[(int(i), int(j))] = {k: sc(v) for k, v in enumerate(dense)}
        comult = [dict() for _ in range(n)]
        for k, i, j, coeff in _field(doc, "comult"):
            comult[int(k)][(int(i), int(j))] = sc(coeff)
        antipode = ExactMatrix([[sc(e) for e in row]
                                for row in _field(doc, "antipode")], cond)
        grouplikes = None
        if "grouplikes" in doc:
            grouplikes = [[sc(v) for v in g] for g in doc["grouplikes"]]
        grading = [int(d) for d in doc["grading"]] if "grading" in doc else None
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise SchemaError(f"malformed document: {exc}") from exc
    try:
        H = HopfAlgebraData(
            name=name, dim=n, conductor=cond, basis_labels=labels,
            mult=mult, unit=unit, comult=comult, counit=counit,
            antipode=antipode, grouplike_vectors=grouplikes, grading=grading)
    except ValueError as exc:
        raise SchemaError(f"inconsistent structure data: {exc}") from exc
    if check:
        violations = validate(H)
        if violations:
            raise SchemaError("axiom check failed: " + "; ".join(violations))
        if H.grouplike_vectors is not None:
            try:
                GrouplikeSet.build(H, H.grouplike_vectors)
            except ValueError as exc:
                raise SchemaError(f"grouplike verification failed: {exc}") from exc
    return H


def write_algebra(H: HopfAlgebraData, path,
                  r_matrix: TensorSquareElement | None = None) -> None:
    Path(path).write_text(dumps(algebra_to_dict(H, r_matrix)))


def read_algebra(path, check: bool = True) -> HopfAlgebraData:
    return algebra_from_dict(_load(path), check=check)


def twist_from_dict(doc: dict, algebra: HopfAlgebraData | None = None,
                    check: bool = True):
    """Resolve a twist file: {algebra: preset-name or inline, J, J_inv?}.

    With check=True (the default) the twist axioms are verified and a
    violation raises SchemaError; with check=False the caller gets the
    raw candidate (J_inv may be None when J is singular) and is expected
    to run is_twist itself.
    """
    from .twist import TwistData, invert_in_tensor_square, is_twist

    if not isinstance(doc, dict):
        raise SchemaError("twist document is not a JSON object")
    if algebra is None:
        spec = _field(doc, "algebra")
        if isinstance(spec, str):
            from .presets import get_preset

            algebra = get_preset(spec)
        else:
            algebra = algebra_from_dict(spec)
    cond = algebra.conductor
    n = algebra.dim

    def tensor_from_matrix(rows):
        if len(rows) != n or any(len(r) != n for r in rows):
            raise SchemaError("twist coefficient matrix has the wrong shape")
        data = {(i, j): scalar_from_json(rows[i][j], cond)
                for i in range(n) for j in range(n)}
        return TensorSquareElement(algebra, data)

    try:
        J = tensor_from_matrix(_field(doc, "J"))
        J_inv = tensor_from_matrix(doc["J_inv"]) if "J_inv" in doc else None
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"malformed twist document: {exc}") from exc
    if J_inv is None:
        J_inv = invert_in_tensor_square(algebra, J)
        if J_inv is None and check:
            raise SchemaError("J is not invertible")
    if check:
        ok, details = is_twist(algebra, J, J_inv)
        if not ok:
            raise SchemaError("not a twist: " + "; ".join(details))
    return TwistData(parent=algebra, J=J, J_inv=J_inv)


def twist_to_dict(T) -> dict:
    H = T.parent
    return {
        "schema": SCHEMA,
        "kind": "twist",
        "algebra": algebra_to_dict(H),
        "J": [[scalar_to_json(e) for e in row] for row in T.J.coeff_matrix().entries],
        "J_inv": [[scalar_to_json(e) for e in row]
                  for row in T.J_inv.coeff_matrix().entries],
    }


def read_twist(path, algebra: HopfAlgebraData | None = None, check: bool = True):
    return twist_from_dict(_load(path), algebra=algebra, check=check)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
