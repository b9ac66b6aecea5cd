"""JSON codecs for every on-disk object the CLI consumes or produces.

All encoders emit deterministic structures (terms sorted by exponent tuple,
fixed key order) so identical inputs produce byte-identical output.
Decoders raise DomainError on malformed data, which the CLI maps to a
structured error object and exit code 2.
"""

from __future__ import annotations

from .errors import DomainError
from .forms import HermitianForm, WittClass
from .lgroups import FiniteAbelianGroup
from .linalg import RingMatrix
from .pauli import (
    CliffordUnitary,
    PauliModule,
    StabilizerModule,
    elementary_unitary,
    hyperbolic_unitary,
)
from .ring import LaurentPolynomial, RingDescriptor
from .sturm import LagrangianLoop, MaslovResult, SturmSequence, validate_loop


def _expect(obj, key, kinds, what):
    if not isinstance(obj, dict) or key not in obj:
        raise DomainError(f"{what}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kinds):
        raise DomainError(f"{what}: key {key!r} has the wrong type")
    return value


# -- rings and polynomials ---------------------------------------------------


def encode_ring(ring: RingDescriptor) -> dict:
    return {
        "p": ring.p,
        "vars": [f"x{i + 1}" for i in range(ring.spatial_vars)],
        "T": ring.has_T,
    }


def decode_ring(obj) -> RingDescriptor:
    p = _expect(obj, "p", int, "ring")
    variables = _expect(obj, "vars", list, "ring")
    has_T = _expect(obj, "T", bool, "ring")
    return RingDescriptor(p, len(variables), has_T)


def encode_poly(f: LaurentPolynomial) -> dict:
    out = encode_ring(f.ring)
    out["terms"] = [
        {"e": list(exps), "c": f.terms[exps]} for exps in sorted(f.terms)
    ]
    return out


def decode_poly(obj) -> LaurentPolynomial:
    ring = decode_ring(obj)
    raw = _expect(obj, "terms", list, "polynomial")
    terms = {}
    for item in raw:
        exps = _expect(item, "e", list, "polynomial term")
        c = _expect(item, "c", int, "polynomial term")
        if len(exps) != ring.nexponents or not all(isinstance(e, int) for e in exps):
            raise DomainError("polynomial term: bad exponent tuple")
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
    return LaurentPolynomial(ring, terms)


# -- matrices and forms ------------------------------------------------------


def encode_matrix(A: RingMatrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "ring": encode_ring(A.ring),
        "entries": [[encode_poly(e) for e in row] for row in A.entries],
    }


def decode_matrix(obj) -> RingMatrix:
    rows = _expect(obj, "rows", int, "matrix")
    cols = _expect(obj, "cols", int, "matrix")
    ring = decode_ring(_expect(obj, "ring", dict, "matrix"))
    raw = _expect(obj, "entries", list, "matrix")
    if len(raw) != rows or any(
        not isinstance(r, list) or len(r) != cols for r in raw
    ):
        raise DomainError("matrix: entry grid does not match rows x cols")
    entries = [[decode_poly(e) for e in row] for row in raw]
    for row in entries:
        for e in row:
            if e.ring != ring:
                raise DomainError("matrix: entry ring differs from matrix ring")
    if rows == 0 or cols == 0:
        return RingMatrix(ring, [[ring.zero()] * cols for _ in range(rows)])
    return RingMatrix(ring, entries)


def encode_form(F: HermitianForm) -> dict:
    out = encode_matrix(F.matrix)
    out["sign"] = F.sign
    return out


def decode_form(obj) -> HermitianForm:
    sign = _expect(obj, "sign", int, "form")
    if sign not in (1, -1):
        raise DomainError("form: sign must be 1 or -1")
    return HermitianForm(decode_matrix(obj), sign)


def encode_witt(c: WittClass) -> dict:
    return {"p": c.p, "class": c.class_name}


def decode_witt(obj) -> WittClass:
    p = _expect(obj, "p", int, "witt class")
    name = _expect(obj, "class", str, "witt class")
    return WittClass.from_name(p, name)


# -- Pauli data --------------------------------------------------------------


def encode_module(S: StabilizerModule) -> dict:
    return {
        "N": S.ambient.N,
        "ring": encode_ring(S.ambient.ring),
        "generators": encode_matrix(S.generators),
    }


def decode_module(obj) -> StabilizerModule:
    n = _expect(obj, "N", int, "stabilizer module")
    ring = decode_ring(_expect(obj, "ring", dict, "stabilizer module"))
    gens = decode_matrix(_expect(obj, "generators", dict, "stabilizer module"))
    if gens.ring != ring:
        raise DomainError("stabilizer module: generator ring mismatch")
    return StabilizerModule(PauliModule(ring, n), gens)


def encode_unitary(u: CliffordUnitary) -> dict:
    return {"N": u.ambient.N, "matrix": encode_matrix(u.matrix)}


def decode_unitary(obj) -> CliffordUnitary:
    n = _expect(obj, "N", int, "unitary")
    matrix = decode_matrix(_expect(obj, "matrix", dict, "unitary"))
    return CliffordUnitary(PauliModule(matrix.ring, n), matrix)


def decode_circuit(obj) -> list:
    """Ordered list of {"kind": "E0"|"E1"|"H", "payload": form|matrix}."""
    if not isinstance(obj, list):
        raise DomainError("circuit: expected a list of steps")
    steps = []
    for item in obj:
        kind = _expect(item, "kind", str, "circuit step")
        payload = _expect(item, "payload", dict, "circuit step")
        if kind in ("E0", "E1"):
            steps.append(elementary_unitary(kind, decode_form(payload)))
        elif kind == "H":
            steps.append(hyperbolic_unitary(decode_matrix(payload)))
        else:
            raise DomainError(f"circuit step: unknown kind {kind!r}")
    return steps


def encode_circuit(steps) -> list:
    out = []
    for kind, payload in steps:
        if kind in ("E0", "E1"):
            out.append({"kind": kind, "payload": encode_form(payload)})
        elif kind == "H":
            out.append({"kind": kind, "payload": encode_matrix(payload)})
        else:
            raise DomainError(f"circuit step: unknown kind {kind!r}")
    return out


# -- loops and results -------------------------------------------------------


def encode_loop(loop: LagrangianLoop) -> dict:
    return {
        "N": loop.N,
        "ring": encode_ring(loop.ring),
        "sturm": [encode_form(q) for q in loop.seq.forms],
    }


def decode_loop(obj) -> LagrangianLoop:
    n = _expect(obj, "N", int, "loop")
    ring = decode_ring(_expect(obj, "ring", dict, "loop"))
    if not ring.has_T:
        raise DomainError("loop: the ring must include the T variable")
    raw = _expect(obj, "sturm", list, "loop")
    forms = tuple(decode_form(item) for item in raw)
    return validate_loop(SturmSequence(ring, n, forms))


def encode_maslov_result(result: MaslovResult) -> dict:
    return {
        "form": encode_form(result.form),
        "witt": encode_witt(result.witt) if result.witt is not None else None,
        "rank_parity": result.rank_parity,
        "determinant": encode_poly(result.determinant),
    }


def encode_group(g: FiniteAbelianGroup) -> dict:
    return {"invariant_factors": list(g.cyclic_orders), "name": g.name}
