"""Canonical JSON persistence of constructed codes.

Field elements serialize as their base-p digit list, lowest degree first;
prime-field elements abbreviate to a bare integer.  Files are written with
sorted keys and a fixed layout so that save -> load -> save is byte
identical, and loading re-validates every structural invariant so that a
tampered file is rejected rather than silently verified.

Two error classes separate concerns for the CLI: a file that cannot be
parsed at all is a usage error, while a parseable file whose contents break
the code invariants is a (reportable) integrity failure.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import ALL_SCHEMES, ConstructionError, LrcCode
from .cyclic import CyclicCode
from .field import FieldElement, FiniteField, make_field, multiplicative_order
from .poly import Poly

SCHEMA_VERSION = 1


class CodeFileFormatError(ValueError):
    """The file is not a readable code description."""


class CodeFileInvariantError(ValueError):
    """The file parses but its contents violate the code invariants."""


def _element_to_json(e: FieldElement) -> int | list[int]:
    return e.rep[0] if e.field.m == 1 else list(e.rep)


def _element_from_json(field: FiniteField, obj, what: str) -> FieldElement:
    try:
        if isinstance(obj, int):
            return field.from_index(obj)
        digits = [int(v) for v in obj]
        if any(not 0 <= v < field.p for v in digits):
            raise ValueError(f"digit out of range mod {field.p}")
        return field.element(digits)
    except (TypeError, ValueError) as exc:
        raise CodeFileFormatError(f"bad element encoding for {what}: {obj!r}") from exc


def _poly_to_json(p: Poly) -> list:
    return [_element_to_json(c) for c in p.coeffs]


def _poly_from_json(field: FiniteField, obj, what: str) -> Poly:
    if not isinstance(obj, list):
        raise CodeFileFormatError(f"{what} must be a coefficient array")
    return Poly.make(field, [_element_from_json(field, c, what) for c in obj])


def code_to_dict(code: LrcCode) -> dict:
    base = code.base
    field = base.field
    return {
        "schema_version": SCHEMA_VERSION,
        "scheme": code.scheme,
        "q": field.q,
        "p": field.p,
        "m": field.m,
        "modulus": list(field.modulus) if field.modulus else None,
        "n": base.n,
        "k": base.k,
        "r": code.r,
        "d_claimed": code.d_claimed,
        "g": _poly_to_json(base.g),
        "h": _poly_to_json(base.h),
        "dual_g": _poly_to_json(base.dual_g),
        "beta": {
            "field": {
                "p": code.beta.field.p,
                "m": code.beta.field.m,
                "modulus": list(code.beta.field.modulus) if code.beta.field.modulus else None,
            },
            "rep": list(code.beta.rep),
        },
        "alpha": _element_to_json(code.alpha) if code.alpha is not None else None,
        "gamma": _element_to_json(code.gamma) if code.gamma is not None else None,
    }


def code_from_dict(data: dict) -> LrcCode:
    if not isinstance(data, dict):
        raise CodeFileFormatError("code file must hold a JSON object")
    try:
        version = data["schema_version"]
        scheme = data["scheme"]
        p, m, n = int(data["p"]), int(data["m"]), int(data["n"])
        k, r, d_claimed = int(data["k"]), int(data["r"]), int(data["d_claimed"])
        g_json, h_json, dual_json = data["g"], data["h"], data["dual_g"]
        beta_json = data["beta"]
        q = int(data["q"])
    except KeyError as exc:
        raise CodeFileFormatError(f"missing key: {exc.args[0]}") from exc
    except (TypeError, ValueError) as exc:
        raise CodeFileFormatError(f"malformed scalar field: {exc}") from exc
    if version != SCHEMA_VERSION:
        raise CodeFileFormatError(f"unsupported schema_version {version!r}")
    if scheme not in ALL_SCHEMES:
        raise CodeFileFormatError(f"unknown scheme {scheme!r}")

    try:
        field = make_field(p, m)
    except ValueError as exc:
        raise CodeFileFormatError(str(exc)) from exc
    if field.q != q:
        raise CodeFileInvariantError(f"q = {q} does not match p^m = {field.q}")
    stored_modulus = data.get("modulus")
    expected_modulus = list(field.modulus) if field.modulus else None
    if stored_modulus != expected_modulus:
        raise CodeFileInvariantError(
            f"modulus {stored_modulus} is not the canonical modulus {expected_modulus}"
        )

    g = _poly_from_json(field, g_json, "g")
    try:
        base = CyclicCode.build(field, n, g)
    except ValueError as exc:
        raise CodeFileInvariantError(f"invalid generator polynomial: {exc}") from exc
    if base.k != k:
        raise CodeFileInvariantError(f"stored k = {k} but n - deg g = {base.k}")
    if _poly_to_json(base.h) != h_json or _poly_to_json(base.dual_g) != dual_json:
        raise CodeFileInvariantError("stored h/dual_g disagree with the generator")

    try:
        beta_field = make_field(int(beta_json["field"]["p"]), int(beta_json["field"]["m"]))
        beta = _element_from_json(beta_field, list(beta_json["rep"]), "beta")
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFileFormatError(f"malformed beta: {exc}") from exc
    if list(beta_json["field"].get("modulus") or []) != list(beta_field.modulus or []):
        raise CodeFileInvariantError("beta field modulus is not canonical")
    if beta.is_zero or multiplicative_order(beta) != n:
        raise CodeFileInvariantError("beta is not a primitive n-th root of unity")

    alpha = data.get("alpha")
    gamma = data.get("gamma")
    try:
        code = LrcCode(
            base,
            r,
            d_claimed,
            scheme,
            beta,
            _element_from_json(field, alpha, "alpha") if alpha is not None else None,
            _element_from_json(field, gamma, "gamma") if gamma is not None else None,
        )
    except ConstructionError as exc:
        raise CodeFileInvariantError(str(exc)) from exc
    return code


def dumps_canonical(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save_code(code: LrcCode, path: str | Path) -> None:
    Path(path).write_text(dumps_canonical(code_to_dict(code)), encoding="utf-8")


def load_code(path: str | Path) -> LrcCode:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CodeFileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileFormatError(f"{path} is not valid JSON: {exc}") from exc
    return code_from_dict(data)
