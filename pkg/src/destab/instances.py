"""JSON instance files and reports; exact values only, never floating point.

Rationals travel as strings like "3/4" or "-16"; polynomials as lists of such
strings with the constant term first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from .model import FiltrationSpec, InstanceError, SheafData, StabilityParam
from .pivots import PivotSet
from .poly import UniPoly
from .stability import CheckVerdict, Value

Weights = tuple[Fraction, ...]


def parse_frac(text: Any) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InstanceError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError(f"invalid rational {text!r}: {exc}") from exc


def frac_str(value: Fraction) -> str:
    return str(value)


def parse_poly(coeffs: Any) -> UniPoly:
    if not isinstance(coeffs, list):
        raise InstanceError(f"expected a coefficient list, got {coeffs!r}")
    return UniPoly.from_coeffs([parse_frac(c) for c in coeffs])


def poly_list(poly: UniPoly) -> list[str]:
    return [frac_str(c) for c in poly.coeffs]


def value_json(value: Value) -> Any:
    if isinstance(value, UniPoly):
        return poly_list(value)
    return frac_str(value)


def _parse_sheaf(obj: Any, where: str) -> SheafData:
    if not isinstance(obj, dict):
        raise InstanceError(f"{where}: expected an object")
    try:
        rank = int(obj["rank"])
        degree = int(obj["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"{where}: rank and degree must be integers: {exc}") from exc
    hilbert = parse_poly(obj["hilbert"]) if "hilbert" in obj else None
    return SheafData(rank=rank, degree=degree, hilbert=hilbert)


def parse_instance(
    obj: Any,
) -> tuple[FiltrationSpec, PivotSet, StabilityParam, Optional[Weights]]:
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    mode = obj.get("mode", "slope")
    if mode not in ("slope", "hilbert"):
        raise InstanceError(f"mode must be 'slope' or 'hilbert', got {mode!r}")
    try:
        arity = int(obj["arity"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"arity: {exc}") from exc
    multiplicity = int(obj.get("multiplicity", 1))
    total = _parse_sheaf(obj.get("total"), "total")
    steps_raw = obj.get("steps", [])
    if not isinstance(steps_raw, list):
        raise InstanceError("steps must be a list")
    steps = tuple(_parse_sheaf(st, f"steps[{k}]") for k, st in enumerate(steps_raw))
    fs = FiltrationSpec(arity=arity, multiplicity=multiplicity, total=total, steps=steps)

    delta = obj.get("delta")
    if mode == "slope":
        sp = StabilityParam.slope(parse_frac(delta))
    else:
        sp = StabilityParam.hilbert(parse_poly(delta))

    pivots_raw = obj.get("pivots")
    if not isinstance(pivots_raw, list) or not pivots_raw:
        raise InstanceError("pivots must be a nonempty list of integer tuples")
    try:
        tuples = [tuple(int(c) for c in p) for p in pivots_raw]
    except (TypeError, ValueError) as exc:
        raise InstanceError(f"pivots: {exc}") from exc
    ps = PivotSet.from_tuples(tuples, t=fs.t, arity=arity)

    weights: Optional[Weights] = None
    if obj.get("weights") is not None:
        if not isinstance(obj["weights"], list):
            raise InstanceError("weights must be a list of rational strings")
        weights = tuple(parse_frac(w) for w in obj["weights"])
        if any(w <= 0 for w in weights):
            raise InstanceError("weights must be strictly positive")
    return fs, ps, sp, weights


def _sheaf_json(sd: SheafData) -> dict:
    out: dict[str, Any] = {"rank": sd.rank, "degree": sd.degree}
    if sd.hilbert is not None:
        out["hilbert"] = poly_list(sd.hilbert)
    return out


def instance_json(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam, weights: Optional[Weights]
) -> dict:
    out: dict[str, Any] = {
        "mode": sp.mode,
        "arity": fs.arity,
        "multiplicity": fs.multiplicity,
        "total": _sheaf_json(fs.total),
        "steps": [_sheaf_json(st) for st in fs.steps],
        "delta": frac_str(sp.slope_value)
        if sp.mode == "slope"
        else poly_list(sp.hilbert_value),
        "pivots": [list(p) for p in ps.pivots],
    }
    if weights is not None:
        out["weights"] = [frac_str(w) for w in weights]
    return out


def verdict_json(verdict: CheckVerdict) -> dict:
    out: dict[str, Any] = {
        "min_value": value_json(verdict.min_value),
        "witness": [frac_str(w) for w in verdict.witness],
        "attaining_pivot": list(verdict.attaining_pivot),
        "classification": verdict.classification,
        "violated": verdict.violated,
    }
    if verdict.boundary_support is not None:
        out["boundary_support"] = list(verdict.boundary_support)
    return out
