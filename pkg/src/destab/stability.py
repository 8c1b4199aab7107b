"""Stability arithmetic over weighted filtrations with a fixed pivot set.

Everything is exact: rationals for slope mode, asymptotically ordered rational
polynomials for the polynomial (Hilbert) mode.  The destabilization decision
minimizes the piecewise-linear stability value over the closed weight simplex
by exact vertex enumeration of the per-pivot linearity regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .model import (
    FiltrationSpec,
    InstanceError,
    StabilityParam,
    guard_limit,
    require_mode,
    validate_filtration,
)
from .pivots import PivotSet, Tuple_, matrix_from_pivots, project_pivots
from .poly import UniPoly, poly_cmp
from .polytope import Row, enumerate_vertices, make_row

Value = Union[Fraction, UniPoly]
Weights = tuple[Fraction, ...]

STRICTLY_DESTABILIZED = "strictly-destabilized"
MARGINALLY_DESTABILIZED = "marginally-destabilized"
STABLE_OK = "stable-ok"
BOUNDARY_WITNESS = "boundary-witness"


def _value_sign(sp: StabilityParam, v: Value) -> int:
    if sp.mode == "slope":
        return (v > 0) - (v < 0)
    return poly_cmp(v, UniPoly.zero())


def _value_lt(sp: StabilityParam, u: Value, v: Value) -> bool:
    if sp.mode == "slope":
        return u < v
    return poly_cmp(u, v) < 0


def _check_instance(fs: FiltrationSpec, ps: PivotSet, w: Optional[Weights] = None) -> None:
    if ps.t != fs.t or ps.arity != fs.arity:
        raise InstanceError(
            f"pivot set over t={ps.t}, arity={ps.arity} does not match "
            f"filtration with t={fs.t}, arity={fs.arity}"
        )
    if w is not None and len(w) != fs.s:
        raise InstanceError(f"expected {fs.s} weights, got {len(w)}")


def constants(fs: FiltrationSpec, sp: StabilityParam) -> list[Value]:
    """Per-step linear constants of the stability value."""
    validate_filtration(fs)
    require_mode(fs, sp)
    r, a = fs.total.rank, fs.arity
    out: list[Value] = []
    for st in fs.steps:
        if sp.mode == "slope":
            out.append(
                Fraction(st.rank * fs.total.degree - r * st.degree)
                - a * sp.slope_value * st.rank
            )
        else:
            out.append(
                fs.total.hilbert.scale(st.rank)
                - st.hilbert.scale(r)
                - sp.hilbert_value.scale(a * st.rank)
            )
    return out


def gamma_vector(fs: FiltrationSpec, w: Weights) -> tuple[Fraction, ...]:
    """Rank-indexed weight profile of the filtration: nondecreasing, zero-sum."""
    _check_instance_sizes(fs, w)
    r = fs.total.rank
    gamma = [Fraction(0)] * r
    for alpha, st in zip(w, fs.steps):
        for pos in range(r):
            gamma[pos] += alpha * ((st.rank - r) if pos < st.rank else st.rank)
    return tuple(gamma)


def _check_instance_sizes(fs: FiltrationSpec, w: Weights) -> None:
    if len(w) != fs.s:
        raise InstanceError(f"expected {fs.s} weights, got {len(w)}")


def _pivot_coeffs(ps: PivotSet, s: int) -> dict[Tuple_, tuple[int, ...]]:
    """Per-pivot weight coefficients: entry i counts pivot coordinates <= i."""
    return {
        p: tuple(sum(1 for c in p if c <= i) for i in range(1, s + 1))
        for p in ps.pivots
    }


def r_value(fs: FiltrationSpec, ps: PivotSet, w: Weights) -> tuple[Fraction, Tuple_]:
    """Maximum cumulative-weight sum over pivots, with the attaining pivot."""
    _check_instance(fs, ps, w)
    coeffs = _pivot_coeffs(ps, fs.s)
    best: Optional[tuple[Fraction, Tuple_]] = None
    for p in ps.pivots:  # sorted, so ties resolve to the lexicographically smallest
        val = sum((c * a for c, a in zip(coeffs[p], w)), Fraction(0))
        if best is None or val > best[0]:
            best = (val, p)
    assert best is not None
    return best


def mu_via_pivots(fs: FiltrationSpec, ps: PivotSet, w: Weights) -> Fraction:
    rmax, _ = r_value(fs, ps, w)
    r, a = fs.total.rank, fs.arity
    return -a * sum((alpha * st.rank for alpha, st in zip(w, fs.steps)), Fraction(0)) + r * rmax


def mu_via_gamma(fs: FiltrationSpec, ps: PivotSet, w: Weights) -> Fraction:
    """Independent route to mu: minimize gamma-coordinate sums over the full table."""
    _check_instance(fs, ps, w)
    import math

    count = math.comb(fs.t + fs.arity - 1, fs.arity)
    limit = guard_limit(100_000)
    if count > limit:
        raise InstanceError(f"instance too large to enumerate: {count} tuples > {limit}")
    gamma = gamma_vector(fs, w)
    # Levels 1..s sit at rank positions ending at the step ranks; level t at rank r.
    position = {lvl: rank - 1 for lvl, rank in enumerate(fs.ranks, start=1)}
    position[fs.t] = fs.total.rank - 1
    table = matrix_from_pivots(ps)
    sums = [
        sum((gamma[position[c]] for c in tup), Fraction(0))
        for tup, one in table.items()
        if one
    ]
    return -min(sums)


def is_critical(fs: FiltrationSpec, ps: PivotSet, w: Weights) -> bool:
    """True when mu of the weighted filtration exceeds the sum over its steps.

    Non-critical filtrations decompose: their mu equals the sum of the mus of
    the one-step subfiltrations, each weighted by its own coefficient.
    """
    _check_instance(fs, ps, w)
    total = mu_via_pivots(fs, ps, w)
    parts = Fraction(0)
    for i in range(1, fs.s + 1):
        sub_fs = fs.substeps([i])
        sub_ps = project_pivots(ps, [i])
        parts += mu_via_pivots(sub_fs, sub_ps, (w[i - 1],))
    return total != parts


def objective(fs: FiltrationSpec, ps: PivotSet, w: Weights, sp: StabilityParam) -> Value:
    """Exact stability value of the weighted filtration."""
    _check_instance(fs, ps, w)
    cs = constants(fs, sp)
    rmax, _ = r_value(fs, ps, w)
    r = fs.total.rank
    if sp.mode == "slope":
        return sum((alpha * c for alpha, c in zip(w, cs)), Fraction(0)) + r * sp.slope_value * rmax
    total = UniPoly.zero()
    for alpha, c in zip(w, cs):
        total = total + c.scale(alpha)
    return total + sp.hilbert_value.scale(r * rmax)


def k_of_level(ps: PivotSet, level: int) -> int:
    """Largest number of factors the morphism keeps inside the given step."""
    if not 1 <= level <= ps.t - 1:
        raise ValueError(f"level {level} out of range 1..{ps.t - 1}")
    return max(sum(1 for c in p if c <= level) for p in ps.pivots)


def check_k_semistable(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam, strict: bool = False
) -> list[bool]:
    """Per-step length-one condition: constant + r * delta * k is >= 0 (> 0 if strict)."""
    _check_instance(fs, ps)
    cs = constants(fs, sp)
    r = fs.total.rank
    results = []
    for level, c in enumerate(cs, start=1):
        k = k_of_level(ps, level)
        if sp.mode == "slope":
            value: Value = c + r * sp.slope_value * k
        else:
            value = c + sp.hilbert_value.scale(r * k)
        sgn = _value_sign(sp, value)
        results.append(sgn > 0 if strict else sgn >= 0)
    return results


@dataclass(frozen=True)
class CheckVerdict:
    min_value: Value
    witness: Weights  # point of the closed simplex attaining the minimum
    attaining_pivot: Tuple_
    classification: str
    violated: bool
    boundary_support: Optional[tuple[int, ...]] = None


def decide_destabilizing(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam, strictness: str = "semi"
) -> CheckVerdict:
    """Exact minimum of the stability value over the closed weight simplex.

    A negative minimum violates semistability (a nearby strictly positive
    rational weight also violates, by continuity).  A zero minimum attained at
    strictly positive weights violates stability only; a zero minimum attained
    only on the simplex boundary names the subfiltration supported on the
    positive coordinates instead of indicting the full flag.
    """
    if strictness not in ("semi", "stable"):
        raise InstanceError(f"unknown strictness {strictness!r}")
    validate_filtration(fs)
    require_mode(fs, sp)
    _check_instance(fs, ps)
    s = fs.s
    if s < 1:
        raise InstanceError("filtration has no steps")
    cs = constants(fs, sp)
    r = fs.total.rank
    coeffs = _pivot_coeffs(ps, s)
    simplex_eq = [make_row([1] * s, 1)]
    nonneg = [make_row([1 if j == i else 0 for j in range(s)], 0) for i in range(s)]

    def region_objective(p: Tuple_, point: Weights) -> Value:
        rmax = sum((x * alpha for x, alpha in zip(coeffs[p], point)), Fraction(0))
        if sp.mode == "slope":
            return (
                sum((alpha * c for alpha, c in zip(point, cs)), Fraction(0))
                + r * sp.slope_value * rmax
            )
        total = UniPoly.zero()
        for alpha, c in zip(point, cs):
            total = total + c.scale(alpha)
        return total + sp.hilbert_value.scale(r * rmax)

    best_value: Optional[Value] = None
    best_vertices: list[Weights] = []
    best_pivot: Optional[Tuple_] = None
    interior_witness: Optional[Weights] = None

    for p in ps.pivots:
        region_rows: list[Row] = [
            make_row([xa - xb for xa, xb in zip(coeffs[p], coeffs[q])], 0)
            for q in ps.pivots
            if q != p
        ]
        vertices = enumerate_vertices(simplex_eq, nonneg + region_rows, s)
        if not vertices:
            continue
        values = [region_objective(p, v) for v in vertices]
        region_min = values[0]
        for val in values[1:]:
            if _value_lt(sp, val, region_min):
                region_min = val
        minimizers = [
            v
            for v, val in zip(vertices, values)
            if not _value_lt(sp, region_min, val) and not _value_lt(sp, val, region_min)
        ]
        if best_value is None or _value_lt(sp, region_min, best_value):
            best_value = region_min
            best_vertices = list(minimizers)
            best_pivot = p
            interior_witness = None
        elif not _value_lt(sp, best_value, region_min):
            best_vertices.extend(minimizers)
            if best_pivot is None or p < best_pivot:
                best_pivot = p
        # A linear function minimized on a face: the face holds a strictly
        # positive point iff the centroid of its minimizing vertices is positive.
        if not _value_lt(sp, best_value, region_min) and not _value_lt(sp, region_min, best_value):
            n = len(minimizers)
            centroid = tuple(
                sum((v[i] for v in minimizers), Fraction(0)) / n for i in range(s)
            )
            if all(c > 0 for c in centroid):
                interior_witness = centroid

    assert best_value is not None and best_pivot is not None
    best_vertices.sort()
    witness = best_vertices[0]
    sgn = _value_sign(sp, best_value)

    if sgn < 0:
        classification = STRICTLY_DESTABILIZED
        boundary = None
    elif sgn > 0:
        classification = STABLE_OK
        boundary = None
    elif interior_witness is not None:
        classification = MARGINALLY_DESTABILIZED
        witness = interior_witness
        boundary = None
    else:
        classification = BOUNDARY_WITNESS
        boundary = tuple(i + 1 for i, c in enumerate(witness) if c > 0)

    violated = sgn < 0 or (strictness == "stable" and classification == MARGINALLY_DESTABILIZED)
    return CheckVerdict(
        min_value=best_value,
        witness=witness,
        attaining_pivot=best_pivot,
        classification=classification,
        violated=violated,
        boundary_support=boundary,
    )


def region_minima(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam
) -> list[tuple[Tuple_, list[tuple[Weights, Value]]]]:
    """Per-pivot region vertices with their objective values, for audit traces."""
    validate_filtration(fs)
    require_mode(fs, sp)
    _check_instance(fs, ps)
    s = fs.s
    cs = constants(fs, sp)
    r = fs.total.rank
    coeffs = _pivot_coeffs(ps, s)
    simplex_eq = [make_row([1] * s, 1)]
    nonneg = [make_row([1 if j == i else 0 for j in range(s)], 0) for i in range(s)]
    out = []
    for p in ps.pivots:
        region_rows = [
            make_row([xa - xb for xa, xb in zip(coeffs[p], coeffs[q])], 0)
            for q in ps.pivots
            if q != p
        ]
        vertices = enumerate_vertices(simplex_eq, nonneg + region_rows, s)
        out.append((p, [(v, objective(fs, ps, v, sp)) for v in vertices]))
    return out


def reduce_destabilizer(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam, strictness: str = "semi"
) -> tuple[tuple[int, ...], Weights, list[tuple[tuple[int, ...], bool]]]:
    """Greedily shrink a violating filtration to a locally minimal violating subset.

    Indices are tried in ascending order; the first successful removal recurses.
    Returns the surviving original step levels, a witness weight vector for the
    reduced instance, and the trace of all attempted removals.
    """
    verdict = decide_destabilizing(fs, ps, sp, strictness)
    if not verdict.violated:
        raise InstanceError("instance does not violate; nothing to reduce")
    trace: list[tuple[tuple[int, ...], bool]] = []
    labels = tuple(range(1, fs.s + 1))

    while True:
        reduced = False
        for pos in range(len(labels)):
            keep = [i + 1 for i in range(len(labels)) if i != pos]
            if not keep:
                continue
            sub_fs = fs.substeps(keep)
            sub_ps = project_pivots(ps, keep)
            sub_labels = tuple(labels[i] for i in range(len(labels)) if i != pos)
            sub_verdict = decide_destabilizing(sub_fs, sub_ps, sp, strictness)
            trace.append((sub_labels, sub_verdict.violated))
            if sub_verdict.violated:
                fs, ps, labels, verdict = sub_fs, sub_ps, sub_labels, sub_verdict
                reduced = True
                break
        if not reduced:
            return labels, verdict.witness, trace


def check_splitting(
    fs: FiltrationSpec, ps: PivotSet
) -> tuple[bool, Optional[Weights]]:
    """Nonnegative nonzero weights equalizing all pivot sums, if any exist.

    A nontrivial intersection of the equal-maximum subspace with the
    nonnegative orthant certifies that the filtration splits.
    """
    validate_filtration(fs)
    _check_instance(fs, ps)
    s = fs.s
    if s < 1:
        raise InstanceError("filtration has no steps")
    coeffs = _pivot_coeffs(ps, s)
    first = ps.pivots[0]
    equalities = [make_row([1] * s, 1)]
    for q in ps.pivots[1:]:
        equalities.append(
            make_row([xa - xb for xa, xb in zip(coeffs[first], coeffs[q])], 0)
        )
    nonneg = [make_row([1 if j == i else 0 for j in range(s)], 0) for i in range(s)]
    vertices = enumerate_vertices(equalities, nonneg, s)
    if vertices:
        return True, vertices[0]
    return False, None


def prune_nonnegative(
    fs: FiltrationSpec, ps: PivotSet, sp: StabilityParam
) -> tuple[FiltrationSpec, PivotSet, list[Value]]:
    """Drop every step whose constant is nonnegative; never raises the value.

    May return a filtration with no steps when everything prunes away.
    """
    cs = constants(fs, sp)
    _check_instance(fs, ps)
    keep = [lvl for lvl, c in enumerate(cs, start=1) if _value_sign(sp, c) < 0]
    return fs.substeps(keep), project_pivots(ps, keep), cs
