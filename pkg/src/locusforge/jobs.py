"""Shared job payloads for the CLI and the HTTP service.

Each runner validates its JSON payload before doing any work and returns a
canonical result dictionary, so both front doors produce identical JSON.
"""

from __future__ import annotations

import json

from .errors import ValidationError
from .fit import FitProblem, fit_implicit
from .linkage import LinkageSpec
from .locus import locus_equation, prove_membership
from .poly import expression_names, infer_context, parse_polynomial, parse_rational
from .tracer import BRANCHES, trace, trace_to_csv

DEFAULT_DEADLINE_MS = 30_000
MAX_TRACE_SAMPLES = 1_000_000


def canonical_json(obj) -> str:
    """Deterministic compact JSON used for every CLI/HTTP body."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def run_locus(payload: dict, deadline_ms: int = DEFAULT_DEADLINE_MS) -> dict:
    spec = LinkageSpec.from_json(payload)
    return locus_equation(spec, deadline_ms).to_json()


def parse_branches(value) -> tuple[str, ...]:
    if value in (None, "both"):
        return BRANCHES
    if isinstance(value, str):
        value = [value]
    branches = tuple(value)
    if not branches or set(branches) - set(BRANCHES):
        raise ValidationError("branches must be 'both', 'ccw' or 'cw'")
    return branches


def run_trace(payload: dict, deadline_ms: int = DEFAULT_DEADLINE_MS) -> dict:
    if not isinstance(payload, dict):
        raise ValidationError("trace payload must be an object")
    spec = LinkageSpec.from_json(payload.get("spec"))
    samples = payload.get("samples", 360)
    if not isinstance(samples, int) or not 1 <= samples <= MAX_TRACE_SAMPLES:
        raise ValidationError(
            f"samples must be an integer in [1, {MAX_TRACE_SAMPLES}]")
    branches = parse_branches(payload.get("branches"))
    result = trace(spec, samples, branches)
    return {"csv": trace_to_csv(result),
            "poses": len(result.poses), "skipped": len(result.skipped)}


def run_fit(payload: dict, deadline_ms: int = DEFAULT_DEADLINE_MS) -> dict:
    if not isinstance(payload, dict):
        raise ValidationError("fit payload must be an object")
    degree = payload.get("degree")
    if not isinstance(degree, int):
        raise ValidationError("degree must be an integer")
    mode = payload.get("mode", "exact")
    raw_points = payload.get("points")
    if not isinstance(raw_points, list):
        raise ValidationError("points must be a list of [x, y] pairs")
    points = []
    for i, entry in enumerate(raw_points):
        if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
            raise ValidationError(f"point {i} must be an [x, y] pair")
        if mode == "exact":
            points.append((parse_rational(str(entry[0])),
                           parse_rational(str(entry[1]))))
        else:
            try:
                points.append((float(entry[0]), float(entry[1])))
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"point {i} is not numeric") from exc
    return fit_implicit(FitProblem(degree=degree, points=points, mode=mode)).to_json()


def run_prove(payload: dict, deadline_ms: int = DEFAULT_DEADLINE_MS) -> dict:
    if not isinstance(payload, dict):
        raise ValidationError("prove payload must be an object")
    hypotheses = payload.get("hypotheses")
    thesis = payload.get("thesis")
    if not (isinstance(hypotheses, list) and hypotheses
            and all(isinstance(h, str) for h in hypotheses)):
        raise ValidationError("hypotheses must be a nonempty list of expressions")
    if not isinstance(thesis, str):
        raise ValidationError("thesis must be an expression string")
    names = set()
    for text in list(hypotheses) + [thesis]:
        names |= expression_names(text)
    context = infer_context(names)
    hyp_polys = [parse_polynomial(h, context) for h in hypotheses]
    thesis_poly = parse_polynomial(thesis, context)
    return prove_membership(hyp_polys, thesis_poly, deadline_ms).to_json()


RUNNERS = {
    "locus": run_locus,
    "trace": run_trace,
    "fit": run_fit,
    "prove": run_prove,
}
