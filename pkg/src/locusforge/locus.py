"""Symbolic locus equations and ideal-membership proving."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import Deadline, EmptyIdeal, ValidationError
from .groebner import buchberger, eliminate, normal_form_with_quotients
from .linkage import RETAINED, ConstraintSystem, LinkageSpec, build_constraints, reduce_variables
from .poly import MonomialOrder, Polynomial, canonicalize, format_rational, polynomial_string

GRLEX = MonomialOrder.grlex()

HOLDS_PLAIN = "holds_plain"
HOLDS_RADICAL = "holds_radical"
UNKNOWN = "unknown"

DEFAULT_DEADLINE_MS = 30_000


@dataclass
class LocusResult:
    """Canonical generators of the coupler-point locus ideal in (x, y)."""

    generators: list[Polynomial]
    principal: bool
    total_degree: int
    degenerate: bool
    elapsed_ms: int

    @property
    def strings(self) -> list[str]:
        return [polynomial_string(g) for g in self.generators]

    def to_json(self) -> dict:
        gens = []
        for g in self.generators:
            order = GRLEX.sorted_desc(g.terms)
            gens.append({
                "string": polynomial_string(g),
                "terms": [{"coeff": format_rational(g.terms[m]),
                           "exps": list(m)} for m in order],
            })
        return {
            "generators": gens,
            "degree": self.total_degree,
            "principal": self.principal,
            "degenerate": self.degenerate,
            "elapsed_ms": self.elapsed_ms,
        }


def _is_degenerate(generators: list[Polynomial]) -> bool:
    """Unit ideal, or zero-dimensional: the construction collapsed to points."""
    if not generators:
        return False
    if any(g.total_degree() == 0 for g in generators):
        return True
    # the generators are a grlex basis of the elimination ideal, so dimension
    # zero shows up as a pure power of every retained variable among the leads
    nvars = len(generators[0].context)
    covered = set()
    for g in generators:
        lm, _ = g.leading_term(GRLEX)
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == nvars


def locus_equation(spec: LinkageSpec,
                   deadline_ms: int = DEFAULT_DEADLINE_MS) -> LocusResult:
    """Eliminate the construction variables and return the canonical locus
    ideal of the coupler point, flagging degenerate collapses."""
    spec.validate()
    start = time.monotonic()
    deadline = Deadline.after_ms(deadline_ms)
    cs: ConstraintSystem = build_constraints(spec)
    if (spec.u, spec.v) != (0, 0):
        cs = reduce_variables(cs, spec)
    elim = [name for name in cs.variables if name not in RETAINED]
    raw = eliminate(cs.polynomials, elim, deadline)
    generators = [canonicalize(g)[0] for g in raw]
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return LocusResult(
        generators=generators,
        principal=len(generators) == 1,
        total_degree=max((g.total_degree() for g in generators), default=0),
        degenerate=_is_degenerate(generators),
        elapsed_ms=elapsed_ms,
    )


@dataclass
class ProveResult:
    """Outcome of an ideal-membership check; ``unknown`` is NOT a disproof."""

    verdict: str
    basis: list[Polynomial] = field(default_factory=list)
    quotients: list[Polynomial] = field(default_factory=list)
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "elapsed_ms": self.elapsed_ms}


def _fresh_variable(context: tuple[str, ...]) -> str:
    if "t" not in context:
        return "t"
    i = 1
    while f"t{i}" in context:
        i += 1
    return f"t{i}"


def prove_membership(hypotheses: list[Polynomial], thesis: Polynomial,
                     deadline_ms: int = DEFAULT_DEADLINE_MS) -> ProveResult:
    """Decide whether the thesis follows from the hypotheses algebraically.

    holds_plain: thesis lies in the hypothesis ideal (with division
    certificate); holds_radical: some power does (Rabinowitsch extension
    collapses to the unit ideal); unknown otherwise.
    """
    if not hypotheses:
        raise EmptyIdeal("no hypotheses")
    context = hypotheses[0].context
    for h in hypotheses:
        if h.context != context:
            raise ValidationError("hypotheses disagree on variable context")
    if thesis.context != context:
        raise ValidationError("thesis context differs from hypotheses")
    start = time.monotonic()
    deadline = Deadline.after_ms(deadline_ms)

    basis = buchberger(hypotheses, GRLEX, deadline)
    remainder, quotients = normal_form_with_quotients(thesis, basis, GRLEX, deadline)
    if remainder.is_zero():
        return ProveResult(HOLDS_PLAIN, basis, quotients,
                           int((time.monotonic() - start) * 1000))

    # Rabinowitsch trick: 1 - t*thesis forces the unit ideal exactly when the
    # thesis vanishes on the whole hypothesis variety.
    fresh = _fresh_variable(context)
    extended = context + (fresh,)
    lifted = [h.with_context(extended) for h in hypotheses]
    t = Polynomial.variable(extended, fresh)
    rabinowitsch = 1 - t * thesis.with_context(extended)
    radical_basis = buchberger(lifted + [rabinowitsch], GRLEX, deadline)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    if len(radical_basis) == 1 and radical_basis[0].total_degree() == 0:
        return ProveResult(HOLDS_RADICAL, basis, [], elapsed_ms)
    return ProveResult(UNKNOWN, basis, [], elapsed_ms)
