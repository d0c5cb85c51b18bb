"""Multivariate division, Buchberger's algorithm and elimination ideals.

All computation is exact over Fraction coefficients.  ``buchberger`` and
``eliminate`` poll a caller-supplied Deadline cooperatively (at least once per
completed reduction, and every few steps inside long divisions) and raise
Cancelled with partial work discarded.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import Cancelled, ContextMismatch, Deadline, EmptyIdeal
from .poly import (
    MonomialOrder,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    primitive_scale,
)

# Deadline polling stride inside inner division loops; cheap enough to keep
# the 1 ms cancellation contract while staying off the hot path.
_POLL_MASK = 0x3F


def _shared_context(polys) -> tuple[str, ...]:
    context = polys[0].context
    for p in polys[1:]:
        if p.context != context:
            raise ContextMismatch(
                f"contexts differ: {context} vs {p.context}")
    return context


def _divide(p, divisors, order, deadline=None, want_quotients=False):
    """Deterministic multivariate division: always reduce the current leading
    term, trying divisors in list order.  Returns (remainder, quotients)."""
    divisors = [g for g in divisors if not g.is_zero()]
    if divisors:
        _shared_context([p] + divisors)
    div_data = []
    for g in divisors:
        lm, lc = g.leading_term(order)
        tail = [(m, c) for m, c in g.terms.items() if m != lm]
        div_data.append((lm, lc, tail))

    work = dict(p.terms)
    remainder: dict = {}
    quotients = [dict() for _ in divisors] if want_quotients else None

    def negkey(m):
        return tuple(-v for v in order.key(m))

    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        if m not in work:
            continue
        steps += 1
        if deadline is not None and (steps & _POLL_MASK) == 0:
            deadline.check()
        coeff = work.pop(m)
        for idx, (glm, glc, gtail) in enumerate(div_data):
            if mono_divides(glm, m):
                t = mono_div(m, glm)
                q = coeff / glc
                for gm, gc in gtail:
                    mm = mono_mul(gm, t)
                    s = work.get(mm, 0) - q * gc
                    if s:
                        work[mm] = s
                        heapq.heappush(heap, (negkey(mm), mm))
                    else:
                        work.pop(mm, None)
                if want_quotients:
                    quotients[idx][t] = quotients[idx].get(t, 0) + q
                break
        else:
            remainder[m] = coeff
    rem = Polynomial._raw(p.context, remainder)
    if want_quotients:
        return rem, [Polynomial._raw(p.context, q) for q in quotients]
    return rem, None


def normal_form(p: Polynomial, divisors, order: MonomialOrder,
                deadline: Deadline | None = None) -> Polynomial:
    """Remainder of p on division by ``divisors``: no remaining term is
    divisible by any divisor's leading monomial, and p - r lies in the ideal
    the divisors generate."""
    rem, _ = _divide(p, divisors, order, deadline)
    return rem


def normal_form_with_quotients(p: Polynomial, divisors, order: MonomialOrder,
                               deadline: Deadline | None = None):
    """Like normal_form but also returns quotients q_i with
    p = sum(q_i * divisors_i) + remainder (zero divisors get zero quotients)."""
    rem, quots = _divide(p, divisors, order, deadline, want_quotients=True)
    it = iter(quots)
    out = [next(it) if not g.is_zero() else Polynomial.zero(p.context)
           for g in divisors]
    return rem, out


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S(f, g) = (L/lt(f)) f - (L/lt(g)) g with L = lcm of leading monomials."""
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    _shared_context([f, g])
    L = mono_lcm(lmf, lmg)
    tf, tg = mono_div(L, lmf), mono_div(L, lmg)
    cf, cg = 1 / lcf, 1 / lcg
    out: dict = {}
    for m, c in f.terms.items():
        mm = mono_mul(m, tf)
        out[mm] = out.get(mm, 0) + c * cf
    for m, c in g.terms.items():
        mm = mono_mul(m, tg)
        s = out.get(mm, 0) - c * cg
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return Polynomial._raw(f.context, {m: c for m, c in out.items() if c})


def _update(G, lmG, pairs, f, order):
    """Gebauer-Moeller pair update: applies the chain criterion to surviving
    pairs and Buchberger's coprimality criterion to new ones."""
    lmf, _ = f.leading_term(order)
    j = len(G)

    def plcm(a, b):
        return mono_lcm(lmG[a], lmG[b]) if b < j else mono_lcm(lmG[a], lmf)

    kept = set()
    for (a, b) in pairs:
        lab = mono_lcm(lmG[a], lmG[b])
        if (not mono_divides(lmf, lab)
                or lab == mono_lcm(lmG[a], lmf)
                or lab == mono_lcm(lmG[b], lmf)):
            kept.add((a, b))

    by_lcm: dict = {}
    for i in range(j):
        by_lcm.setdefault(mono_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=order.key):
        if all(not mono_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        coprime = any(mono_lcm(lmG[i], lmf) == mono_mul(lmG[i], lmf)
                      for i in by_lcm[L])
        if not coprime:
            kept.add((min(by_lcm[L]), j))

    G.append(f)
    lmG.append(lmf)
    return kept


def _reduce_basis(G, order, deadline):
    """Minimalize and interreduce into the unique reduced basis, each element
    scaled to integer content 1 with positive leading coefficient."""
    lm = {id(g): g.leading_term(order)[0] for g in G}
    minimal = []
    for g in sorted(G, key=lambda h: order.key(lm[id(h)])):
        if not any(mono_divides(lm[id(h)], lm[id(g)]) for h in minimal):
            minimal.append(g)
    for i in range(len(minimal)):
        if deadline is not None:
            deadline.check()
        others = minimal[:i] + minimal[i + 1:]
        reduced = normal_form(minimal[i], others, order, deadline)
        minimal[i] = primitive_scale(reduced, order)
    minimal.sort(key=lambda g: order.key(g.leading_term(order)[0]), reverse=True)
    return minimal


def buchberger(gens, order: MonomialOrder,
               deadline: Deadline | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy (smallest pair lcm under ``order``); output
    elements are primitive (integer content 1, positive leading coefficient)
    and sorted by descending leading monomial.  Raises EmptyIdeal when every
    generator is zero and Cancelled when ``deadline`` fires.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise EmptyIdeal("all generators are zero")
    _shared_context(gens)

    G: list[Polynomial] = []
    lmG: list = []
    pairs: set = set()
    for f in gens:
        pairs = _update(G, lmG, pairs, primitive_scale(f, order), order)

    while pairs:
        if deadline is not None:
            deadline.check()
        i, j = min(pairs,
                   key=lambda p: (order.key(mono_lcm(lmG[p[0]], lmG[p[1]])), p))
        pairs.remove((i, j))
        s = s_polynomial(G[i], G[j], order)
        if s.is_zero():
            continue
        r = normal_form(s, G, order, deadline)
        if not r.is_zero():
            pairs = _update(G, lmG, pairs, primitive_scale(r, order), order)

    return _reduce_basis(G, order, deadline)


def eliminate(gens, elim_vars,
              deadline: Deadline | None = None) -> list[Polynomial]:
    """Generators of the elimination ideal: reorder so the eliminated
    variables come first, compute a block-order basis, and keep the elements
    free of eliminated variables, re-expressed in the retained context."""
    polys = list(gens)
    if not polys:
        raise EmptyIdeal("no generators")
    context = polys[0].context
    _shared_context(polys)
    elim_set = set(elim_vars)
    unknown = elim_set - set(context)
    if unknown:
        raise ContextMismatch(f"elim_vars not in context: {sorted(unknown)}")
    elim = tuple(v for v in context if v in elim_set)
    retained = tuple(v for v in context if v not in elim_set)
    new_context = elim + retained

    reordered = [g.with_context(new_context) for g in polys]
    basis = buchberger(reordered, MonomialOrder.block(len(elim)), deadline)
    k = len(elim)
    zeros = (0,) * k
    kept = [g for g in basis if all(m[:k] == zeros for m in g.terms)]
    return [g.with_context(retained) for g in kept]
