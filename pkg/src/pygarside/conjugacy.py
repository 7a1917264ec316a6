"""
Conjugacy invariants by cycling and decycling, super summit sets, and the
conjugacy decision with witnesses.

Every conjugator w returned here satisfies w⁻¹·g·w = (the claimed element).
"""

import collections
import dataclasses
import functools
import logging

from .common import DEFAULT_CAP, CapExceededError, log_step
from .element import (
    Element,
    conjugate,
    delta_power,
    identity,
    inverse,
    multiply,
    simple_element,
)


@dataclasses.dataclass(frozen=True)
class SummitData:
    infs: int
    sups: int
    lens: int
    # conjugator⁻¹·g·conjugator = representative
    representative: Element
    conjugator: Element


def cycling(g):
    """
    Conjugate the first factor, untwisted by τ^-inf, to the tail:
    Δ^p s1⋯sl -> Δ^p s2⋯sl τ^-p(s1).

    :returns: (the cycled element, its conjugator)
    """
    if not g.factors:
        return g, identity(g.table)
    w = simple_element(g.table, g.table.tau(g.factors[0], -g.inf_power))
    return conjugate(g, w), w


def decycling(g):
    """
    Conjugate the last factor to the head: Δ^p s1⋯sl -> sl Δ^p s1⋯sl-1.

    :returns: (the decycled element, its conjugator)
    """
    if not g.factors:
        return g, identity(g.table)
    w = inverse(simple_element(g.table, g.factors[-1]))
    return conjugate(g, w), w


def _iterate(g, step, measure, better):
    """
    Apply step until measure fails to improve for ‖Δ‖ consecutive steps.

    :returns: (the best element reached, the composite conjugator)
    """
    patience = g.table.garside_norm
    best, best_conjugator = g, identity(g.table)
    current, conjugator = g, best_conjugator
    stalled = 0
    while current.factors and stalled < patience:
        current, w = step(current)
        conjugator = multiply(conjugator, w)
        log_step(step.__name__, current)
        if better(measure(current), measure(best)):
            best, best_conjugator = current, conjugator
            stalled = 0
        else:
            stalled += 1
    return best, best_conjugator


@functools.lru_cache(maxsize=8192)
def summit_invariants(g):
    """
    :returns: SummitData with the exact infs, sups and lens of g
    """
    g.table.require_validated()
    rep, w1 = _iterate(g, cycling, lambda h: h.inf_power, lambda a, b: a > b)
    rep, w2 = _iterate(
        rep,
        decycling,
        lambda h: (h.inf_power + len(h.factors), -h.inf_power),
        lambda a, b: a < b,
    )
    infs = rep.inf_power
    sups = rep.inf_power + len(rep.factors)
    logging.debug(f"{g!r} has infs={infs}, sups={sups}")
    return SummitData(infs, sups, sups - infs, rep, multiply(w1, w2))


def summit_orbit(g, cap=DEFAULT_CAP):
    """
    The super summit set of g with a conjugator for each member: the closure
    of a summit representative under conjugation by simples, keeping only
    conjugates at summit inf and sup.

    :returns: (SummitData of g, dict member -> conjugator from g)
    """
    data = summit_invariants(g)
    table = g.table
    simples = [
        simple_element(table, s) for s in range(table.size) if s != 0
    ]
    orbit = {data.representative: data.conjugator}
    queue = collections.deque([data.representative])
    while queue:
        h = queue.popleft()
        for s in simples:
            x = conjugate(h, s)
            if (
                x.inf_power == data.infs
                and x.inf_power + len(x.factors) == data.sups
                and x not in orbit
            ):
                orbit[x] = multiply(orbit[h], s)
                log_step("summit", x)
                if len(orbit) > cap:
                    raise CapExceededError("Super summit set", cap)
                queue.append(x)
    return data, orbit


def super_summit_set(g, cap=DEFAULT_CAP):
    """:returns: The super summit set of g, sorted by (inf, factors)"""
    _, orbit = summit_orbit(g, cap)
    return sorted(orbit, key=Element.sort_key)


def is_conjugate(g, h, cap=DEFAULT_CAP):
    """
    :returns: w with w⁻¹·g·w = h, or None if g and h aren't conjugate
    """
    if g.table is not h.table:
        raise ValueError("Cannot compare elements of different structures")
    target = summit_invariants(h)
    source = summit_invariants(g)
    if (source.infs, source.sups) != (target.infs, target.sups):
        return None
    _, orbit = summit_orbit(g, cap)
    if target.representative not in orbit:
        return None
    w = multiply(orbit[target.representative], inverse(target.conjugator))
    if conjugate(g, w) != h:
        raise RuntimeError(f"Conjugator {w} does not take {g} to {h}")
    return w


def conjugate_to_delta_power(g):
    """
    :returns: (a, w) with w⁻¹·g·w = Δ^a when lens(g) = 0, otherwise None
    """
    data = summit_invariants(g)
    if data.lens != 0:
        return None
    if data.representative != delta_power(g.table, data.infs):
        raise RuntimeError(f"Summit of {g} has length 0 but isn't a Δ-power")
    return data.infs, data.conjugator
