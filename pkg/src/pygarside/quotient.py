"""
The central quotient G_Δ = G/⟨Δ^m⟩, with Δ^m the least central power of Δ.

Since τ^m is the identity, multiplying by Δ^(mj) only shifts inf by mj. The
image of g in G_Δ is therefore represented exactly by (inf(g) mod m, factors
of g), without any quotient normal form.
"""

import dataclasses
import itertools
import logging
import math

from .common import DEFAULT_CAP, IDENTITY, CapExceededError, HypothesisError
from .conjugacy import is_conjugate
from .element import (
    Element,
    commute,
    delta_power,
    identity,
    multiply,
    power,
    simple_element,
)
from .periodicity import periodicity_class, translation_numbers


@dataclasses.dataclass(frozen=True)
class TypeIGenerator:
    u: int
    a: int
    # None when a is the identity
    q: int | None
    # Δ^u·a
    element: Element
    # Order of the image in G_Δ
    order: int


def coset_key(g):
    """Canonical form of the image of g in G_Δ."""
    return (g.inf_power % g.table.central_exponent, g.factors)


def in_central_delta_subgroup(g):
    """Whether g ∈ ⟨Δ^m⟩."""
    return not g.factors and g.inf_power % g.table.central_exponent == 0


def quotient_order(g):
    """
    :returns: The order of the image of g in G_Δ, or math.inf when g is not
              periodic
    """
    report = periodicity_class(g)
    if report is None:
        return math.inf
    m = g.table.central_exponent
    expected = report.q * m // math.gcd(report.p, m)
    # Confirm the formula by direct powers
    h, j = g, 1
    while not in_central_delta_subgroup(h) and j < expected:
        h, j = multiply(h, g), j + 1
    if j != expected or not in_central_delta_subgroup(h):
        raise RuntimeError(f"Order of {g} in G_Δ is not {expected}")
    return expected


def _twisted_product(table, u, a, q):
    """τ^((q-1)u)(a)·τ^((q-2)u)(a)⋯τ^u(a)·a"""
    acc = identity(table)
    for i in range(q - 1, -1, -1):
        acc = multiply(acc, simple_element(table, table.tau(a, i * u)))
    return acc


def enumerate_type_i(table):
    """
    Every (u, a, q) with 0 ≤ u < m, a a simple other than Δ and
    2 ≤ q ≤ ‖Δ‖ satisfying τ^((q-1)u)(a)⋯τ^u(a)·a = Δ, together with the
    entries ⟨Δ̄^u⟩ for a = 1. Ordered by (u, a, q).
    """
    table.require_validated()
    m = table.central_exponent
    delta = delta_power(table, 1)
    generators = []
    for u in range(m):
        for a in range(table.size):
            if a == table.delta:
                continue
            element = multiply(delta_power(table, u), simple_element(table, a))
            if a == IDENTITY:
                generators.append(TypeIGenerator(u, a, None, element, quotient_order(element)))
                continue
            for q in range(2, table.garside_norm + 1):
                if _twisted_product(table, u, a, q) != delta:
                    continue
                if power(element, q) != delta_power(table, u * q + 1):
                    raise RuntimeError(f"(Δ^{u}·{table.names[a]})^{q} ≠ Δ^{u * q + 1}")
                generators.append(
                    TypeIGenerator(u, a, q, element, quotient_order(element))
                )
    logging.debug(f"{table.label} has {len(generators)} type (i) generators")
    return generators


def group_type_i_by_conjugacy(generators, cap=DEFAULT_CAP):
    """
    Merge generators whose elements are conjugate.

    :returns: Lists of indices into generators, one per conjugacy class
    """
    classes = []
    for i, gen in enumerate(generators):
        for members in classes:
            if is_conjugate(generators[members[0]].element, gen.element, cap):
                members.append(i)
                break
        else:
            classes.append([i])
    return classes


def _require_commuting_periodic(elements):
    for g in elements:
        if periodicity_class(g) is None:
            raise HypothesisError(f"{g} is not periodic")
    for g, h in itertools.combinations(elements, 2):
        if not commute(g, h):
            raise HypothesisError(f"{g} and {h} do not commute")


def inf_additivity_check(g, h):
    """Whether INF(g·h) = INF(g) + INF(h) for commuting periodic g and h."""
    _require_commuting_periodic([g, h])
    total = translation_numbers(multiply(g, h)).t_inf
    return total == translation_numbers(g).t_inf + translation_numbers(h).t_inf


def subgroup_elements(generators, cap=DEFAULT_CAP):
    """
    The finite subgroup of G_Δ generated by the images of generators.

    :returns: dict coset_key -> representative Element
    """
    table = generators[0].table
    one = identity(table)
    found = {coset_key(one): one}
    frontier = [one]
    while frontier:
        following = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g)
                key = coset_key(y)
                if key not in found:
                    found[key] = y
                    if len(found) > cap:
                        raise CapExceededError("Finite subgroup", cap)
                    following.append(y)
        frontier = following
    return found


def certify_cyclic(generators, cap=DEFAULT_CAP):
    """
    Certify that commuting periodic generators generate a finite cyclic
    subgroup of G_Δ.

    :returns: (an element whose image generates it, the subgroup order)
    """
    if not generators:
        raise HypothesisError("certify_cyclic needs at least one generator")
    _require_commuting_periodic(generators)
    elements = subgroup_elements(generators, cap)
    order = len(elements)
    for key in sorted(elements):
        candidate = elements[key]
        if quotient_order(candidate) == order:
            logging.info(f"Cyclic subgroup of order {order} generated by {candidate}")
            return candidate, order
    raise RuntimeError(f"Subgroup of order {order} has no generator")
