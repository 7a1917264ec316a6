"""
Translation numbers, periodic elements and their roots.

INF(g) = lim inf(g^n)/n and SUP(g) = lim sup(g^n)/n are computed exactly by
the finite formulas

    INF(g) = max{infs(g^k)/k : k = 1..‖Δ‖}
    SUP(g) = min{sups(g^k)/k : k = 1..‖Δ‖}

and g is periodic exactly when LEN(g) = SUP(g) - INF(g) = 0. A periodic g
with INF(g) = p/q in lowest terms has g^k conjugate to a Δ-power exactly
when q divides k, and g^q is conjugate to Δ^p.
"""

import dataclasses
import functools
import logging
import math
from fractions import Fraction

from .common import DEFAULT_CAP, HypothesisError
from .conjugacy import conjugate_to_delta_power, is_conjugate, summit_invariants
from .element import (
    Element,
    commute,
    conjugate,
    delta_power,
    identity,
    is_positive,
    multiply,
    positive_divisors,
    power,
    simple_element,
)


@dataclasses.dataclass(frozen=True)
class TranslationData:
    t_inf: Fraction
    t_sup: Fraction
    t_len: Fraction


@dataclasses.dataclass(frozen=True)
class PeriodicityReport:
    periodic: bool
    p: int
    q: int
    # conjugator⁻¹·g^q·conjugator = Δ^p
    conjugator: Element


@functools.lru_cache(maxsize=4096)
def translation_numbers(g):
    g.table.require_validated()
    t_inf = t_sup = None
    for k in range(1, g.table.garside_norm + 1):
        data = summit_invariants(power(g, k))
        low, high = Fraction(data.infs, k), Fraction(data.sups, k)
        t_inf = low if t_inf is None else max(t_inf, low)
        t_sup = high if t_sup is None else min(t_sup, high)
    return TranslationData(t_inf, t_sup, t_sup - t_inf)


def translation_estimates(g, n):
    """inf(g^n)/n and sup(g^n)/n, the terms of the defining limits."""
    h = power(g, n)
    return Fraction(h.inf_power, n), Fraction(h.inf_power + len(h.factors), n)


def is_periodic(g):
    return translation_numbers(g).t_len == 0


@functools.lru_cache(maxsize=4096)
def periodicity_class(g):
    """
    :returns: A PeriodicityReport for periodic g, otherwise None
    """
    data = translation_numbers(g)
    if data.t_len != 0:
        return None
    p, q = data.t_inf.numerator, data.t_inf.denominator
    found = conjugate_to_delta_power(power(g, q))
    if found is None or found[0] != p:
        raise RuntimeError(f"{g} has INF={p}/{q} but {g}^{q} is not conjugate to Δ^{p}")
    logging.debug(f"{g!r} is {p}/{q}-periodic")
    return PeriodicityReport(True, p, q, found[1])


def _require_periodic(g):
    report = periodicity_class(g)
    if report is None:
        raise HypothesisError(f"{g} is not periodic")
    return report


def lens_profile(g, kmax):
    """:returns: [lens(g^k) for k = 1..kmax] of a periodic g"""
    _require_periodic(g)
    if kmax < 1:
        raise HypothesisError("kmax must be at least 1")
    return [summit_invariants(power(g, k)).lens for k in range(1, kmax + 1)]


def _verify(g, exponent, a, w):
    if conjugate(power(g, exponent), w) != delta_power(g.table, a):
        raise RuntimeError(f"Certificate for {g}^{exponent} ~ Δ^{a} does not verify")


def delta_root_certificate(g, a, b):
    """
    Certify g^b ~ Δ^a, given that g^(kb) ~ Δ^(ka) for some nonzero k. The
    hypothesis is re-derived: it holds exactly when g is periodic with
    INF(g) = a/b.

    :returns: w with w⁻¹·g^b·w = Δ^a
    """
    if b == 0:
        raise HypothesisError("b must be nonzero")
    report = _require_periodic(g)
    if Fraction(a, b) != Fraction(report.p, report.q):
        raise HypothesisError(
            f"INF({g}) = {Fraction(report.p, report.q)}, not {a}/{b}"
        )
    # b = d·q and a = d·p, so the conjugator of g^q ~ Δ^p serves for g^b too
    _verify(g, b, a, report.conjugator)
    return report.conjugator


def gcd_periodic_exponent(g, a, b):
    """
    Given that g^a and g^b are each conjugate to a Δ-power, certify that
    g^gcd(a, b) is too.

    :returns: (d, w) with d = gcd(a, b) and w⁻¹·g^d·w a Δ-power
    """
    for name, exponent in (("a", a), ("b", b)):
        if exponent == 0:
            raise HypothesisError(f"exponent {name} must be nonzero")
        if summit_invariants(power(g, exponent)).lens != 0:
            raise HypothesisError(
                f"{g}^{exponent} (exponent {name}) is not conjugate to a Δ-power"
            )
    report = _require_periodic(g)
    d = math.gcd(a, b)
    if a % report.q or b % report.q or d % report.q:
        raise RuntimeError(f"q={report.q} does not divide {a}, {b} and {d}")
    _verify(g, d, d // report.q * report.p, report.conjugator)
    return d, report.conjugator


def is_central(g):
    table = g.table
    return all(commute(g, simple_element(table, a)) for a in table.atoms)


def is_garside_element(c):
    """
    Whether the positive element c has L(c) = R(c) with every atom dividing
    c, so that its divisors generate the positive monoid.
    """
    if not is_positive(c):
        raise HypothesisError(f"{c} is not positive")
    left = positive_divisors(c, "left")
    if any(simple_element(c.table, a) not in left for a in c.table.atoms):
        return False
    return left == positive_divisors(c, "right")


def central_divisor_symmetry(c):
    """Whether L(c) = R(c), which holds for every positive central c."""
    if not is_positive(c) or not is_central(c):
        raise HypothesisError(f"{c} is not positive and central")
    return positive_divisors(c, "left") == positive_divisors(c, "right")


def garside_element_from_central(g):
    """
    :returns: c = Δ^k·g with k the least nonnegative multiple of the central
              exponent m such that k ≥ 1 - inf(g); c is a Garside element
    """
    if not is_central(g):
        raise HypothesisError(f"{g} is not central")
    if g == identity(g.table):
        raise HypothesisError("The identity has no Garside multiple")
    m = g.table.central_exponent
    k = max(0, -(-(1 - g.inf_power) // m) * m)
    c = multiply(delta_power(g.table, k), g)
    if not is_garside_element(c):
        raise RuntimeError(f"{c} is central with Δ ≤_L c but not a Garside element")
    return c


def commensurable(g, h, bound, cap=DEFAULT_CAP):
    """
    Find nonzero k, ℓ with g^k conjugate to h^ℓ.

    :returns: (k, ℓ) with k > 0, or None if none was found with |k|, |ℓ| ≤
              bound (which doesn't prove there are none)
    """
    if bound < 1:
        raise HypothesisError("bound must be at least 1")
    if is_conjugate(g, h, cap) is not None:
        return 1, 1
    one = identity(g.table)
    g_class, h_class = periodicity_class(g), periodicity_class(h)
    if g_class and h_class and g != one and h != one:
        common = math.gcd(g_class.p, h_class.p)
        k = g_class.q * h_class.p // common
        ell = h_class.q * g_class.p // common
        return (k, ell) if k > 0 else (-k, -ell)
    for k in range(1, bound + 1):
        g_power = power(g, k)
        for ell in (e for i in range(1, bound + 1) for e in (i, -i)):
            if is_conjugate(g_power, power(h, ell), cap) is not None:
                return k, ell
    return None
