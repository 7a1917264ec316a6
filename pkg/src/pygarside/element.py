"""
Group elements in left normal form over a validated StructureTable.

An element is stored as Δ^p·s1⋯sl with every si a simple other than 1 and Δ,
and every adjacent pair left-weighted: ∂(si) ∧_L si+1 = 1. Under the Garside
axioms this form is unique, so elements compare by value.

Powers of Δ are moved to the front with the twist x·Δ^k = Δ^k·τ^k(x), and the
inverse of a simple is s⁻¹ = ∂(s)·Δ⁻¹. Any product of simples and Δ-powers is
therefore a Δ-power followed by plain simples, which _normalize() left-weights
by local sweeps: a pair (s, t) becomes (s·u, u\\t) with u = ∂(s) ∧_L t.
"""

from __future__ import annotations

import dataclasses
import re

from .common import IDENTITY, HypothesisError, WordSyntaxError
from .structure import StructureTable

TOKEN = re.compile(r"^(?P<name>[^\s^]+)(\^(?P<exp>[+-]?\d+))?$")


@dataclasses.dataclass(frozen=True)
class Element:
    table: StructureTable
    inf_power: int
    factors: tuple[int, ...]

    def sort_key(self):
        return (self.inf_power, self.factors)

    def __str__(self):
        return element_word(self) or "1"

    def __repr__(self):
        return f"Element({str(self)!r} over {self.table.label})"


def identity(table):
    return Element(table, 0, ())


def delta_power(table, k):
    return Element(table, k, ())


def simple_element(table, s):
    if s == table.delta:
        return Element(table, 1, ())
    if s == IDENTITY:
        return Element(table, 0, ())
    return Element(table, 0, (s,))


def _same_table(g, h):
    if g.table is not h.table:
        raise ValueError("Cannot combine elements of different structures")


def _normalize(table, power, factors):
    """
    Left-weight Δ^power·f1⋯fk, where the fi are arbitrary simples.

    :returns: The Element in left normal form
    """
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            s, t = factors[i], factors[i + 1]
            u = table.meet_left(table.complement[s], t)
            if u != IDENTITY:
                factors[i] = table.product[s, u]
                factors[i + 1] = table.quotient_left[u, t]
                changed = True
    # At the fixpoint, Δ's lead and identities trail
    head = 0
    while head < len(factors) and factors[head] == table.delta:
        head += 1
    tail = len(factors)
    while tail > head and factors[tail - 1] == IDENTITY:
        tail -= 1
    return Element(table, power + head, tuple(factors[head:tail]))


def is_left_weighted(g):
    table = g.table
    if any(s in (IDENTITY, table.delta) for s in g.factors):
        return False
    return all(
        table.meet_left(table.complement[s], t) == IDENTITY
        for s, t in zip(g.factors, g.factors[1:])
    )


def from_word(table, word):
    """
    :param word: Sequence of (atom index, +1 or -1) letters
    :returns: The left normal form of the element the word spells
    """
    table.require_validated()
    # Each inverse letter a⁻¹ = ∂(a)·Δ⁻¹ leaves a Δ⁻¹ to move left, twisting
    # every simple before it once.
    raw = []
    inverses = 0
    for atom, exponent in word:
        if not 0 <= atom < table.size:
            raise ValueError(f"No simple has index {atom}")
        if not table.is_atom(atom):
            raise ValueError(f"{table.names[atom]} is not an atom")
        if exponent == 1:
            raw.append((atom, inverses))
        elif exponent == -1:
            raw.append((table.complement[atom], inverses))
            inverses += 1
        else:
            raise ValueError(f"Letter exponents are ±1, not {exponent}")
    factors = [table.tau(s, -(inverses - before)) for s, before in raw]
    return _normalize(table, -inverses, factors)


def multiply(g, h):
    _same_table(g, h)
    table = g.table
    twisted = [table.tau(s, h.inf_power) for s in g.factors]
    return _normalize(table, g.inf_power + h.inf_power, twisted + list(h.factors))


def inverse(g):
    # (Δ^p s1⋯sl)⁻¹ = ∂(sl)Δ⁻¹⋯∂(s1)Δ⁻¹·Δ^-p, and ∂(si) has i + p
    # inverted Δ's to move past.
    table = g.table
    p, factors = g.inf_power, g.factors
    twisted = [
        table.tau(table.complement[factors[i - 1]], -(i + p))
        for i in range(len(factors), 0, -1)
    ]
    return _normalize(table, -(len(factors) + p), twisted)


def power(g, n):
    """g^n by repeated squaring."""
    acc = identity(g.table)
    if n == 0:
        return acc
    square = g if n > 0 else inverse(g)
    n = abs(n)
    while n:
        if n % 2 == 1:
            acc = multiply(acc, square)
        n //= 2
        if n:
            square = multiply(square, square)
    return acc


def conjugate(g, w):
    """w⁻¹·g·w"""
    return multiply(multiply(inverse(w), g), w)


def commute(g, h):
    return multiply(g, h) == multiply(h, g)


def invariants_inf_sup_len(g):
    length = len(g.factors)
    return (g.inf_power, g.inf_power + length, length)


def is_positive(g):
    return g.inf_power >= 0


def lattice_ops(table, a, b):
    """:returns: (a ∧_L b, a ∨_L b)"""
    table.require_validated()
    return table.meet_left(a, b), table.join_left(a, b)


def left_complement(table, s):
    table.require_validated()
    return table.left_complement(s)


def tau_on(g, k):
    """Δ^-k·g·Δ^k. τ preserves left-weightedness, so no renormalisation."""
    table = g.table
    return Element(table, g.inf_power, tuple(table.tau(s, k) for s in g.factors))


def left_divides(d, g):
    """Whether d ≤_L g, i.e. d⁻¹g is positive."""
    return is_positive(multiply(inverse(d), g))


def right_divides(d, g):
    """Whether d ≤_R g, i.e. g·d⁻¹ is positive."""
    return is_positive(multiply(g, inverse(d)))


def divisor_sets(g):
    """
    :returns: The simple left divisors and the simple right divisors of the
              positive element g, as frozensets of simple indices.
    """
    if not is_positive(g):
        raise HypothesisError(f"{g} is not positive")
    table = g.table
    simples = [(s, simple_element(table, s)) for s in range(table.size)]
    left = frozenset(s for s, e in simples if left_divides(e, g))
    right = frozenset(s for s, e in simples if right_divides(e, g))
    return left, right


def positive_divisors(g, side="left"):
    """
    The full set of positive left (or right) divisors of the positive element
    g. Divisors are closed under taking divisors, so they are reached from the
    identity one atom at a time.
    """
    if not is_positive(g):
        raise HypothesisError(f"{g} is not positive")
    table = g.table
    atoms = [simple_element(table, a) for a in table.atoms]
    if side == "left":
        extend, divides = (lambda d, a: multiply(d, a)), left_divides
    else:
        extend, divides = (lambda d, a: multiply(a, d)), right_divides
    found = {identity(table)}
    frontier = [identity(table)]
    while frontier:
        following = []
        for d in frontier:
            for a in atoms:
                e = extend(d, a)
                if e not in found and divides(e, g):
                    found.add(e)
                    following.append(e)
        frontier = following
    return frozenset(found)


def parse_word(table, text):
    """
    Parse whitespace-separated atom names, each optionally suffixed with ^k
    (k may be negative). The token D stands for Δ.
    """
    table.require_validated()
    word = []
    for token in text.split():
        match = TOKEN.match(token)
        if not match:
            raise WordSyntaxError(f"Can't parse {token!r}")
        name = match["name"]
        exponent = int(match["exp"]) if match["exp"] is not None else 1
        if name == "D":
            letters = [(a, 1) for a in table.spelling[table.delta]]
        elif name in table.index and table.is_atom(table.index[name]):
            letters = [(table.index[name], 1)]
        else:
            raise WordSyntaxError(f"{name!r} is not an atom of {table.label}")
        if exponent < 0:
            letters = [(a, -e) for a, e in reversed(letters)]
        word += letters * abs(exponent)
    return word


def factor_names(g):
    return [g.table.names[s] for s in g.factors]


def element_word(g):
    """Spell g in the word syntax parse_word() reads."""
    table = g.table
    tokens = []
    if g.inf_power == 1:
        tokens.append("D")
    elif g.inf_power != 0:
        tokens.append(f"D^{g.inf_power}")
    for s in g.factors:
        tokens += [table.names[a] for a in table.spelling[s]]
    return " ".join(tokens)
