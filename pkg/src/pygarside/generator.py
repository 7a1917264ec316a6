import functools

from .common import IDENTITY
from .element import Element, conjugate


def random_word(table, length, rng):
    """
    :param rng: A random.Random, so runs can be seeded
    :returns: A word of the given length in the atoms and their inverses
    """
    return [(rng.choice(table.atoms), rng.choice((1, -1))) for _ in range(length)]


@functools.cache
def _followers(table):
    """For each simple s, the proper simples t with (s, t) left-weighted."""
    proper = [t for t in range(table.size) if t not in (IDENTITY, table.delta)]
    return [
        [t for t in proper if table.meet_left(table.complement[s], t) == IDENTITY]
        for s in range(table.size)
    ]


def random_element(table, max_length, rng, inf_range=(-2, 2)):
    """
    Sample a normal form directly: a random inf, then factors each chosen
    among those left-weighted after the previous one.
    """
    followers = _followers(table)
    factors = []
    # Every proper simple may follow Δ
    last = table.delta
    for _ in range(rng.randint(0, max_length)):
        if not followers[last]:
            break
        last = rng.choice(followers[last])
        factors.append(last)
    return Element(table, rng.randint(*inf_range), tuple(factors))


def random_conjugate(g, max_length, rng):
    """:returns: (w, w⁻¹·g·w) for a random w"""
    w = random_element(g.table, max_length, rng)
    return w, conjugate(g, w)


def random_relator(table, rng):
    """
    A word spelling the identity through a defining relation s·t = c of the
    product table: spelling(s)·spelling(t)·spelling(c)⁻¹.
    """
    (s, t), c = rng.choice(sorted(table.product.items()))
    spell = table.spelling
    forward = [(a, 1) for a in spell[s] + spell[t]]
    return forward + [(a, -1) for a in reversed(spell[c])]
