import itertools
import math
import random
import unittest

from pygarside.common import CapExceededError, HypothesisError
from pygarside.element import (
    commute,
    delta_power,
    from_word,
    identity,
    multiply,
    parse_word,
    power,
)
from pygarside.generator import random_conjugate
from pygarside.instances import braid_classical, free_abelian, torus
from pygarside.periodicity import translation_numbers
from pygarside.quotient import (
    certify_cyclic,
    coset_key,
    enumerate_type_i,
    group_type_i_by_conjugacy,
    in_central_delta_subgroup,
    inf_additivity_check,
    quotient_order,
    subgroup_elements,
)


def word(table, text):
    return from_word(table, parse_word(table, text))


def minimal_power(g, limit=100):
    """Least j ≥ 1 with g^j in ⟨Δ^m⟩, by direct search."""
    h = g
    for j in range(1, limit + 1):
        if in_central_delta_subgroup(h):
            return j
        h = multiply(h, g)
    return None


class TestQuotientOrder(unittest.TestCase):
    def test_braid(self):
        table = braid_classical(3)
        self.assertEqual(3, quotient_order(word(table, "s1 s2")))
        self.assertEqual(2, quotient_order(delta_power(table, 1)))
        self.assertEqual(1, quotient_order(delta_power(table, 2)))
        self.assertEqual(1, quotient_order(identity(table)))

    def test_torus(self):
        table = torus(2, 2)
        self.assertEqual(1, table.central_exponent)
        self.assertEqual(2, quotient_order(word(table, "x")))

    def test_not_periodic(self):
        table = braid_classical(3)
        self.assertEqual(math.inf, quotient_order(word(table, "s1")))

    def test_minimal_power_search(self):
        rng = random.Random(30)
        table = braid_classical(4)
        for text in ("s1 s2 s3", "s1 s2 s3 s1", "s1 s3 s2", "D"):
            g = word(table, text)
            for _ in range(5):
                _, h = random_conjugate(g, 2, rng)
                self.assertEqual(minimal_power(h), quotient_order(h))

    def test_coset_key(self):
        table = braid_classical(3)
        g = word(table, "s1 s2")
        self.assertEqual(coset_key(g), coset_key(multiply(g, delta_power(table, 4))))
        self.assertNotEqual(
            coset_key(g), coset_key(multiply(g, delta_power(table, 1)))
        )


class TestTypeI(unittest.TestCase):
    def test_braid_3(self):
        table = braid_classical(3)
        generators = enumerate_type_i(table)
        s1, s2 = table.index["s1"], table.index["s2"]
        self.assertEqual(
            [(0, 0, None), (1, 0, None), (1, s1, 3), (1, s2, 3)],
            [(gen.u, gen.a, gen.q) for gen in generators],
        )
        self.assertEqual([1, 2, 3, 3], [gen.order for gen in generators])
        self.assertEqual(word(table, "D s1"), generators[2].element)

    def test_generators_are_roots(self):
        for table in (braid_classical(3), braid_classical(4), torus(2, 3)):
            for gen in enumerate_type_i(table):
                if gen.q is None:
                    continue
                self.assertEqual(
                    delta_power(table, gen.u * gen.q + 1), power(gen.element, gen.q)
                )

    def test_torus(self):
        table = torus(2, 3)
        found = {
            (gen.u, table.names[gen.a], gen.q) for gen in enumerate_type_i(table)
        }
        self.assertEqual({(0, "1", None), (0, "x", 2), (0, "y", 3)}, found)

    def test_torus_roots_of_delta(self):
        table = torus(2, 2)
        generators = enumerate_type_i(table)
        self.assertEqual(
            [(0, "1", None, 1), (0, "x", 2, 2), (0, "y", 2, 2)],
            [(gen.u, table.names[gen.a], gen.q, gen.order) for gen in generators],
        )
        # The images of x and y are not conjugate
        self.assertEqual([[0], [1], [2]], group_type_i_by_conjugacy(generators))

    def test_free_abelian(self):
        for rank in (2, 3):
            generators = enumerate_type_i(free_abelian(rank))
            self.assertEqual([0], [gen.a for gen in generators])

    def test_group_by_conjugacy(self):
        table = braid_classical(3)
        generators = enumerate_type_i(table)
        self.assertEqual([[0], [1], [2, 3]], group_type_i_by_conjugacy(generators))


class TestCertifyCyclic(unittest.TestCase):
    def test_braid_3(self):
        table = braid_classical(3)
        g, order = certify_cyclic([word(table, "D s2"), word(table, "s1 s2")])
        self.assertEqual(3, order)
        self.assertEqual(word(table, "s1 s2"), g)

    def test_braid_4_with_central_delta_power(self):
        table = braid_classical(4)
        g, order = certify_cyclic([word(table, "s1 s3 s2"), delta_power(table, 1)])
        self.assertEqual(4, order)
        self.assertEqual(word(table, "s1 s3 s2"), g)

    def test_torus(self):
        table = torus(2, 2)
        g, order = certify_cyclic([word(table, "x")])
        self.assertEqual(2, order)
        self.assertEqual(word(table, "x"), g)

    def test_delta(self):
        for table in (braid_classical(3), braid_classical(4)):
            delta = delta_power(table, 1)
            g, order = certify_cyclic([delta])
            self.assertEqual(table.central_exponent, order)
            self.assertEqual(delta, g)

    def test_non_commuting(self):
        table = braid_classical(3)
        with self.assertRaises(HypothesisError):
            certify_cyclic([word(table, "D s2"), delta_power(table, 1)])

    def test_non_periodic(self):
        table = braid_classical(3)
        with self.assertRaises(HypothesisError):
            certify_cyclic([word(table, "s1")])

    def test_empty(self):
        with self.assertRaises(HypothesisError):
            certify_cyclic([])

    def test_cap(self):
        table = braid_classical(3)
        with self.assertRaises(CapExceededError):
            subgroup_elements([word(table, "s1 s2")], cap=2)

    def test_commuting_subsets_of_type_i(self):
        for table in (braid_classical(3), braid_classical(4)):
            elements = [gen.element for gen in enumerate_type_i(table)]
            elements.append(delta_power(table, 1))
            for size in (1, 2):
                for subset in itertools.combinations(elements, size):
                    if not all(commute(g, h) for g, h in itertools.combinations(subset, 2)):
                        continue
                    g, order = certify_cyclic(list(subset))
                    self.assertEqual(
                        set(subgroup_elements(list(subset))),
                        set(subgroup_elements([g])),
                    )
                    self.assertEqual(order, quotient_order(g))

    def test_translation_numbers_separate_elements(self):
        for table, words in (
            (braid_classical(3), ["s1 s2"]),
            (braid_classical(4), ["s1 s3 s2", "D"]),
        ):
            generators = [word(table, w) for w in words]
            g, order = certify_cyclic(generators)
            m = table.central_exponent
            residues = {
                translation_numbers(h).t_inf % m
                for h in subgroup_elements(generators).values()
            }
            self.assertEqual(order, len(residues))


class TestInfAdditivity(unittest.TestCase):
    def test_commuting_pairs(self):
        rng = random.Random(31)
        checked = 0
        for table, text in (
            (braid_classical(3), "s1 s2"),
            (braid_classical(4), "s1 s2 s3"),
            (braid_classical(4), "s1 s3 s2"),
        ):
            base = word(table, text)
            for _ in range(3):
                _, g = random_conjugate(base, 2, rng)
                for i, j in itertools.product(range(-2, 3), repeat=2):
                    self.assertTrue(inf_additivity_check(power(g, i), power(g, j)))
                    checked += 1
        self.assertGreaterEqual(checked, 200)

    def test_non_commuting(self):
        table = braid_classical(3)
        with self.assertRaises(HypothesisError):
            inf_additivity_check(word(table, "s1 s2"), word(table, "s2 s1"))
