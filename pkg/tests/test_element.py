import random
import unittest

from pygarside.common import HypothesisError, WordSyntaxError
from pygarside.element import (
    Element,
    delta_power,
    divisor_sets,
    element_word,
    factor_names,
    from_word,
    identity,
    inverse,
    invariants_inf_sup_len,
    is_left_weighted,
    multiply,
    parse_word,
    positive_divisors,
    power,
    simple_element,
    tau_on,
)
from pygarside.generator import random_element, random_relator, random_word
from pygarside.instances import braid_classical, free_abelian, torus


def word(table, text):
    return from_word(table, parse_word(table, text))


def sample_tables():
    return [braid_classical(3), braid_classical(4), torus(2, 3), free_abelian(3)]


class TestNormalForm(unittest.TestCase):
    def test_identity(self):
        table = braid_classical(3)
        self.assertEqual(identity(table), word(table, ""))

    def test_inverse_atom(self):
        table = braid_classical(3)
        g = word(table, "s1^-1")
        self.assertEqual(-1, g.inf_power)
        self.assertEqual(["s1.s2"], factor_names(g))
        self.assertEqual("D^-1 s1 s2", element_word(g))

    def test_delta_token(self):
        table = braid_classical(3)
        self.assertEqual(delta_power(table, 1), word(table, "D"))
        self.assertEqual(delta_power(table, 1), word(table, "s1 s2 s1"))
        self.assertEqual(delta_power(table, 1), word(table, "s2 s1 s2"))
        self.assertEqual(delta_power(table, -2), word(table, "D^-2"))

    def test_braid_relations(self):
        for n in range(2, 8):
            table = braid_classical(n)
            for i in range(1, n):
                for j in range(i + 1, n):
                    si, sj = f"s{i}", f"s{j}"
                    if j == i + 1:
                        self.assertEqual(
                            word(table, f"{si} {sj} {si}"), word(table, f"{sj} {si} {sj}")
                        )
                        self.assertNotEqual(
                            word(table, f"{si} {sj}"), word(table, f"{sj} {si}")
                        )
                    else:
                        self.assertEqual(
                            word(table, f"{si} {sj}"), word(table, f"{sj} {si}")
                        )

    def test_delta_squared_is_central(self):
        table = braid_classical(3)
        g = word(table, "s1 s2^-1 s1")
        delta2 = delta_power(table, 2)
        self.assertEqual(multiply(g, delta2), multiply(delta2, g))

    def test_twist(self):
        table = braid_classical(3)
        delta = delta_power(table, 1)
        s1 = word(table, "s1")
        self.assertEqual(word(table, "s2"), tau_on(s1, 1))
        self.assertEqual(multiply(s1, delta), multiply(delta, tau_on(s1, 1)))

    def test_invariants(self):
        table = torus(2, 2)
        self.assertEqual((-1, 2, 3), invariants_inf_sup_len(word(table, "y^-1 x y")))
        self.assertEqual((-1, -1, 0), invariants_inf_sup_len(word(table, "D^-1")))

    def test_random_words_are_left_weighted(self):
        rng = random.Random(1)
        for table in sample_tables():
            for _ in range(200):
                g = from_word(table, random_word(table, rng.randint(0, 20), rng))
                self.assertTrue(is_left_weighted(g))

    def test_relators_spell_the_identity(self):
        rng = random.Random(2)
        for table in sample_tables():
            for _ in range(1000):
                w = random_word(table, rng.randint(0, 20), rng)
                at = rng.randint(0, len(w))
                relator = random_relator(table, rng)
                self.assertEqual(
                    from_word(table, w), from_word(table, w[:at] + relator + w[at:])
                )

    def test_inverse_swaps_inf_and_sup(self):
        rng = random.Random(9)
        for table in sample_tables():
            for _ in range(100):
                g = random_element(table, 5, rng)
                inf, sup, length = invariants_inf_sup_len(g)
                self.assertEqual((-sup, -inf, length), invariants_inf_sup_len(inverse(g)))

    def test_word_round_trip(self):
        rng = random.Random(3)
        for table in sample_tables():
            for _ in range(30):
                g = random_element(table, 5, rng)
                self.assertEqual(g, word(table, element_word(g)))


class TestArithmetic(unittest.TestCase):
    def test_inverse(self):
        rng = random.Random(4)
        for table in sample_tables():
            one = identity(table)
            for _ in range(30):
                g = random_element(table, 5, rng)
                self.assertEqual(one, multiply(g, inverse(g)))
                self.assertEqual(one, multiply(inverse(g), g))

    def test_associativity(self):
        rng = random.Random(5)
        for table in sample_tables():
            for _ in range(20):
                f, g, h = (random_element(table, 4, rng) for _ in range(3))
                self.assertEqual(
                    multiply(multiply(f, g), h), multiply(f, multiply(g, h))
                )

    def test_word_concatenation_is_product(self):
        rng = random.Random(6)
        for table in sample_tables():
            for _ in range(100):
                u, v = random_word(table, 10, rng), random_word(table, 10, rng)
                self.assertEqual(
                    from_word(table, u + v),
                    multiply(from_word(table, u), from_word(table, v)),
                )

    def test_tau_is_an_automorphism(self):
        rng = random.Random(8)
        for table in sample_tables():
            for _ in range(100):
                g, h = random_element(table, 4, rng), random_element(table, 4, rng)
                for k in (-1, 1, 3):
                    self.assertEqual(
                        multiply(tau_on(g, k), tau_on(h, k)), tau_on(multiply(g, h), k)
                    )

    def test_power(self):
        rng = random.Random(7)
        table = braid_classical(3)
        for _ in range(20):
            g = random_element(table, 3, rng)
            self.assertEqual(multiply(multiply(g, g), g), power(g, 3))
            self.assertEqual(inverse(multiply(g, g)), power(g, -2))
            self.assertEqual(identity(table), power(g, 0))

    def test_braid_periodic_power(self):
        table = braid_classical(3)
        self.assertEqual(delta_power(table, 2), power(word(table, "s1 s2"), 3))

    def test_mixed_tables(self):
        with self.assertRaises(ValueError):
            multiply(identity(braid_classical(3)), identity(torus(2, 2)))


class TestDivisors(unittest.TestCase):
    def test_divisor_sets_of_delta(self):
        table = braid_classical(3)
        left, right = divisor_sets(delta_power(table, 1))
        self.assertEqual(frozenset(range(table.size)), left)
        self.assertEqual(frozenset(range(table.size)), right)

    def test_divisor_sets_of_atom(self):
        table = braid_classical(3)
        s1 = table.index["s1"]
        left, right = divisor_sets(simple_element(table, s1))
        self.assertEqual(frozenset({0, s1}), left)
        self.assertEqual(frozenset({0, s1}), right)

    def test_divisor_sets_of_torus_root(self):
        table = torus(2, 2)
        left, right = divisor_sets(word(table, "x"))
        self.assertEqual(frozenset({0, table.index["x"]}), left)
        self.assertEqual(left, right)

    def test_divisor_sets_of_free_abelian_element(self):
        table = free_abelian(2)
        left, right = divisor_sets(word(table, "e1^2 e2"))
        self.assertEqual(frozenset(range(4)), left)
        self.assertEqual(left, right)

    def test_positive_divisors(self):
        table = braid_classical(3)
        delta = delta_power(table, 1)
        divisors = positive_divisors(delta, "left")
        self.assertEqual(6, len(divisors))
        self.assertEqual(divisors, positive_divisors(delta, "right"))
        self.assertEqual(
            {simple_element(table, s) for s in range(table.size)}, set(divisors)
        )

    def test_one_sided_divisors(self):
        table = braid_classical(3)
        g = word(table, "s1 s2")
        self.assertEqual(
            {identity(table), word(table, "s1"), g}, set(positive_divisors(g, "left"))
        )
        self.assertEqual(
            {identity(table), word(table, "s2"), g}, set(positive_divisors(g, "right"))
        )

    def test_negative_input(self):
        table = braid_classical(3)
        with self.assertRaises(HypothesisError):
            positive_divisors(word(table, "s1^-1"), "left")


class TestWordSyntax(unittest.TestCase):
    def test_exponents(self):
        table = braid_classical(3)
        self.assertEqual(word(table, "s1 s1 s1"), word(table, "s1^3"))
        self.assertEqual(word(table, "s2^-1 s2^-1"), word(table, "s2^-2"))

    def test_unknown_atom(self):
        with self.assertRaises(WordSyntaxError):
            parse_word(braid_classical(3), "s9")

    def test_non_atom_simple(self):
        with self.assertRaises(WordSyntaxError):
            parse_word(braid_classical(3), "s1.s2")

    def test_dangling_atom_index(self):
        table = braid_classical(3)
        for atom in (-1, table.size, 99):
            with self.assertRaises(ValueError):
                from_word(table, [(atom, 1)])

    def test_bad_exponent(self):
        with self.assertRaises(WordSyntaxError):
            parse_word(braid_classical(3), "s1^")

    def test_element_repr(self):
        g = Element(braid_classical(3), 0, ())
        self.assertEqual("1", str(g))
