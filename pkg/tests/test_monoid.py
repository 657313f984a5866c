import unittest

from stallings.automaton import InverseAutomaton, apply_endo_to_subgroup, stallings
from stallings.errors import MonoidOverflowError, PreconditionError, TrivialSubgroupError
from stallings.freegroup import IDENTITY, EndomorphismSpec, Word, invert_word, nielsen, nielsen_sequence, parse_word
from stallings.monoid import (
    PartialInjection,
    element_order,
    generate_monoid,
    green_classes,
    group_H_classes,
    idempotent_poset,
    invert_element,
    letter_transition,
    natural_leq,
    permutation_isomorphic,
    reduced_realizable,
    transition_of_word,
)

from fixtures import (
    A,
    AB,
    ABC,
    ABCD,
    FINITE_INDEX,
    automaton,
    kernel_z2,
    running_example,
    s3_kernel,
    seven_state_example,
    seven_state_example_beta,
    subgroup,
)
from oracle import DEFAULT_CONFIG, enumerate_reduced, random_generators, random_nielsen_steps, random_word

SAMPLE_CAP = 2_000


def pi(*table):
    return PartialInjection(tuple(table))


def sample_monoids(salt: int, count: int, cap: int = SAMPLE_CAP):
    """Random automata whose monoids stay under cap."""
    rng = DEFAULT_CONFIG.rng(salt)
    found = []
    while len(found) < count:
        aut = stallings(random_generators(rng, AB, max_gens=3, max_len=4), AB)
        try:
            found.append((aut, generate_monoid(aut, cap)))
        except MonoidOverflowError:
            continue
    return found


class PartialInjectionTests(unittest.TestCase):
    def test_rejects_non_injective_tables(self):
        with self.assertRaises(ValueError):
            pi(1, 1)
        with self.assertRaises(ValueError):
            pi(0, 2)

    def test_composition_is_left_to_right(self):
        f = pi(1, None, 2)
        g = pi(None, 2, 0)
        self.assertEqual(f * g, pi(2, None, 0))
        self.assertEqual(g * f, pi(None, 2, 1))

    def test_invert_element(self):
        self.assertEqual(invert_element(PartialInjection.from_mapping(2, {0: 1})), PartialInjection.from_mapping(2, {1: 0}))
        self.assertEqual(invert_element(PartialInjection.identity(3)), PartialInjection.identity(3))
        self.assertEqual(invert_element(PartialInjection.empty(2)), PartialInjection.empty(2))

    def test_product_with_inverse_restricts_identity(self):
        f = pi(2, None, 0)
        self.assertEqual(f * f.inverse(), PartialInjection.restriction(3, f.domain))

    def test_powers(self):
        f = pi(1, 2, 0)
        self.assertEqual(f ** 3, PartialInjection.identity(3))
        self.assertEqual(f ** -1, f.inverse())
        self.assertEqual(f ** 0, PartialInjection.identity(3))

    def test_natural_leq(self):
        self.assertTrue(natural_leq(PartialInjection.empty(2), pi(1, 0)))
        self.assertTrue(natural_leq(PartialInjection.restriction(2, {0}), PartialInjection.identity(2)))
        self.assertFalse(natural_leq(PartialInjection.from_mapping(2, {0: 1}), PartialInjection.from_mapping(2, {0: 0})))

    def test_cycles_and_rendering(self):
        f = pi(1, 0, None, 3)
        self.assertEqual(f.cycles(), [(0, 1)])
        self.assertEqual(str(f), "[1 0 - 3]")
        with self.assertRaises(ValueError):
            pi(1, None).cycles()


class TransitionTests(unittest.TestCase):
    def test_letter_c_on_seven_state_example(self):
        aut = seven_state_example()
        f = transition_of_word(aut, parse_word("c", ABCD))
        self.assertEqual(sorted(len(c) for c in f.cycles()), [2, 3])
        self.assertEqual(f.rank(), 5)
        self.assertEqual(element_order(f, PartialInjection.restriction(f.size, f.domain), 6), 6)

    def test_empty_word_is_identity(self):
        aut = running_example()
        self.assertEqual(transition_of_word(aut, IDENTITY), PartialInjection.identity(2))

    def test_square_of_first_letter_is_empty_on_two_cycle(self):
        aut = subgroup(AB, "a b")
        self.assertTrue(transition_of_word(aut, parse_word("a a", AB)).is_empty())

    def test_letter_transition_matches_single_letter_word(self):
        aut = running_example()
        for letter in ABC.letters():
            self.assertEqual(letter_transition(aut, letter.code), transition_of_word(aut, Word((letter,))))


class GenerateMonoidTests(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(len(generate_monoid(running_example())), 6)
        self.assertEqual(len(generate_monoid(kernel_z2())), 2)
        self.assertEqual(len(generate_monoid(subgroup(AB, "a b"))), 6)
        self.assertEqual(len(generate_monoid(InverseAutomaton.bouquet(AB))), 1)

    def test_running_example_elements_in_breadth_first_order(self):
        m = generate_monoid(running_example())
        expected = [pi(0, 1), pi(1, None), pi(None, 0), pi(None, None), pi(0, None), pi(None, 1)]
        self.assertEqual(list(m.elements), expected)
        self.assertEqual(len(m.witnesses[3]), 2)
        self.assertEqual(m.identity, PartialInjection.identity(2))

    def test_overflow_names_the_cap(self):
        with self.assertRaises(MonoidOverflowError) as ctx:
            generate_monoid(running_example(), cap=3)
        self.assertEqual(ctx.exception.cap, 3)
        self.assertIn("3", str(ctx.exception))
        self.assertEqual(len(generate_monoid(running_example(), cap=6)), 6)

    def test_cap_must_be_positive(self):
        with self.assertRaises(PreconditionError):
            generate_monoid(running_example(), cap=0)

    def test_witness_soundness(self):
        for aut, m in sample_monoids(31, 40):
            for f, w in zip(m.elements, m.witnesses):
                self.assertEqual(transition_of_word(aut, w), f)
                self.assertEqual(m.element_of_word(w), f)

    def test_inverse_monoid_laws(self):
        for _, m in sample_monoids(32, 30, cap=1_000):
            idempotents = m.idempotents()
            for f in m.elements:
                g = f.inverse()
                self.assertIn(g, m)
                self.assertEqual(f * g * f, f)
                self.assertEqual(g * f * g, g)
            for e in idempotents:
                self.assertEqual(e, PartialInjection.restriction(m.state_count, e.domain))
                for e2 in idempotents:
                    self.assertEqual(e * e2, e2 * e)

    def test_natural_order_matches_idempotent_factorization(self):
        for _, m in sample_monoids(33, 15, cap=150):
            idempotents = m.idempotents()
            for f in m.elements:
                for g in m.elements:
                    factorized = any(e * g == f for e in idempotents)
                    self.assertEqual(natural_leq(f, g), factorized)

    def test_conjugated_idempotent_powers(self):
        rng = DEFAULT_CONFIG.rng(34)
        candidates = list(enumerate_reduced(AB, 3))
        for aut, m in sample_monoids(34, 20):
            xs = [x for x in candidates if m.element_of_word(x).is_idempotent()]
            for _ in range(10):
                x = rng.choice(xs)
                r = random_word(rng, AB, 4)
                r_inv = invert_word(r)
                expected = m.element_of_word(Word(r.letters + x.letters + r_inv.letters))
                self.assertTrue(expected.is_idempotent())
                for n in range(1, 6):
                    self.assertEqual(m.element_of_word(Word(r.letters + x.letters * n + r_inv.letters)), expected)

    def test_group_iff_complete(self):
        for aut, m in sample_monoids(35, 40):
            no_empty = not any(f.is_empty() for f in m.elements)
            self.assertEqual(m.is_group(), aut.is_complete())
            self.assertEqual(m.is_group(), no_empty and all(f.is_total() for f in m.elements))
        for build in FINITE_INDEX.values():
            self.assertTrue(generate_monoid(build()).is_group())


class GreenTests(unittest.TestCase):
    def test_running_example_classes(self):
        classes = green_classes(generate_monoid(running_example()))
        self.assertEqual(classes.R, ((0,), (1, 4), (2, 5), (3,)))
        self.assertEqual(classes.L, ((0,), (1, 5), (2, 4), (3,)))
        self.assertEqual(len(classes.H), 6)
        self.assertEqual(classes.D, ((0,), (1, 2, 4, 5), (3,)))

    def test_one_element_monoid(self):
        classes = green_classes(generate_monoid(InverseAutomaton.bouquet(AB)))
        for name in ("R", "L", "H", "D"):
            self.assertEqual(classes.relation(name), ((0,),))

    def test_group_monoid_is_one_H_class(self):
        m = generate_monoid(kernel_z2())
        self.assertEqual(green_classes(m).H, ((0, 1),))
        (cls,) = group_H_classes(m)
        self.assertEqual(cls.identity, 0)
        self.assertEqual(cls.orders, (1, 2))
        self.assertTrue(cls.is_cyclic())

    def test_aperiodic_monoid_has_trivial_group_classes(self):
        classes = group_H_classes(generate_monoid(running_example()))
        self.assertEqual(len(classes), 4)
        self.assertTrue(all(c.is_trivial() for c in classes))

    def test_cyclic_class_of_order_six(self):
        aut = seven_state_example()
        m = generate_monoid(aut)
        i = m.index_of(transition_of_word(aut, parse_word("c", ABCD)))
        (cls,) = [c for c in group_H_classes(m) if i in c.members]
        self.assertEqual(cls.size, 6)
        self.assertTrue(cls.is_cyclic())

    def test_cyclic_class_of_order_three_after_beta(self):
        aut = seven_state_example_beta()
        m = generate_monoid(aut)
        f = transition_of_word(aut, parse_word("b^-1 b c", ABCD))
        self.assertEqual(sorted(len(c) for c in f.cycles()), [3])
        (cls,) = [c for c in group_H_classes(m) if m.index_of(f) in c.members]
        self.assertEqual(cls.size, 3)
        self.assertEqual(sorted(cls.orders), [1, 3, 3])

    def test_element_order_bound(self):
        f = pi(1, 2, 0)
        with self.assertRaises(ValueError):
            element_order(f, PartialInjection.identity(3), 2)


class IdempotentTests(unittest.TestCase):
    def test_two_cycle(self):
        poset = idempotent_poset(subgroup(AB, "a b"))
        expected = {PartialInjection.empty(2), PartialInjection.restriction(2, {0}), PartialInjection.restriction(2, {1})}
        self.assertEqual(set(poset.elements), expected)
        self.assertEqual(poset.k, 2)

    def test_square_and_loop(self):
        aut = subgroup(AB, "a^2", "b")
        realized = reduced_realizable(aut)
        for word, states in [("a^2", {0, 1}), ("b", {0}), ("a b a^-1", {1}), ("b a b", set())]:
            f = transition_of_word(aut, parse_word(word, AB))
            self.assertEqual(f, PartialInjection.restriction(2, states), msg=word)
            self.assertIn(f, realized)
        poset = idempotent_poset(aut)
        self.assertEqual(len(poset), 4)
        self.assertEqual(poset.k, 3)

    def test_cyclic_subgroup(self):
        poset = idempotent_poset(subgroup(AB, "a"))
        self.assertEqual(set(poset.elements), {PartialInjection.empty(1), PartialInjection.identity(1)})
        self.assertEqual(poset.k, 2)
        self.assertEqual(poset.covers(), [(0, 1)])

    def test_full_group_realizes_only_identity(self):
        self.assertEqual(reduced_realizable(InverseAutomaton.bouquet(AB)), frozenset({PartialInjection.identity(1)}))

    def test_trivial_subgroup_has_no_poset(self):
        with self.assertRaises(TrivialSubgroupError):
            idempotent_poset(InverseAutomaton.trivial(AB))

    def test_realizable_overflow(self):
        with self.assertRaises(MonoidOverflowError):
            reduced_realizable(running_example(), cap=2)

    def test_realizable_elements_are_reached_by_reduced_words(self):
        for aut, m in sample_monoids(36, 20):
            realized = reduced_realizable(aut)
            by_words = {m.element_of_word(w) for w in enumerate_reduced(AB, 6) if w}
            self.assertTrue(by_words <= realized)
            self.assertTrue(realized <= set(m.elements))


class NegativeResultTests(unittest.TestCase):
    def test_beta_breaks_idempotence_and_commutation(self):
        aut = apply_endo_to_subgroup(subgroup(AB, "a"), nielsen(AB, "beta", "a", "b"))
        ga = transition_of_word(aut, parse_word("a", AB))
        gb = transition_of_word(aut, parse_word("b", AB))
        self.assertTrue(transition_of_word(subgroup(AB, "a"), parse_word("a", AB)).is_idempotent())
        self.assertFalse(ga.is_idempotent())
        self.assertTrue((ga * ga).is_empty())
        self.assertNotEqual(ga * gb, gb * ga)

    def test_xi_breaks_eventual_constancy(self):
        xi = EndomorphismSpec.from_mapping(AB, {"a": parse_word("a b^3", AB)})
        aut = apply_endo_to_subgroup(subgroup(AB, "a"), xi)
        theta_b = transition_of_word(aut, parse_word("b", AB))
        self.assertEqual((theta_b ** 3).rank(), 1)
        self.assertTrue((theta_b ** 4).is_empty())
        self.assertNotEqual(theta_b ** 4, theta_b ** 3)


class PermutationIsomorphismTests(unittest.TestCase):
    def test_monoid_is_isomorphic_to_itself(self):
        m = generate_monoid(s3_kernel())
        self.assertIsNotNone(permutation_isomorphic(m, m))

    def test_different_groups(self):
        self.assertIsNone(permutation_isomorphic(generate_monoid(kernel_z2()), generate_monoid(s3_kernel())))
        even = generate_monoid(FINITE_INDEX["even_length"]())
        self.assertIsNotNone(permutation_isomorphic(generate_monoid(kernel_z2()), even))

    def test_automorphic_images_keep_the_group(self):
        rng = DEFAULT_CONFIG.rng(37)
        aut = s3_kernel()
        m = generate_monoid(aut)
        for _ in range(10):
            e = nielsen_sequence(AB, random_nielsen_steps(rng, AB))
            self.assertIsNotNone(permutation_isomorphic(m, generate_monoid(apply_endo_to_subgroup(aut, e))))

    def test_requires_groups(self):
        with self.assertRaises(PreconditionError):
            permutation_isomorphic(generate_monoid(running_example()), generate_monoid(running_example()))

    def test_renaming_states(self):
        swapped = automaton(AB, [(1, "a", 0), (0, "a", 1), (0, "b", 0), (1, "b", 1)], basepoint=1)
        self.assertIsNotNone(permutation_isomorphic(generate_monoid(kernel_z2()), generate_monoid(swapped)))

    def test_shuffled_cycle(self):
        n = 12
        order = list(range(n))
        DEFAULT_CONFIG.rng(71).shuffle(order)
        edges = [(order[i], 0, order[(i + 1) % n]) for i in range(n)]
        shuffled = generate_monoid(InverseAutomaton.from_edges(A, n, edges, order[0]))
        m = generate_monoid(subgroup(A, "a^12"))
        sigma = permutation_isomorphic(m, shuffled)
        self.assertIsNotNone(sigma)
        self.assertEqual(sorted(sigma.values()), list(range(n)))
        for f in m.elements:
            g = [None] * n
            for x in range(n):
                g[sigma[x]] = sigma[f.table[x]]
            self.assertIn(PartialInjection(tuple(g)), shuffled)


if __name__ == "__main__":
    unittest.main()
