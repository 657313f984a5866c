import unittest

from stallings.automaton import (
    InverseAutomaton,
    MultiAutomaton,
    flower,
    fold,
    is_full,
    is_trivial,
    stallings,
    trim,
)
from stallings.errors import AlphabetMismatchError, AutomatonInvariantError
from stallings.freegroup import free_reduce

from fixtures import AB, ABC, automaton, running_example, subgroup, words
from oracle import DEFAULT_CONFIG, naive_fold, random_generators


class FlowerTests(unittest.TestCase):
    def test_flower_of_running_example(self):
        m = flower(words(ABC, "c", "b a^-1 c^-1", "a c a^-1"), ABC)
        self.assertEqual(m.state_count, 5)
        self.assertEqual(len(m.positive_edges), 7)
        self.assertEqual(m.basepoint, 0)

    def test_empty_and_identity_generators_are_dropped(self):
        m = flower(words(AB, "a a^-1", "1"), AB)
        self.assertEqual(m.state_count, 1)
        self.assertEqual(m.positive_edges, ())

    def test_single_letter_petal_is_a_loop(self):
        m = flower(words(AB, "a"), AB)
        self.assertEqual(m.positive_edges, ((0, 0, 0),))

    def test_generator_outside_alphabet(self):
        with self.assertRaises(AlphabetMismatchError):
            flower(words(ABC, "c"), AB)

    def test_multi_automaton_validates_states(self):
        with self.assertRaises(AutomatonInvariantError):
            MultiAutomaton(AB, 2, 0, ((0, 0, 5),))
        with self.assertRaises(AutomatonInvariantError):
            MultiAutomaton(AB, 1, 3, ())


class FoldTests(unittest.TestCase):
    def test_running_example_folds_to_two_states(self):
        aut = running_example()
        expected = automaton(ABC, [(0, "a", 1), (0, "b", 1), (0, "c", 0), (1, "c", 1)], basepoint=0)
        self.assertEqual(aut, expected)
        self.assertEqual(aut.edges(), [(0, 0, 1), (0, 1, 1), (0, 2, 0), (1, 2, 1)])

    def test_duplicate_petals_merge(self):
        aut = fold(flower(words(AB, "a", "a"), AB))
        self.assertEqual(aut.state_count, 1)
        self.assertEqual(aut.edges(), [(0, 0, 0)])

    def test_folding_deterministic_input_is_a_fixpoint(self):
        aut = running_example()
        m = MultiAutomaton(aut.alphabet, aut.state_count, aut.basepoint, tuple(aut.edges()))
        self.assertEqual(fold(m), aut)

    def test_codeterminism_collapses_to_bouquet(self):
        aut = subgroup(AB, "a b", "b")
        self.assertTrue(is_full(aut))
        self.assertEqual(aut, InverseAutomaton.bouquet(AB))

    def test_single_generator_loop(self):
        aut = subgroup(AB, "a")
        self.assertEqual(aut.state_count, 1)
        self.assertEqual(aut.edges(), [(0, 0, 0)])

    def test_trivial_subgroup(self):
        aut = stallings([], AB)
        self.assertTrue(is_trivial(aut))
        self.assertEqual(aut, InverseAutomaton.trivial(AB))

    def test_identified_pairs_are_merged(self):
        m = MultiAutomaton(AB, 3, 0, ((0, 0, 1), (1, 1, 2)), identified=((2, 0),))
        aut = fold(m)
        self.assertEqual(aut.state_count, 2)
        self.assertEqual(aut.edges(), [(0, 0, 1), (1, 1, 0)])

    def test_union_find_fold_matches_naive_fold(self):
        rng = DEFAULT_CONFIG.rng(11)
        alphabets = [AB, ABC]
        for i in range(500):
            alphabet = alphabets[i % 2]
            gens = random_generators(rng, alphabet, max_gens=5, max_len=DEFAULT_CONFIG.max_word_length)
            m = flower(gens, alphabet)
            self.assertEqual(fold(m), naive_fold(m, seed=i), msg=f"sample {i}")

    def test_generating_set_independence(self):
        rng = DEFAULT_CONFIG.rng(12)
        for _ in range(100):
            gens = random_generators(rng, ABC, max_gens=4, max_len=6)
            g, h = rng.choice(gens), rng.choice(gens)
            extended = gens + [free_reduce(g * h), free_reduce(h ** -1)]
            self.assertEqual(stallings(gens, ABC), stallings(extended, ABC))


class TrimTests(unittest.TestCase):
    def test_path_cascade_leaves_basepoint(self):
        path = InverseAutomaton.from_edges(AB, 3, [(0, 0, 1), (1, 1, 2)])
        trimmed = trim(path)
        self.assertEqual(trimmed.state_count, 1)
        self.assertTrue(is_trivial(trimmed))

    def test_basepoint_is_never_removed(self):
        lollipop = automaton(AB, [(0, "a", 1), (1, "b", 1)], basepoint=0)
        self.assertEqual(trim(lollipop), lollipop)

    def test_complete_automaton_unchanged(self):
        aut = subgroup(AB, "b", "a^2", "a b a^-1")
        self.assertEqual(trim(aut), aut)

    def test_random_results_are_trimmed(self):
        rng = DEFAULT_CONFIG.rng(13)
        for _ in range(100):
            aut = stallings(random_generators(rng, AB), AB)
            for v in range(1, aut.state_count):
                self.assertGreaterEqual(aut.degree(v), 2)


if __name__ == "__main__":
    unittest.main()
