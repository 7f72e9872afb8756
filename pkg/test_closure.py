"""Tests for ε-saturation and the automaton for r(L)"""

import random
import time

import numpy as np
import pytest

from automata.automaton import (
    EPSILON, Nfa, accepts, enumerate_language, is_equivalent, single_word,
)
from automata.closure import (
    reduced_language, reduced_language_dfa, reduced_language_dfa_state_count, reduced_words_dfa,
    saturate_closure, saturate_closure_naive, state_complexity_bound, wrap_rules,
)
from automata.families import build_lss1, build_lss2
from automata.random_automata import random_nfa
from automata.shortest import reducible_pair_distances
from automata.words import InverseAlphabet, is_reduced, one_step_reductions, reduce
from conftest import accepts_every_reduced_form


def test_no_inverse_structure_adds_nothing():
    nfa = Nfa(3, InverseAlphabet(1), frozenset({(0, 1, 1), (1, 1, 2)}), 0, frozenset({2}))
    result = saturate_closure(nfa)
    assert result.added_edges == frozenset()
    assert wrap_rules(nfa) == []


def test_cancelling_path_gets_an_edge(cancelling_path):
    result = saturate_closure(cancelling_path)
    assert result.added_edges == {(0, 2)}
    assert (0, EPSILON, 2) in result.saturated.transitions
    assert accepts(result.saturated, ())


def test_empty_transition_nfa_has_no_edges():
    nfa = Nfa(4, InverseAlphabet(2), frozenset(), 0, frozenset({3}))
    assert saturate_closure_naive(nfa).edges == frozenset()
    assert saturate_closure(nfa).edges == frozenset()


def test_lss2_edges_match_pair_distances():
    dfa = build_lss2(2)
    result = saturate_closure(dfa)
    assert result.edges == saturate_closure_naive(dfa).edges
    assert result.edges == reducible_pair_distances(dfa).finite_pairs()
    nfa = dfa.to_nfa()
    assert (nfa.state_id("q2"), nfa.state_id("p2")) in result.edges


def test_lss1_edges_match_pair_distances():
    dfa = build_lss1(4)
    nfa = dfa.to_nfa()
    result = saturate_closure(nfa)
    assert result.edges == reducible_pair_distances(nfa).finite_pairs()
    assert (nfa.state_id("q0"), nfa.state_id("q1")) in result.edges


def test_existing_epsilon_edges_are_not_reported_as_added():
    nfa = Nfa(3, InverseAlphabet(1), frozenset({(0, EPSILON, 1), (1, 1, 2), (2, -1, 1)}),
              0, frozenset({1}))
    result = saturate_closure(nfa)
    assert (0, 1) in result.edges
    assert (0, 1) not in result.added_edges
    assert (1, 1) not in result.edges


def test_shuffled_rule_order_gives_same_edges(closure_suite):
    for nfa in closure_suite[:100]:
        expected = saturate_closure(nfa).edges
        for seed in (1, 2):
            assert saturate_closure(nfa, shuffle_seed=seed).edges == expected


def test_closure_matches_naive_and_distances(closure_suite):
    for nfa in closure_suite:
        result = saturate_closure(nfa)
        assert result.edges == saturate_closure_naive(nfa).edges
        assert result.edges == reducible_pair_distances(nfa).finite_pairs()


def test_saturated_edge_relation_is_transitive(closure_suite):
    for nfa in closure_suite[:100]:
        edges = saturate_closure(nfa).edges
        n = nfa.state_count
        reach = np.eye(n, dtype=bool)
        for p, q in edges:
            reach[p, q] = True
        squared = (reach.astype(int) @ reach.astype(int)) > 0
        assert np.array_equal(squared, reach)


def test_saturation_only_grows_the_language(closure_suite):
    for nfa in closure_suite[:100]:
        saturated = saturate_closure(nfa).saturated
        for word in enumerate_language(nfa, 5):
            assert accepts(saturated, word)


def test_saturated_language_is_closed_under_cancellation(closure_suite):
    for nfa in closure_suite[:40]:
        saturated = saturate_closure(nfa).saturated
        accepted = set(enumerate_language(saturated, 8))
        for word in accepted:
            assert one_step_reductions(word) <= accepted


def test_cancelling_pairs_return_to_epsilon_reach(closure_suite):
    for nfa in closure_suite:
        saturated = saturate_closure(nfa).saturated
        for p in range(saturated.state_count):
            start = saturated.epsilon_closure([p])
            for symbol in saturated.alphabet.symbols:
                assert saturated.step(saturated.step(start, symbol), -symbol) <= start


def test_reduced_language_examples():
    alphabet = InverseAlphabet(2)
    assert enumerate_language(reduced_language(single_word(alphabet, (1, -1))), 4) == [()]
    m2 = reduced_words_dfa(2)
    assert is_equivalent(reduced_language(m2), m2)


def test_reduced_language_two_sided_check(closure_suite):
    for nfa in closure_suite:
        dfa = reduced_language_dfa(nfa)
        assert accepts_every_reduced_form(nfa, dfa, 12)
        saturated = saturate_closure(nfa).saturated
        for word in enumerate_language(dfa, 6):
            assert is_reduced(word)
            assert accepts(saturated, word)


def test_reduced_form_search_matches_enumeration(closure_suite):
    for nfa in closure_suite[:100]:
        dfa = reduced_language_dfa(nfa)
        assert all(accepts(dfa, reduce(word)) for word in enumerate_language(nfa, 6))
        assert accepts_every_reduced_form(nfa, dfa, 6)
    only_one = reduced_language_dfa(single_word(InverseAlphabet(1), (1,)))
    assert accepts_every_reduced_form(single_word(InverseAlphabet(1), (1, -1, 1)), only_one, 3)
    assert not accepts_every_reduced_form(single_word(InverseAlphabet(1), (1, 1)), only_one, 2)


def test_state_complexity_bound(closure_suite):
    for nfa in closure_suite:
        count = reduced_language_dfa_state_count(nfa)
        assert count <= state_complexity_bound(nfa.state_count, nfa.alphabet.k)


def test_state_count_examples():
    only_empty_word = Nfa(1, InverseAlphabet(1), frozenset(), 0, frozenset({0}))
    assert reduced_language_dfa_state_count(only_empty_word) <= 4
    m2 = reduced_words_dfa(2)
    assert reduced_language_dfa_state_count(m2) <= 2 ** 6 * 6


@pytest.mark.parametrize("seed", [7])
def test_hundred_state_saturation_is_fast(seed):
    nfa = random_nfa(random.Random(seed), 100, 2, density=0.01, epsilon_density=0.01)
    started = time.perf_counter()
    result = saturate_closure(nfa)
    assert time.perf_counter() - started < 10.0
    assert result.edges >= {(p, q) for p, label, q in nfa.transitions if label == EPSILON and p != q}
