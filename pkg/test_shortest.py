"""Tests for the pair-distance table and shortest reducible words"""

import math

import pytest

from automata.automaton import Nfa, accepts, enumerate_language
from automata.errors import InvalidParameterError
from automata.families import build_lss1, build_lss2, build_unary, lss2_witness
from automata.shortest import (
    INFINITY, balance, parse_tree_length_bound, reducible_pair_distances, reducible_pair_levels,
    shortest_reducible_word, unary_length_bound,
)
from automata.words import InverseAlphabet, is_reducible, reduce
from config import Config
from conftest import shortest_reduction_to


def test_reflexive_distances_are_zero(cancelling_path):
    table = reducible_pair_distances(cancelling_path)
    assert all(table.d[p][p] == 0 for p in range(3))
    assert table.d[0][2] == 2
    assert table.d[0][1] == INFINITY
    assert table.witness(0, 2) == (1, -1)
    assert table.witness(0, 1) is None


def test_lss2_pair_distance():
    nfa = build_lss2(4).to_nfa()
    table = reducible_pair_distances(nfa)
    assert table.d[nfa.state_id("q4")][nfa.state_id("p4")] == 44


def test_accepting_only_empty_word():
    nfa = Nfa(1, InverseAlphabet(1), frozenset(), 0, frozenset({0}))
    answer = shortest_reducible_word(nfa)
    assert answer.length == 0
    assert answer.word == ()


def test_no_reducible_word():
    nfa = Nfa(2, InverseAlphabet(1), frozenset({(0, 1, 1), (1, 1, 1)}), 0, frozenset({1}))
    assert shortest_reducible_word(nfa) is None


def test_lss1_three():
    answer = shortest_reducible_word(build_lss1(3))
    assert answer.length == 4
    assert answer.word == (1, -1, -1, 1)


def test_unary_five():
    assert shortest_reducible_word(build_unary(5)).length == 12


def test_witness_cap_switches_to_derivation():
    answer = shortest_reducible_word(build_lss2(3), cap=10)
    assert answer.length == 20
    assert answer.word is None
    assert answer.derivation
    assert answer.derivation[-1].startswith("(q3,p3) [20]")
    full = shortest_reducible_word(build_lss2(3))
    assert full.word == lss2_witness(3)
    assert shortest_reducible_word(build_lss2(3), witness=False).word is None


def test_uncapped_witness_is_always_written_out():
    answer = shortest_reducible_word(build_lss1(18))
    assert answer.derivation is None
    assert len(answer.word) == answer.length > Config().WITNESS_CAP
    assert is_reducible(answer.word)


def test_negative_cap_is_rejected():
    with pytest.raises(InvalidParameterError):
        shortest_reducible_word(build_lss2(1), cap=-1)


def test_distance_table_invariants(closure_suite):
    for nfa in closure_suite[:200]:
        table = reducible_pair_distances(nfa)
        n = nfa.state_count
        for p in range(n):
            assert table.d[p][p] == 0
            for q in range(n):
                if table.is_finite(p, q):
                    assert table.d[p][q] % 2 == 0
                    witness = table.witness(p, q)
                    assert len(witness) == table.d[p][q]
                    assert is_reducible(witness)
                    assert balance_is_zero_per_letter(witness)
                for r in range(n):
                    assert table.d[p][q] <= table.d[p][r] + table.d[r][q]


def balance_is_zero_per_letter(word) -> bool:
    letters = {abs(s) for s in word}
    return all(sum(1 if s == a else -1 if s == -a else 0 for s in word) == 0 for a in letters)


def test_witness_drives_initial_to_final(closure_suite):
    for nfa in closure_suite[:200]:
        answer = shortest_reducible_word(nfa)
        if answer is None:
            continue
        assert answer.final_state in nfa.accepting
        assert accepts(nfa, answer.word)
        assert is_reducible(answer.word)


def test_brute_force_agreement(closure_suite):
    for nfa in closure_suite:
        found = shortest_reduction_to(nfa, (), 12)
        answer = shortest_reducible_word(nfa, witness=False)
        if found is not None:
            assert answer is not None and answer.length == found
        else:
            assert answer is None or answer.length > 12


def test_search_matches_plain_enumeration(closure_suite):
    for nfa in closure_suite[:100]:
        reducible = [w for w in enumerate_language(nfa, 6) if not reduce(w)]
        expected = len(reducible[0]) if reducible else None
        assert shortest_reduction_to(nfa, (), 6) == expected


def test_upper_bounds(closure_suite):
    for nfa in closure_suite:
        answer = shortest_reducible_word(nfa, witness=False)
        if answer is None:
            continue
        n = nfa.state_count
        assert answer.length <= parse_tree_length_bound(n)
        if nfa.alphabet.k == 1:
            assert answer.length <= unary_length_bound(n)


def test_levels_match_distances(closure_suite):
    for nfa in closure_suite[:60]:
        table = reducible_pair_distances(nfa)
        levels = reducible_pair_levels(nfa, 10)
        n = nfa.state_count
        for p in range(n):
            for q in range(n):
                hits = [m for m in range(11) if (p, q) in levels[m]]
                if table.d[p][q] <= 10:
                    assert hits and hits[0] == table.d[p][q]
                else:
                    assert hits == []


def test_levels_reject_negative_length(cancelling_path):
    with pytest.raises(InvalidParameterError):
        reducible_pair_levels(cancelling_path, -1)


def test_balance():
    assert balance((1, 1, -1)) == 1
    assert balance(()) == 0
    assert balance((1, -1, -1, 1)) == 0
    with pytest.raises(InvalidParameterError):
        balance((2,))


def test_bounds():
    assert parse_tree_length_bound(1) == 1
    assert parse_tree_length_bound(3) == 2 ** 6
    assert unary_length_bound(2) == 18
    assert math.isinf(INFINITY)
