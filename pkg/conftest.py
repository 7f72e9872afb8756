"""Shared fixtures and hypothesis strategies for the test suite"""

import random
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import pytest
from hypothesis import strategies as st

from automata.automaton import EPSILON, Dfa, Nfa, as_nfa
from automata.random_automata import random_nfa
from automata.serialization import AutomatonExporter
from automata.words import InverseAlphabet, Symbol, Word

SUITE_SEED = 20240617


def words(k: int = 2, max_size: int = 10):
    """Words over Γ ∪ Γ⁻¹ with |Γ| = k"""
    return st.lists(st.sampled_from(InverseAlphabet(k).symbols), max_size=max_size).map(tuple)


@st.composite
def small_nfas(draw, max_states: int = 4, max_k: int = 2, positive_only: bool = False):
    """Arbitrary small ε-NFAs, drawn edge by edge"""
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_k))
    alphabet = InverseAlphabet(k)
    labels = list(alphabet.positive_symbols if positive_only else alphabet.symbols) + [EPSILON]
    edge = st.tuples(st.integers(0, n - 1), st.sampled_from(labels), st.integers(0, n - 1))
    transitions = draw(st.frozensets(edge, max_size=3 * n))
    accepting = draw(st.frozensets(st.integers(0, n - 1), max_size=n))
    return Nfa(n, alphabet, transitions, 0, accepting)


def build_random_suite(count: int, max_states: int, max_k: int, positive_only: bool = False,
                       seed: int = SUITE_SEED):
    rng = random.Random(seed)
    suite = []
    for _ in range(count):
        k = rng.randint(1, max_k)
        density = rng.choice((0.05, 0.1, 0.15, 0.25))
        suite.append(random_nfa(rng, 0, k, density=density, epsilon_density=rng.choice((0.0, 0.05, 0.15)),
                                positive_only=positive_only, max_state_count=max_states))
    return suite


@pytest.fixture(scope="session")
def closure_suite():
    """500 random ε-NFAs with at most 6 states over k <= 2"""
    return build_random_suite(500, max_states=6, max_k=2)


@pytest.fixture(scope="session")
def quotient_suite():
    """200 pairs of random plain NFAs with at most 4 states over a shared alphabet"""
    rng = random.Random(SUITE_SEED + 1)
    pairs = []
    for _ in range(200):
        k = rng.randint(1, 2)
        first = random_nfa(rng, 0, k, density=rng.choice((0.15, 0.3)), epsilon_density=0.1,
                           positive_only=True, max_state_count=4)
        second = random_nfa(rng, 0, k, density=rng.choice((0.15, 0.3)), epsilon_density=0.1,
                            positive_only=True, max_state_count=4)
        pairs.append((first, second))
    return pairs


@pytest.fixture
def exporter():
    return AutomatonExporter()


@pytest.fixture
def cancelling_path():
    """q0 --1--> q1 --1⁻¹--> q2, accepting q2"""
    return Nfa(3, InverseAlphabet(1), frozenset({(0, 1, 1), (1, -1, 2)}), 0, frozenset({2}))


# ----------------------------------------------------------------------------
# bounded search oracles
#
# Each walks accepted prefixes level by level, keyed by the prefix's reduced
# form. A letter of the reduced prefix lying deeper than the remaining budget
# can never be cancelled, so it is committed and dropped from the key.
# ----------------------------------------------------------------------------

def _push(tail: Word, symbol: Symbol) -> Word:
    return tail[:-1] if tail and tail[-1] == -symbol else tail + (symbol,)


def _run_from(dfa: Dfa, state: int, word: Word) -> int:
    for symbol in word:
        state = dfa.next_state(state, symbol)
    return state


def shortest_reduction_to(automaton, target: Iterable[Symbol], bound: int) -> Optional[int]:
    """Length of the shortest accepted word of length <= bound reducing to ``target``, else None"""
    nfa = as_nfa(automaton)
    target = tuple(target)
    level: Dict[Tuple[int, Word], FrozenSet[int]] = {(0, ()): nfa.start_set()}
    for length in range(bound + 1):
        for (committed, tail), states in level.items():
            if target[committed:] == tail and states & nfa.accepting:
                return length
        if length == bound:
            break
        budget = bound - length - 1
        following: Dict[Tuple[int, Word], FrozenSet[int]] = {}
        for (committed, tail), states in level.items():
            for symbol in nfa.alphabet.symbols:
                reached = nfa.step(states, symbol)
                if not reached:
                    continue
                tail_after = _push(tail, symbol)
                depth = committed
                while len(tail_after) > budget and depth < len(target) and tail_after[0] == target[depth]:
                    tail_after = tail_after[1:]
                    depth += 1
                if len(tail_after) > budget:
                    continue
                key = (depth, tail_after)
                following[key] = following.get(key, frozenset()) | reached
        level = following
    return None


def accepts_every_reduced_form(automaton, dfa: Dfa, bound: int) -> bool:
    """Whether ``dfa`` accepts reduce(w) for every accepted w with |w| <= bound"""
    nfa = as_nfa(automaton)
    level: Dict[Tuple[int, Word], FrozenSet[int]] = {(dfa.initial, ()): nfa.start_set()}
    for length in range(bound + 1):
        for (state, tail), states in level.items():
            if states & nfa.accepting and _run_from(dfa, state, tail) not in dfa.accepting:
                return False
        if length == bound:
            break
        budget = bound - length - 1
        following: Dict[Tuple[int, Word], FrozenSet[int]] = {}
        for (state, tail), states in level.items():
            for symbol in nfa.alphabet.symbols:
                reached = nfa.step(states, symbol)
                if not reached:
                    continue
                tail_after = _push(tail, symbol)
                committed_state = state
                while len(tail_after) > budget:
                    committed_state = dfa.next_state(committed_state, tail_after[0])
                    tail_after = tail_after[1:]
                key = (committed_state, tail_after)
                following[key] = following.get(key, frozenset()) | reached
        level = following
    return True
