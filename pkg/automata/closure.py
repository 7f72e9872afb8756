"""
Reduction Closure
=================

Given an ε-NFA M, the ⊢-closure of L(M) is accepted by M plus one
ε-transition p → q for every pair of states joined by a reducible word.
Intersecting that automaton with the DFA for reduced words gives r(L(M)).

Saturation keeps a reachability relation E over states (reflexive and
transitive at all times) and a waiting list l(s, t) for each pair. Every
"wrap" rule (p, q, s, t), meaning s ∈ δ(p, a) and q ∈ δ(t, a⁻¹), says that
(s, t) ∈ E implies (p, q) ∈ E. Rules whose premise is not yet known wait in
l(s, t) and are released once, when (s, t) enters E.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from automata.automaton import Dfa, Nfa, StatePair, as_nfa, determinize, product_intersection
from automata.errors import InvalidParameterError
from automata.words import InverseAlphabet

logger = logging.getLogger(__name__)

WrapRule = Tuple[int, int, int, int]


@dataclass(frozen=True)
class ClosureResult:
    """
    Outcome of saturating an automaton

    ``edges`` holds every non-reflexive pair of the final relation E;
    ``added_edges`` only those not already joined by ε-transitions of the input.
    """

    saturated: Nfa
    edges: FrozenSet[StatePair]
    added_edges: FrozenSet[StatePair]


def reduced_words_dfa(k: int) -> Dfa:
    """
    The (2k+2)-state DFA M_k accepting r(Σ*)

    State 0 is q₀, state ``1 + alphabet.index(a)`` is q_a (the last letter
    read was a) and the final state is the dead state q₋₁. Reading c in q_a
    leads to q_c unless a = c⁻¹. Every state except the dead one accepts.
    """
    if k < 1:
        raise InvalidParameterError(f"reduced_words_dfa needs k >= 1, got {k}")
    alphabet = InverseAlphabet(k)
    symbols = alphabet.symbols

    def state_of(symbol: int) -> int:
        return 1 + alphabet.index(symbol)

    transitions = {(0, c): state_of(c) for c in symbols}
    for a in symbols:
        for c in symbols:
            if a != -c:
                transitions[(state_of(a), c)] = state_of(c)
    labels = ["q0"] + [f"q{a}" if a > 0 else f"q{-a}⁻¹" for a in symbols]
    dfa = Dfa.from_transitions(2 * k + 1, alphabet, transitions, 0, range(2 * k + 1), labels)
    logger.info(f"Built reduced-words DFA for k={k}: {dfa.state_count} states")
    return dfa


def wrap_rules(automaton: Nfa) -> List[WrapRule]:
    """
    All 4-tuples (p, q, s, t) with s ∈ δ(p, a) and q ∈ δ(t, a⁻¹) for some a

    Sorted lexicographically and without duplicates (several symbols can
    produce the same tuple).
    """
    by_symbol: Dict[int, List[StatePair]] = {}
    for p, a, s in automaton.symbol_transitions():
        by_symbol.setdefault(a, []).append((p, s))
    rules = set()
    for a, opening in by_symbol.items():
        closing = by_symbol.get(-a, [])
        for p, s in opening:
            for t, q in closing:
                rules.add((p, q, s, t))
    return sorted(rules)


def _epsilon_matrix(automaton: Nfa) -> np.ndarray:
    n = automaton.state_count
    reach = np.eye(n, dtype=bool)
    for p in range(n):
        for q in automaton.epsilon_closure([p]):
            reach[p, q] = True
    return reach


def _result(automaton: Nfa, initial: np.ndarray, reach: np.ndarray) -> ClosureResult:
    n = automaton.state_count
    off_diagonal = ~np.eye(n, dtype=bool)
    edges = frozenset((int(p), int(q)) for p, q in np.argwhere(reach & off_diagonal))
    added = frozenset((int(p), int(q)) for p, q in np.argwhere(reach & ~initial & off_diagonal))
    saturated = automaton.with_epsilon_edges(edges)
    return ClosureResult(saturated=saturated, edges=edges, added_edges=added)


def saturate_closure(automaton, shuffle_seed: Optional[int] = None) -> ClosureResult:
    """
    Add an ε-transition between every pair of states joined by a reducible word

    E starts as the reflexive-transitive closure of the ε-transitions. Each
    wrap rule either fires immediately (its premise (s, t) is already in E)
    or waits in l(s, t). Inserting a pair (u, v) adds every (x, y) with
    x E u and v E y in one vectorised step; each newly added pair releases
    its waiting list exactly once.

    Rules are processed in lexicographic order unless ``shuffle_seed`` is
    given, in which case they are shuffled; the result does not depend on
    the order.
    """
    nfa = as_nfa(automaton)
    initial = _epsilon_matrix(nfa)
    reach = initial.copy()
    waiting: Dict[StatePair, List[StatePair]] = {}

    def update(pair: StatePair):
        worklist = [pair]
        while worklist:
            u, v = worklist.pop()
            if reach[u, v]:
                continue
            fresh = np.outer(reach[:, u], reach[v, :]) & ~reach
            reach[fresh] = True
            for x, y in np.argwhere(fresh):
                worklist.extend(waiting.pop((int(x), int(y)), ()))

    rules = wrap_rules(nfa)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(rules)
    for p, q, s, t in rules:
        if reach[s, t]:
            update((p, q))
        else:
            waiting.setdefault((s, t), []).append((p, q))

    result = _result(nfa, initial, reach)
    logger.info(
        f"Saturated {nfa.state_count}-state automaton: {len(rules)} wrap rules, "
        f"{len(result.added_edges)} ε-edges added"
    )
    return result


def _transitive_closure(reach: np.ndarray) -> np.ndarray:
    closed = reach.copy()
    for middle in range(closed.shape[0]):
        closed |= np.outer(closed[:, middle], closed[middle, :])
    return closed


def saturate_closure_naive(automaton) -> ClosureResult:
    """
    Fixpoint oracle for ``saturate_closure``

    Repeatedly fire every wrap rule whose premise holds and re-close the
    relation transitively, until a full pass adds nothing.
    """
    nfa = as_nfa(automaton)
    initial = _epsilon_matrix(nfa)
    reach = _transitive_closure(initial)
    rules = wrap_rules(nfa)
    changed = True
    while changed:
        changed = False
        for p, q, s, t in rules:
            if reach[s, t] and not reach[p, q]:
                reach[p, q] = True
                changed = True
        if changed:
            reach = _transitive_closure(reach)
    return _result(nfa, initial, reach)


def reduced_language_dfa(automaton) -> Dfa:
    """
    A complete DFA for r(L(M))

    The saturated automaton accepts the ⊢-closure of L(M); its subset
    construction crossed with M_k keeps exactly the reduced words.
    """
    nfa = as_nfa(automaton)
    saturated = saturate_closure(nfa).saturated
    dfa = product_intersection(determinize(saturated), reduced_words_dfa(nfa.alphabet.k))
    logger.info(f"r(L) DFA for {nfa.state_count}-state input has {dfa.state_count} states")
    return dfa


def reduced_language(automaton) -> Nfa:
    """An ε-NFA accepting r(L(M)) = {r(w) : w ∈ L(M)}"""
    return reduced_language_dfa(automaton).to_nfa()


def reduced_language_dfa_state_count(automaton) -> int:
    """Number of states of the r(L) DFA; at most 2ⁿ(2k+2) for an n-state input"""
    return reduced_language_dfa(automaton).state_count


def state_complexity_bound(state_count: int, k: int) -> int:
    """The 2ⁿ(2k+2) ceiling on the r(L) DFA"""
    return 2 ** state_count * (2 * k + 2)
