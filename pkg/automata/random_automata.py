"""
Seeded random ε-NFAs for differential testing
"""

import logging
import random
from typing import Optional

from automata.automaton import EPSILON, Nfa
from automata.errors import InvalidParameterError
from automata.words import InverseAlphabet

logger = logging.getLogger(__name__)


def random_nfa(
    rng: random.Random,
    state_count: int,
    k: int,
    density: float = 0.15,
    epsilon_density: float = 0.05,
    positive_only: bool = False,
    accepting_chance: float = 0.3,
    max_state_count: Optional[int] = None,
) -> Nfa:
    """
    Draw an ε-NFA on ``state_count`` states over Γ ∪ Γ⁻¹ with |Γ| = k

    Each possible labelled edge (p, a, q) is present with probability
    ``density``, each ε-edge p → q (p ≠ q) with ``epsilon_density``. With
    ``positive_only`` only letters of Γ label edges. State 0 is initial and
    at least one state accepts. When ``max_state_count`` is given the state
    count is itself drawn from 1..max_state_count.
    """
    if max_state_count is not None:
        state_count = rng.randint(1, max_state_count)
    if state_count < 1:
        raise InvalidParameterError(f"state_count must be positive, got {state_count}")
    for name, value in (("density", density), ("epsilon_density", epsilon_density),
                        ("accepting_chance", accepting_chance)):
        if not 0.0 <= value <= 1.0:
            raise InvalidParameterError(f"{name} must lie in [0, 1], got {value}")

    alphabet = InverseAlphabet(k)
    symbols = alphabet.positive_symbols if positive_only else alphabet.symbols
    states = range(state_count)
    transitions = {
        (p, symbol, q)
        for p in states for symbol in symbols for q in states
        if rng.random() < density
    }
    transitions |= {
        (p, EPSILON, q)
        for p in states for q in states
        if p != q and rng.random() < epsilon_density
    }
    accepting = {s for s in states if rng.random() < accepting_chance}
    if not accepting:
        accepting.add(rng.randrange(state_count))
    nfa = Nfa(state_count, alphabet, frozenset(transitions), 0, frozenset(accepting))
    logger.debug(f"Random NFA: {state_count} states, {len(transitions)} transitions")
    return nfa
