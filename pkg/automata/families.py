"""
Lower-Bound Automaton Families
==============================

Three parameterised DFAs whose shortest reducible accepted word is long,
together with the recursively defined witness words:

- ``lss1``: n live states over k = n − 2 letters; shortest length 2^(n−1).
- ``lss2``: 3n live states over two letters; shortest length 3·2ⁿ − 4.
- ``unary``: n live states over {1, 1⁻¹}; shortest length (n+1)(n−1)/2 for
  odd n and n²/2 for even n.

States keep their textbook names (q_a, p_a, r_a, and q-1 for the dead state)
as labels so DOT output reads like the usual drawings.
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from automata.automaton import Dfa, StatePair
from automata.errors import InvalidParameterError
from automata.words import InverseAlphabet, Symbol, Word

logger = logging.getLogger(__name__)


class FamilyKind(str, Enum):
    LSS1 = "lss1"
    LSS2 = "lss2"
    UNARY = "unary"


MINIMUM_PARAMETER: Dict[FamilyKind, int] = {
    FamilyKind.LSS1: 3,
    FamilyKind.LSS2: 1,
    FamilyKind.UNARY: 0,
}


class FamilyId(BaseModel):
    """A family member, e.g. ``FamilyId(kind="lss2", n=4)``"""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    n: int

    @model_validator(mode="after")
    def check_parameter(self) -> "FamilyId":
        minimum = MINIMUM_PARAMETER[self.kind]
        if self.n < minimum:
            raise ValueError(f"{self.kind.value} requires n >= {minimum}, got {self.n}")
        return self

    @property
    def label(self) -> str:
        return f"{self.kind.value}({self.n})"

    def build(self) -> Dfa:
        return BUILDERS[self.kind](self.n)

    def closed_form_length(self) -> int:
        """Shortest reducible length predicted for this member"""
        n = self.n
        if self.kind is FamilyKind.LSS1:
            return 2 ** (n - 1)
        if self.kind is FamilyKind.LSS2:
            return 3 * 2 ** n - 4
        return (n + 1) * (n - 1) // 2 if n % 2 else n * n // 2


def _require(n: int, minimum: int, what: str):
    if not isinstance(n, int) or n < minimum:
        raise InvalidParameterError(f"{what} requires n >= {minimum}, got {n!r}")


def build_lss1(n: int) -> Dfa:
    """
    The n-live-state DFA over k = n − 2 letters

    q₀ reads 1 into q₁; each q_a (1 ≤ a ≤ n−2) climbs to q_{a+1} on a⁻¹ and
    falls back to q₀ on a; q_{n−1} returns to q₀ on 1⁻¹. Only q₁ accepts.
    """
    _require(n, 3, "lss1")
    alphabet = InverseAlphabet(n - 2)
    transitions: Dict[Tuple[int, Symbol], int] = {(0, 1): 1}
    for a in range(1, n - 1):
        transitions[(a, -a)] = a + 1
        transitions[(a, a)] = 0
    transitions[(n - 1, -1)] = 0
    labels = [f"q{a}" for a in range(n)]
    dfa = Dfa.from_transitions(n, alphabet, transitions, 0, [1], labels)
    logger.info(f"Built lss1({n}): {dfa.state_count} states, k={alphabet.k}")
    return dfa


def lss2_state_ids(n: int) -> Dict[str, int]:
    """Label → id for lss2(n): q₀..q_n, then p₁..p_n, then r₂..r_n"""
    ids = {f"q{a}": a for a in range(n + 1)}
    ids.update({f"p{a}": n + a for a in range(1, n + 1)})
    ids.update({f"r{a}": 2 * n + a - 1 for a in range(2, n + 1)})
    return ids


def build_lss2(n: int) -> Dfa:
    """
    The 3n-live-state DFA over {1, 2} accepting one reducible word of length 3·2ⁿ − 4

    The q-chain descends from the initial state q_n to q₀ reading 1 at odd
    and 2 at even indices; q₀ enters p₁ on 1⁻¹; the p-chain climbs to the
    accepting p_n, and every p_a can detour through r_{a+1} back into the
    q-chain on inverse letters.
    """
    _require(n, 1, "lss2")
    ids = lss2_state_ids(n)
    q, p, r = ({int(name[1:]): i for name, i in ids.items() if name[0] == c} for c in "qpr")

    transitions: Dict[Tuple[int, Symbol], int] = {}
    for a in range(1, n + 1):
        transitions[(q[a], 1 if a % 2 else 2)] = q[a - 1]
    transitions[(q[0], -1)] = p[1]
    for a in range(1, n):
        transitions[(p[a], 2 if a % 2 else 1)] = p[a + 1]
        transitions[(p[a], -2 if a % 2 else -1)] = r[a + 1]
    for a in range(2, n + 1):
        transitions[(r[a], -1 if a % 2 else -2)] = q[a - 1]

    labels = sorted(ids, key=ids.get)
    dfa = Dfa.from_transitions(3 * n, InverseAlphabet(2), transitions, q[n], [p[n]], labels)
    logger.info(f"Built lss2({n}): {dfa.state_count} states")
    return dfa


def build_unary(n: int) -> Dfa:
    """
    The cycle DFA over {1, 1⁻¹} with n live states (one when n = 0)

    States q₀ .. q_{⌊n/2⌋} are climbed on 1, the rest on 1⁻¹, and q_{n−1}
    wraps to q_{(n−1) mod 2} on 1⁻¹. Only q_{⌊n/2⌋} accepts.
    """
    _require(n, 0, "unary")
    live = max(n, 1)
    half = n // 2
    transitions: Dict[Tuple[int, Symbol], int] = {}
    for a in range(half):
        transitions[(a, 1)] = a + 1
    for a in range(half, n - 1):
        transitions[(a, -1)] = a + 1
    if n >= 1:
        transitions[(n - 1, -1)] = (n - 1) % 2
    labels = [f"q{a}" for a in range(live)]
    dfa = Dfa.from_transitions(live, InverseAlphabet(1), transitions, 0, [half], labels)
    logger.info(f"Built unary({n}): {dfa.state_count} states")
    return dfa


BUILDERS = {
    FamilyKind.LSS1: build_lss1,
    FamilyKind.LSS2: build_lss2,
    FamilyKind.UNARY: build_unary,
}


def build_family(kind: str, n: int) -> Dfa:
    try:
        family_kind = FamilyKind(kind)
    except ValueError as e:
        raise InvalidParameterError(f"unknown family {kind!r}") from e
    _require(n, MINIMUM_PARAMETER[family_kind], family_kind.value)
    return BUILDERS[family_kind](n)


def lss1_witness(n: int) -> Word:
    """
    w₂ = ε and w_n = w′_{n−1} (n−2) w′_{n−1} (n−2)⁻¹ 1⁻¹ 1,
    where w′ drops the last two symbols of w (w′₂ = ε)
    """
    _require(n, 2, "lss1_witness")
    word: Word = ()
    for m in range(3, n + 1):
        prime = word[:-2]
        word = prime + (m - 2,) + prime + (-(m - 2), -1, 1)
    return word


def lss2_witness(k: int) -> Word:
    """
    w₁ = 1 1⁻¹; for k > 1, w_k = c w_{k−1} c⁻¹ c⁻¹ w_{k−1} c
    with c = 1 for odd k and c = 2 for even k
    """
    _require(k, 1, "lss2_witness")
    word: Word = (1, -1)
    for m in range(2, k + 1):
        c = 1 if m % 2 else 2
        word = (c,) + word + (-c, -c) + word + (c,)
    return word


def lss2_level_closed_form(n: int, m: int) -> FrozenSet[StatePair]:
    """
    C_m for lss2(n) with m ≥ 1, from the closed form

    {(q_k, p_k)} when m = 3·2^k − 4 (1 ≤ k ≤ n), {(q_k, r_k), (r_k, p_k)} when
    m = 3·2^(k−1) − 2 (2 ≤ k ≤ n), and empty otherwise.
    """
    _require(n, 1, "lss2")
    if m < 1:
        raise InvalidParameterError(f"the closed form covers m >= 1, got {m}")
    ids = lss2_state_ids(n)
    pairs: List[StatePair] = []
    for k in range(1, n + 1):
        if m == 3 * 2 ** k - 4:
            pairs.append((ids[f"q{k}"], ids[f"p{k}"]))
        if k >= 2 and m == 3 * 2 ** (k - 1) - 2:
            pairs.append((ids[f"q{k}"], ids[f"r{k}"]))
            pairs.append((ids[f"r{k}"], ids[f"p{k}"]))
    return frozenset(pairs)
