"""
Generalized Reduced Representations
===================================

A defining set of equations {u = v} induces an equivalence on words: a
factor equal to one side may be replaced by the other, anywhere. r_g(w)
is the set of shortest words equivalent to w.

Equivalence classes can be infinite and the word problem is undecidable in
general, so exploration is bounded by a length cap. A result says whether
the cap pruned anything; when it did not, the class was covered completely
and the representatives are exact.
"""

import logging
from collections import deque
from math import factorial
from typing import Any, Dict, FrozenSet, Iterable, List, Set, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from automata.errors import InvalidParameterError
from automata.validators import InputValidator
from automata.words import InverseAlphabet, Word

logger = logging.getLogger(__name__)

Equation = Tuple[Word, Word]


class EquationSystem(BaseModel):
    """
    Equations over the plain alphabet {1, ..., alphabet_size}

    Each equation is an unordered pair of distinct words; either side may be ε.
    """

    model_config = ConfigDict(frozen=True)

    alphabet_size: int
    equations: Tuple[Equation, ...] = ()

    @field_validator("alphabet_size")
    @classmethod
    def check_alphabet_size(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"alphabet_size must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def check_equations(self) -> "EquationSystem":
        seen = set()
        unique = []
        for u, v in self.equations:
            if u == v:
                raise ValueError(f"equation sides must differ, got {u} = {v}")
            for symbol in u + v:
                if not 1 <= symbol <= self.alphabet_size:
                    raise ValueError(f"letter {symbol} is outside 1..{self.alphabet_size}")
            key = frozenset((u, v))
            if key not in seen:
                seen.add(key)
                unique.append((u, v))
        object.__setattr__(self, "equations", tuple(unique))
        return self

    @classmethod
    def from_text(cls, text: str, alphabet_size: int = 0) -> "EquationSystem":
        """Build from an equations file body; the alphabet defaults to the largest letter used"""
        equations = InputValidator().parse_equations(text)
        used = max((s for u, v in equations for s in u + v), default=1)
        return cls(alphabet_size=max(alphabet_size, used), equations=equations)

    def rewrites(self) -> List[Equation]:
        """Every equation in both directions"""
        return [(u, v) for u, v in self.equations] + [(v, u) for u, v in self.equations]

    def is_length_preserving(self) -> bool:
        return all(len(u) == len(v) for u, v in self.equations)


class RgResult(BaseModel):
    """Minimal-length members found in the explored part of an equivalence class"""

    model_config = ConfigDict(frozen=True)

    representatives: FrozenSet[Word]
    exhaustive: bool
    explored: int

    @model_validator(mode="after")
    def check_lengths(self) -> "RgResult":
        if len({len(word) for word in self.representatives}) > 1:
            raise ValueError("representatives must share one length")
        return self

    @property
    def length(self) -> int:
        return len(next(iter(self.representatives)))

    def sorted_representatives(self) -> List[Word]:
        return sorted(self.representatives, key=lambda w: (len(w), w))


def _neighbours(word: Word, rewrites: List[Equation]) -> Iterable[Word]:
    for left, right in rewrites:
        width = len(left)
        for i in range(len(word) - width + 1):
            if word[i:i + width] == left:
                yield word[:i] + right + word[i + width:]


def _explore(word: Word, system: EquationSystem, length_cap: int) -> Tuple[Set[Word], bool]:
    if length_cap < len(word):
        raise InvalidParameterError(f"length cap {length_cap} is below the word length {len(word)}")
    rewrites = system.rewrites()
    seen = {word}
    pruned = False
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for nxt in _neighbours(current, rewrites):
            if len(nxt) > length_cap:
                pruned = True
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen, pruned


def eq_class_bfs(word: Iterable[int], system: EquationSystem, length_cap: int) -> FrozenSet[Word]:
    """Every word reachable from ``word`` by factor replacement without exceeding ``length_cap``"""
    members, _ = _explore(tuple(word), system, length_cap)
    return frozenset(members)


def rg(word: Iterable[int], system: EquationSystem, length_cap: int) -> RgResult:
    """
    r_g(w) within the length cap

    ``exhaustive`` is true when no rewrite was blocked by the cap; the
    representatives are then exactly r_g(w).
    """
    members, pruned = _explore(tuple(word), system, length_cap)
    shortest = min(len(w) for w in members)
    result = RgResult(
        representatives=frozenset(w for w in members if len(w) == shortest),
        exhaustive=not pruned,
        explored=len(members),
    )
    logger.info(f"r_g: explored {len(members)} words, {len(result.representatives)} of length {shortest}")
    return result


def to_plain_word(word: Iterable[int], k: int) -> Word:
    """Encode a word over Γ ∪ Γ⁻¹ as plain letters: a ↦ 2a − 1, a⁻¹ ↦ 2a"""
    alphabet = InverseAlphabet(k)
    return tuple(alphabet.index(symbol) + 1 for symbol in alphabet.validate_word(word))


def from_plain_word(letters: Iterable[int], k: int) -> Word:
    symbols = InverseAlphabet(k).symbols
    word = []
    for letter in letters:
        if not 1 <= letter <= len(symbols):
            raise InvalidParameterError(f"letter {letter} is outside 1..{len(symbols)}")
        word.append(symbols[letter - 1])
    return tuple(word)


def free_group_system(k: int) -> EquationSystem:
    """The cancellations a·a⁻¹ = ε and a⁻¹·a = ε over the 2k encoded letters"""
    equations = []
    for a in range(1, k + 1):
        equations.append((to_plain_word((a, -a), k), ()))
        equations.append((to_plain_word((-a, a), k), ()))
    return EquationSystem(alphabet_size=2 * k, equations=tuple(equations))


def commutation_system() -> EquationSystem:
    """ab = ba, ac = ca, bc = cb over {a, b, c}"""
    return EquationSystem(
        alphabet_size=3,
        equations=(((1, 2), (2, 1)), ((1, 3), (3, 1)), ((2, 3), (3, 2))),
    )


def equal_count_words(max_len: int) -> FrozenSet[Word]:
    """Words over {a, b, c} with |x|_a = |x|_b = |x|_c and |x| <= max_len"""
    if max_len < 0:
        raise InvalidParameterError(f"max_len must be nonnegative, got {max_len}")
    words: Set[Word] = set()
    for m in range(max_len // 3 + 1):
        words.update(_multiset_permutations({1: m, 2: m, 3: m}))
    return frozenset(words)


def _multiset_permutations(counts: Dict[int, int]) -> List[Word]:
    total = sum(counts.values())
    result: List[Word] = []
    prefix: List[int] = []

    def extend():
        if len(prefix) == total:
            result.append(tuple(prefix))
            return
        for letter in sorted(counts):
            if counts[letter]:
                counts[letter] -= 1
                prefix.append(letter)
                extend()
                prefix.pop()
                counts[letter] += 1

    extend()
    return result


def multinomial(*parts: int) -> int:
    value = factorial(sum(parts))
    for part in parts:
        value //= factorial(part)
    return value


class RgCensusReport(BaseModel):
    """Comparison of ⋃ r_g((abc)^m) with the equal-count words, per length"""

    model_config = ConfigDict(frozen=True)

    max_len: int
    rows: List[Dict[str, Any]]
    matches: bool

    def census_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows)

    def to_text(self) -> str:
        verdict = "yes" if self.matches else "no"
        return "\n".join([
            f"r_g((abc)*) under ab=ba, ac=ca, bc=cb, up to length {self.max_len}",
            self.census_frame().to_string(index=False),
            f"r_g words equal the equal-count words: {verdict}",
        ])


def rg_counterexample_check(max_len: int) -> RgCensusReport:
    """
    Compare ⋃ r_g(w) over w ∈ (abc)*, |w| <= max_len, with the equal-count words

    The commutation system preserves length, so every class is explored
    exhaustively at cap |w|. Each length is also checked against the
    multinomial coefficient (3m)!/(m!)³.
    """
    if max_len < 0:
        raise InvalidParameterError(f"max_len must be nonnegative, got {max_len}")
    system = commutation_system()
    reference = equal_count_words(max_len)
    rows = []
    matches = True
    for m in range(max_len // 3 + 1):
        word = (1, 2, 3) * m
        result = rg(word, system, len(word))
        found = result.representatives
        expected = frozenset(w for w in reference if len(w) == 3 * m)
        agree = result.exhaustive and found == expected and len(found) == multinomial(m, m, m)
        matches = matches and agree
        rows.append({
            'length': 3 * m,
            'rg_words': len(found),
            'equal_count_words': len(expected),
            'multinomial': multinomial(m, m, m),
            'match': agree,
        })
    logger.info(f"r_g census up to length {max_len}: {'match' if matches else 'MISMATCH'}")
    return RgCensusReport(max_len=max_len, rows=rows, matches=matches)
