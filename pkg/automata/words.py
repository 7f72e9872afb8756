"""
Words over Inverse Alphabets
============================

Letters of Σ = Γ ∪ Γ⁻¹ are encoded as nonzero integers: ``i`` is the letter
``i`` of Γ and ``-i`` its formal inverse, so inverting a symbol is negation.
A word is an immutable tuple of such integers and the empty tuple is ε.

The reduction relation ⊢ deletes one factor ``a a⁻¹``. It is confluent and
terminating, so every word has a unique normal form ``r(w)``; ``reduce``
computes it with a single stack pass, and ``one_step_reductions`` exposes
the relation itself so the normal form can be cross-checked by search.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Set, Tuple

from automata.errors import InvalidParameterError, RejectedInputError

logger = logging.getLogger(__name__)

Symbol = int
Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


def inverse(symbol: Symbol) -> Symbol:
    """Return the formal inverse of a symbol"""
    if symbol == 0:
        raise InvalidParameterError("0 is not a symbol; letters are nonzero integers")
    return -symbol


def symbol_key(symbol: Symbol) -> Tuple[int, bool]:
    """Sort key giving the symbol order 1 < 1⁻¹ < 2 < 2⁻¹ < ..."""
    return abs(symbol), symbol < 0


def word_key(word: Word) -> Tuple[int, Tuple[Tuple[int, bool], ...]]:
    """Length-then-lexicographic sort key for words"""
    return len(word), tuple(symbol_key(s) for s in word)


@dataclass(frozen=True)
class InverseAlphabet:
    """
    The alphabet Γ ∪ Γ⁻¹ with Γ = {1, ..., k}

    A symbol belongs to the alphabet iff ``1 <= |symbol| <= k``.
    """

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidParameterError(f"alphabet size k must be a positive integer, got {self.k!r}")

    @property
    def size(self) -> int:
        return 2 * self.k

    @cached_property
    def symbols(self) -> Tuple[Symbol, ...]:
        """All symbols in enumeration order"""
        return tuple(s for letter in range(1, self.k + 1) for s in (letter, -letter))

    @property
    def positive_symbols(self) -> Tuple[Symbol, ...]:
        return tuple(range(1, self.k + 1))

    def __contains__(self, symbol: object) -> bool:
        return isinstance(symbol, int) and 1 <= abs(symbol) <= self.k

    def index(self, symbol: Symbol) -> int:
        """Column of ``symbol`` in a transition table"""
        if symbol not in self:
            raise RejectedInputError(f"symbol {symbol} is not in the alphabet of size k={self.k}")
        return 2 * (abs(symbol) - 1) + (1 if symbol < 0 else 0)

    def validate_word(self, word: Iterable[Symbol]) -> Word:
        """Return ``word`` as a tuple, rejecting symbols outside the alphabet"""
        word = tuple(word)
        for symbol in word:
            if symbol not in self:
                raise RejectedInputError(
                    f"symbol {symbol} is not in the alphabet of size k={self.k}"
                )
        return word


def reduce(word: Iterable[Symbol]) -> Word:
    """
    Compute the reduced representation r(w)

    Push each symbol; if it is the inverse of the symbol on top of the
    stack, pop instead.
    """
    stack: List[Symbol] = []
    for symbol in word:
        if stack and stack[-1] == -symbol:
            stack.pop()
        else:
            stack.append(symbol)
    return tuple(stack)


def is_reduced(word: Iterable[Symbol]) -> bool:
    """True iff the word has no factor a·a⁻¹"""
    word = tuple(word)
    return all(word[i] != -word[i + 1] for i in range(len(word) - 1))


def is_reducible(word: Iterable[Symbol]) -> bool:
    """True iff r(w) = ε"""
    return not reduce(word)


def invert_word(word: Iterable[Symbol]) -> Word:
    """w⁻¹: the reversal of w with every symbol inverted"""
    return tuple(-symbol for symbol in reversed(tuple(word)))


def concat_words(*words: Iterable[Symbol]) -> Word:
    return tuple(symbol for word in words for symbol in word)


def one_step_reductions(word: Iterable[Symbol]) -> Set[Word]:
    """All w' with w ⊢ w' (one deletion of an adjacent inverse pair)"""
    word = tuple(word)
    return {
        word[:i] + word[i + 2:]
        for i in range(len(word) - 1)
        if word[i] == -word[i + 1]
    }


def reduction_normal_forms(word: Iterable[Symbol]) -> FrozenSet[Word]:
    """
    Every reduced word reachable from ``word`` under ⊢*

    A breadth-first search over the one-step relation. By confluence the
    result always has exactly one element, equal to ``reduce(word)``; the
    search exists so that claim can be checked rather than assumed.
    """
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    normal_forms = set()
    while queue:
        current = queue.popleft()
        successors = one_step_reductions(current)
        if not successors:
            normal_forms.add(current)
        for nxt in successors:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(normal_forms)


def two_adic_valuation(n: int) -> int:
    """ν₂(n): exponent of the highest power of 2 dividing n"""
    if n < 1:
        raise InvalidParameterError(f"ν₂ is defined for positive integers, got {n}")
    return (n & -n).bit_length() - 1


def ruler_prefix(k: int) -> Tuple[int, ...]:
    """The first 2^k − 1 terms of the ruler sequence ν₂(1), ν₂(2), ..."""
    if k < 1:
        raise InvalidParameterError(f"ruler prefix length parameter must be >= 1, got {k}")
    return tuple(two_adic_valuation(n) for n in range(1, 2 ** k))


def ruler_word(k: int) -> Word:
    """The ruler prefix over letters: each value v becomes the letter v + 1"""
    return tuple(value + 1 for value in ruler_prefix(k))


def positive_projection(word: Iterable[Symbol]) -> Word:
    """Erase the inverse letters: the subsequence of symbols from Γ"""
    return tuple(symbol for symbol in word if symbol > 0)


def format_word(word: Iterable[Symbol]) -> str:
    """CLI rendering: space-separated signed integers, ``e`` for ε"""
    word = tuple(word)
    if not word:
        return "e"
    return " ".join(str(symbol) for symbol in word)
