"""
Language Algebra
================

Two constructions built on the reduction closure:

- Right quotients of plain languages. For L₁, L₂ ⊆ Γ*, the reduced words of
  L₁L₂⁻¹ that avoid inverse letters are exactly L₁/L₂.
- Membership in eq(L), the words whose reduced form is the reduced form of
  some member of L. A word belongs iff its reduction is accepted by the
  automaton for r(L).

The eq demo looks at eq({ε}) over one letter pair, the words that cancel
completely, and contrasts it with one-sided parenthesis balance.
"""

import logging
from collections import deque
from typing import Any, Dict, Iterable, List, Set, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict

from automata.automaton import (
    EPSILON, Automaton, Dfa, Nfa, StatePair, accepts, as_nfa, concat, enumerate_language,
    invert_language_automaton, product_intersection, single_word, universal_language,
)
from automata.closure import reduced_language_dfa
from automata.errors import AlphabetMismatchError, InvalidParameterError, NotPlainLanguageError
from automata.words import InverseAlphabet, Symbol, Word, format_word, reduce

logger = logging.getLogger(__name__)


def require_plain(automaton: Automaton, role: str = "operand") -> Nfa:
    """Return the NFA view of ``automaton``, rejecting any transition on an inverse letter"""
    nfa = as_nfa(automaton)
    for p, label, q in nfa.transitions:
        if label < 0:
            raise NotPlainLanguageError(
                f"{role} must be over Γ only, but has transition {p} --{label}--> {q}"
            )
    return nfa


def positive_words_dfa(k: int) -> Dfa:
    """The DFA for Γ*: one accepting state looping on 1..k, inverse letters go dead"""
    alphabet = InverseAlphabet(k)
    row = tuple(0 if symbol > 0 else 1 for symbol in alphabet.symbols)
    dead_row = (1,) * alphabet.size
    return Dfa(2, alphabet, (row, dead_row), 0, frozenset({0}), 1, ("gamma*", "q-1"))


def _check_operands(first: Automaton, second: Automaton) -> Tuple[Nfa, Nfa]:
    if first.alphabet != second.alphabet:
        raise AlphabetMismatchError(
            f"quotient needs a common alphabet, got k={first.alphabet.k} and k={second.alphabet.k}"
        )
    return require_plain(first, "dividend"), require_plain(second, "divisor")


def quotient(first: Automaton, second: Automaton) -> Nfa:
    """
    L₁/L₂ = {w : wx ∈ L₁ for some x ∈ L₂}, computed as r(L₁L₂⁻¹) ∩ Γ*

    Both operands must be plain (no inverse-letter transitions).
    """
    a, b = _check_operands(first, second)
    combined = concat(a, invert_language_automaton(b))
    reduced = reduced_language_dfa(combined)
    result = product_intersection(reduced, positive_words_dfa(a.alphabet.k))
    logger.info(f"Quotient of {a.state_count}- and {b.state_count}-state automata: "
                f"{result.state_count} DFA states")
    return result.to_nfa()


def residual_quotient(first: Automaton, second: Automaton) -> Nfa:
    """
    L₁/L₂ by pair reachability, independent of the reduction machinery

    A state s of A is made accepting iff, running A from s alongside B from
    its initial state, some common word reaches acceptance in both. The
    result is A with that accepting set.
    """
    a, b = _check_operands(first, second)

    successors: Dict[StatePair, Set[StatePair]] = {}

    def link(source: StatePair, target: StatePair):
        successors.setdefault(source, set()).add(target)

    pairs = [(s, t) for s in range(a.state_count) for t in range(b.state_count)]
    for s, t in pairs:
        for s2 in a.successors(s, EPSILON):
            link((s, t), (s2, t))
        for t2 in b.successors(t, EPSILON):
            link((s, t), (s, t2))
        for symbol in a.alphabet.positive_symbols:
            for s2 in a.successors(s, symbol):
                for t2 in b.successors(t, symbol):
                    link((s, t), (s2, t2))

    predecessors: Dict[StatePair, List[StatePair]] = {}
    for source, targets in successors.items():
        for target in targets:
            predecessors.setdefault(target, []).append(source)

    good = {(f, g) for f in a.accepting for g in b.accepting}
    queue = deque(good)
    while queue:
        pair = queue.popleft()
        for previous in predecessors.get(pair, ()):
            if previous not in good:
                good.add(previous)
                queue.append(previous)

    accepting = frozenset(s for s in range(a.state_count) if (s, b.initial) in good)
    return Nfa(a.state_count, a.alphabet, a.transitions, a.initial, accepting, a.labels)


class EquivalenceLanguage:
    """
    Membership oracle for eq(L(A))

    The r(L) automaton is built once on construction; each query reduces
    the word and runs it.
    """

    def __init__(self, automaton: Automaton):
        self.automaton = automaton
        self.alphabet = automaton.alphabet
        self.reduced = reduced_language_dfa(automaton)

    def contains(self, word: Iterable[Symbol]) -> bool:
        word = self.alphabet.validate_word(word)
        return accepts(self.reduced, reduce(word))

    __contains__ = contains


def eq_membership(word: Iterable[Symbol], automaton: Automaton) -> bool:
    """True iff r(w) ∈ r(L(A)), i.e. w ∈ eq(L(A))"""
    return EquivalenceLanguage(automaton).contains(word)


def one_sided_dyck(word: Iterable[Symbol]) -> bool:
    """
    Classical parenthesis balance over {1, 1⁻¹} with 1 as the opener

    Every prefix has at least as many 1 as 1⁻¹, and the totals agree.
    """
    depth = 0
    for symbol in word:
        if symbol == 1:
            depth += 1
        elif symbol == -1:
            depth -= 1
            if depth < 0:
                return False
        else:
            raise InvalidParameterError(f"one-sided balance is defined over {{1, 1⁻¹}}, got {symbol}")
    return depth == 0


class NerodeSeparation(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: int
    right: int
    suffix: str


class EqDemoReport(BaseModel):
    """Result of ``eq_nonregular_demo``"""

    model_config = ConfigDict(frozen=True)

    max_len: int
    members: List[str]
    census: List[Dict[str, Any]]
    matches_reducible: bool
    two_sided_only: List[str]
    separations: List[NerodeSeparation]

    def census_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.census)

    def to_text(self) -> str:
        lines = [
            f"eq({{e}}) over {{1, 1^-1}} up to length {self.max_len}",
            f"members: {len(self.members)}",
            f"members are exactly the reducible words: {'yes' if self.matches_reducible else 'no'}",
            "",
            self.census_frame().to_string(index=False),
            "",
            f"members that are not one-sided balanced: {len(self.two_sided_only)}",
        ]
        lines.extend(f"  {word}" for word in self.two_sided_only[:10])
        if len(self.two_sided_only) > 10:
            lines.append(f"  ... {len(self.two_sided_only) - 10} more")
        lines.append("")
        lines.append(f"pairwise separated prefixes 1^i (i <= {self.max_len // 2}): "
                     f"{len(self.separations)} pairs")
        lines.extend(
            f"  1^{s.left} / 1^{s.right} separated by {s.suffix}" for s in self.separations[:10]
        )
        return "\n".join(lines)


def eq_nonregular_demo(max_len: int) -> EqDemoReport:
    """
    Enumerate eq({ε}) over {1, 1⁻¹} up to ``max_len`` and report on it

    Members are computed with the eq membership oracle and compared with
    the reducible words. Prefixes 1^i and 1^j (i < j ≤ max_len/2) are
    shown pairwise inequivalent by the suffix 1^(−i), bounded evidence that
    the language has unboundedly many residuals.
    """
    if max_len < 0:
        raise InvalidParameterError(f"max_len must be nonnegative, got {max_len}")
    alphabet = InverseAlphabet(1)
    language = EquivalenceLanguage(single_word(alphabet, ()))

    members: List[Word] = []
    rows = []
    by_length: Dict[int, List[Word]] = {}
    for word in enumerate_language(universal_language(alphabet), max_len):
        by_length.setdefault(len(word), []).append(word)
    matches = True
    for length in range(max_len + 1):
        words = by_length.get(length, [])
        inside = [w for w in words if w in language]
        members.extend(inside)
        reducible = [w for w in words if not reduce(w)]
        matches = matches and inside == reducible
        rows.append({
            'length': length,
            'words': len(words),
            'members': len(inside),
            'reducible': len(reducible),
            'one_sided_balanced': sum(1 for w in inside if one_sided_dyck(w)),
        })

    separations = []
    half = max_len // 2
    for i in range(half + 1):
        suffix = (-1,) * i
        for j in range(i + 1, half + 1):
            left_in = ((1,) * i + suffix) in language
            right_in = ((1,) * j + suffix) in language
            if left_in != right_in:
                separations.append(NerodeSeparation(left=i, right=j, suffix=format_word(suffix)))

    report = EqDemoReport(
        max_len=max_len,
        members=[format_word(w) for w in members],
        census=rows,
        matches_reducible=matches,
        two_sided_only=[format_word(w) for w in members if not one_sided_dyck(w)],
        separations=separations,
    )
    logger.info(f"eq demo up to length {max_len}: {len(members)} members")
    return report
