"""
Finite Automata over Inverse Alphabets
======================================

Two representations:

- ``Nfa``: an ε-NFA. Transitions are triples ``(p, label, q)`` where the
  label is a symbol of the alphabet or ``EPSILON`` (0, never a symbol).
- ``Dfa``: a complete DFA stored as a transition table indexed by state and
  symbol column, usually with an explicit dead state.

States are dense integer ids ``0 .. state_count - 1``; constructions append
fresh states after existing ones. Both classes are immutable once built.

The module also provides the standard constructions the rest of the
toolkit is built from: subset construction, product, reversal, language
inversion, concatenation, equivalence, bounded enumeration and shortest
accepted word.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import (
    Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union,
)

from automata.errors import AlphabetMismatchError, InvalidAutomatonError
from automata.words import InverseAlphabet, Symbol, Word

logger = logging.getLogger(__name__)

EPSILON = 0

Transition = Tuple[int, int, int]
StatePair = Tuple[int, int]


@dataclass(frozen=True)
class Nfa:
    """An ε-NFA (Q, Σ, δ, q₀, F) over an inverse alphabet"""

    state_count: int
    alphabet: InverseAlphabet
    transitions: FrozenSet[Transition]
    initial: int
    accepting: FrozenSet[int]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        self._validate()

    def _validate(self):
        n = self.state_count
        if n < 1:
            raise InvalidAutomatonError(f"an automaton needs at least one state, got {n}")
        if not 0 <= self.initial < n:
            raise InvalidAutomatonError(f"initial state {self.initial} is not below state count {n}")
        for state in self.accepting:
            if not 0 <= state < n:
                raise InvalidAutomatonError(f"accepting state {state} is not below state count {n}")
        for p, label, q in self.transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise InvalidAutomatonError(f"transition ({p}, {label}, {q}) uses a state id >= {n}")
            if label != EPSILON and label not in self.alphabet:
                raise InvalidAutomatonError(
                    f"transition ({p}, {label}, {q}) is labelled outside the alphabet k={self.alphabet.k}"
                )
        if self.labels is not None and len(self.labels) != n:
            raise InvalidAutomatonError(f"{len(self.labels)} state labels given for {n} states")

    @cached_property
    def _successor_index(self) -> Dict[Tuple[int, int], FrozenSet[int]]:
        index: Dict[Tuple[int, int], set] = {}
        for p, label, q in self.transitions:
            index.setdefault((p, label), set()).add(q)
        return {key: frozenset(targets) for key, targets in index.items()}

    @cached_property
    def _closures(self) -> Tuple[FrozenSet[int], ...]:
        closures = []
        for state in range(self.state_count):
            closure = {state}
            stack = [state]
            while stack:
                current = stack.pop()
                for nxt in self.successors(current, EPSILON):
                    if nxt not in closure:
                        closure.add(nxt)
                        stack.append(nxt)
            closures.append(frozenset(closure))
        return tuple(closures)

    def successors(self, state: int, label: int) -> FrozenSet[int]:
        return self._successor_index.get((state, label), frozenset())

    def epsilon_closure(self, states: Iterable[int]) -> FrozenSet[int]:
        result: set = set()
        for state in states:
            result |= self._closures[state]
        return frozenset(result)

    def start_set(self) -> FrozenSet[int]:
        return self._closures[self.initial]

    def step(self, states: Iterable[int], symbol: Symbol) -> FrozenSet[int]:
        """ε-closure of the symbol successors of ``states``"""
        targets: set = set()
        for state in states:
            targets |= self.successors(state, symbol)
        return self.epsilon_closure(targets)

    def symbol_transitions(self) -> Iterator[Transition]:
        return (t for t in self.transitions if t[1] != EPSILON)

    def epsilon_transitions(self) -> Iterator[Transition]:
        return (t for t in self.transitions if t[1] == EPSILON)

    def with_epsilon_edges(self, pairs: Iterable[StatePair]) -> "Nfa":
        """A copy with an ε-transition added for every (p, q) in ``pairs``"""
        extra = {(p, EPSILON, q) for p, q in pairs if p != q}
        return Nfa(self.state_count, self.alphabet, self.transitions | extra,
                   self.initial, self.accepting, self.labels)

    def state_name(self, state: int) -> str:
        if self.labels is not None:
            return self.labels[state]
        return f"s{state}"

    def state_id(self, name: str) -> int:
        """Inverse of ``state_name`` for labelled automata"""
        if self.labels is None or name not in self.labels:
            raise InvalidAutomatonError(f"no state labelled {name!r}")
        return self.labels.index(name)

    def accepts(self, word: Iterable[Symbol]) -> bool:
        return accepts(self, word)


@dataclass(frozen=True)
class Dfa:
    """A complete DFA; ``table[state][alphabet.index(symbol)]`` is the successor"""

    state_count: int
    alphabet: InverseAlphabet
    table: Tuple[Tuple[int, ...], ...]
    initial: int
    accepting: FrozenSet[int]
    dead: Optional[int] = None
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        self._validate()

    def _validate(self):
        n = self.state_count
        width = self.alphabet.size
        if n < 1:
            raise InvalidAutomatonError(f"an automaton needs at least one state, got {n}")
        if len(self.table) != n:
            raise InvalidAutomatonError(f"transition table has {len(self.table)} rows for {n} states")
        for state, row in enumerate(self.table):
            if len(row) != width:
                raise InvalidAutomatonError(f"row {state} has {len(row)} entries, expected {width}")
            if any(not 0 <= target < n for target in row):
                raise InvalidAutomatonError(f"row {state} points outside the state range")
        if not 0 <= self.initial < n:
            raise InvalidAutomatonError(f"initial state {self.initial} is not below state count {n}")
        if any(not 0 <= state < n for state in self.accepting):
            raise InvalidAutomatonError("accepting state id out of range")
        if self.dead is not None:
            if not 0 <= self.dead < n:
                raise InvalidAutomatonError(f"dead state {self.dead} is out of range")
            if self.dead in self.accepting:
                raise InvalidAutomatonError("the dead state must not be accepting")
            if any(target != self.dead for target in self.table[self.dead]):
                raise InvalidAutomatonError("the dead state must map every symbol to itself")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidAutomatonError(f"{len(self.labels)} state labels given for {n} states")

    @classmethod
    def from_transitions(
        cls,
        live_count: int,
        alphabet: InverseAlphabet,
        transitions: Mapping[Tuple[int, Symbol], int],
        initial: int,
        accepting: Iterable[int],
        labels: Optional[Sequence[str]] = None,
        dead_label: str = "q-1",
    ) -> "Dfa":
        """
        Build a complete DFA from a partial transition map

        States ``0 .. live_count - 1`` are the given ones; a dead state is
        appended as id ``live_count`` and receives every missing transition.
        """
        dead = live_count
        rows = [[dead] * alphabet.size for _ in range(live_count + 1)]
        for (state, symbol), target in transitions.items():
            if not (0 <= state < live_count and 0 <= target < live_count):
                raise InvalidAutomatonError(f"transition ({state}, {symbol}) -> {target} is out of range")
            rows[state][alphabet.index(symbol)] = target
        full_labels = None
        if labels is not None:
            full_labels = tuple(labels) + (dead_label,)
        return cls(live_count + 1, alphabet, tuple(tuple(r) for r in rows),
                   initial, frozenset(accepting), dead, full_labels)

    @property
    def live_count(self) -> int:
        return self.state_count - (0 if self.dead is None else 1)

    def next_state(self, state: int, symbol: Symbol) -> int:
        return self.table[state][self.alphabet.index(symbol)]

    def run(self, word: Iterable[Symbol]) -> int:
        state = self.initial
        for symbol in word:
            state = self.next_state(state, symbol)
        return state

    def state_name(self, state: int) -> str:
        if self.labels is not None:
            return self.labels[state]
        return f"s{state}"

    def state_id(self, name: str) -> int:
        if self.labels is None or name not in self.labels:
            raise InvalidAutomatonError(f"no state labelled {name!r}")
        return self.labels.index(name)

    def accepts(self, word: Iterable[Symbol]) -> bool:
        return accepts(self, word)

    def to_nfa(self) -> Nfa:
        """
        The same language as an ε-free NFA without the dead state

        Live states keep their relative order, so when the dead state is the
        last id (as every constructor here arranges) live ids are unchanged.
        """
        if self.dead is not None and self.initial == self.dead:
            return Nfa(1, self.alphabet, frozenset(), 0, frozenset(),
                       None if self.labels is None else (self.labels[self.dead],))
        keep = [s for s in range(self.state_count) if s != self.dead]
        renumber = {old: new for new, old in enumerate(keep)}
        symbols = self.alphabet.symbols
        transitions = set()
        for old in keep:
            for column, target in enumerate(self.table[old]):
                if target != self.dead:
                    transitions.add((renumber[old], symbols[column], renumber[target]))
        labels = None if self.labels is None else tuple(self.labels[s] for s in keep)
        return Nfa(len(keep), self.alphabet, frozenset(transitions), renumber[self.initial],
                   frozenset(renumber[s] for s in self.accepting), labels)


Automaton = Union[Nfa, Dfa]


class _DisjointSets:
    """Union-find with path compression over ``size`` integer ids"""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, first: int, second: int) -> bool:
        a, b = self.find(first), self.find(second)
        if a == b:
            return False
        if a < b:
            self.parent[b] = a
        else:
            self.parent[a] = b
        return True


class _DfaRunner:
    def __init__(self, dfa: Dfa):
        self.dfa = dfa

    @property
    def start(self):
        return None if self.dfa.initial == self.dfa.dead else self.dfa.initial

    def advance(self, state, symbol):
        target = self.dfa.next_state(state, symbol)
        return None if target == self.dfa.dead else target

    def accepting(self, state) -> bool:
        return state in self.dfa.accepting


class _NfaRunner:
    def __init__(self, nfa: Nfa):
        self.nfa = nfa

    @property
    def start(self):
        return self.nfa.start_set()

    def advance(self, state, symbol):
        target = self.nfa.step(state, symbol)
        return target or None

    def accepting(self, state) -> bool:
        return not state.isdisjoint(self.nfa.accepting)


def _runner(automaton: Automaton):
    if isinstance(automaton, Dfa):
        return _DfaRunner(automaton)
    return _NfaRunner(automaton)


def _require_same_alphabet(first: Automaton, second: Automaton, operation: str):
    if first.alphabet != second.alphabet:
        raise AlphabetMismatchError(
            f"{operation} needs a common alphabet, got k={first.alphabet.k} and k={second.alphabet.k}"
        )


def accepts(automaton: Automaton, word: Iterable[Symbol]) -> bool:
    """Membership test; symbols outside the alphabet raise ``RejectedInputError``"""
    word = automaton.alphabet.validate_word(word)
    runner = _runner(automaton)
    state = runner.start
    for symbol in word:
        if state is None:
            return False
        state = runner.advance(state, symbol)
    return state is not None and runner.accepting(state)


def as_nfa(automaton: Automaton) -> Nfa:
    return automaton.to_nfa() if isinstance(automaton, Dfa) else automaton


def as_dfa(automaton: Automaton) -> Dfa:
    return automaton if isinstance(automaton, Dfa) else determinize(automaton)


def determinize(automaton: Automaton) -> Dfa:
    """
    Subset construction

    Only subsets reachable from the initial ε-closure are built. The empty
    subset is the dead state; it is added even when unreachable so the
    result always has one.
    """
    nfa = as_nfa(automaton)
    symbols = nfa.alphabet.symbols
    start = nfa.start_set()
    subsets: List[FrozenSet[int]] = [start]
    index: Dict[FrozenSet[int], int] = {start: 0}
    rows: List[Tuple[int, ...]] = []

    # iterate over a growing list
    i = 0
    while i < len(subsets):
        current = subsets[i]
        row = []
        for symbol in symbols:
            target = nfa.step(current, symbol)
            j = index.get(target)
            if j is None:
                j = len(subsets)
                index[target] = j
                subsets.append(target)
            row.append(j)
        rows.append(tuple(row))
        i += 1

    empty: FrozenSet[int] = frozenset()
    if empty not in index:
        index[empty] = len(subsets)
        subsets.append(empty)
        rows.append(tuple([index[empty]] * len(symbols)))

    accepting = frozenset(i for i, subset in enumerate(subsets) if subset & nfa.accepting)
    logger.info(f"Subset construction: {nfa.state_count} NFA states -> {len(subsets)} DFA states")
    return Dfa(len(subsets), nfa.alphabet, tuple(rows), 0, accepting, index[empty])


def product_intersection(first: Automaton, second: Automaton) -> Dfa:
    """
    Cross-product DFA for L(first) ∩ L(second)

    Only reachable pairs are built, and every pair with a dead component is
    merged into one dead state, so the result has at most |A|·|B| states.
    """
    _require_same_alphabet(first, second, "intersection")
    a, b = as_dfa(first), as_dfa(second)
    symbols = a.alphabet.symbols
    dead_key = None

    def key_of(pair: StatePair):
        if pair[0] == a.dead or pair[1] == b.dead:
            return dead_key
        return pair

    start = key_of((a.initial, b.initial))
    states: List[Optional[StatePair]] = [start]
    index: Dict[Optional[StatePair], int] = {start: 0}
    rows: List[Tuple[int, ...]] = []
    i = 0
    while i < len(states):
        current = states[i]
        row = []
        for symbol in symbols:
            if current is dead_key:
                target = dead_key
            else:
                target = key_of((a.next_state(current[0], symbol), b.next_state(current[1], symbol)))
            j = index.get(target)
            if j is None:
                j = len(states)
                index[target] = j
                states.append(target)
            row.append(j)
        rows.append(tuple(row))
        i += 1

    if dead_key not in index:
        index[dead_key] = len(states)
        states.append(dead_key)
        rows.append(tuple([index[dead_key]] * len(symbols)))

    accepting = frozenset(
        i for i, pair in enumerate(states)
        if pair is not dead_key and pair[0] in a.accepting and pair[1] in b.accepting
    )
    logger.info(f"Product construction: {a.state_count} x {b.state_count} -> {len(states)} states")
    return Dfa(len(states), a.alphabet, tuple(rows), 0, accepting, index[dead_key])


def reverse(automaton: Automaton) -> Nfa:
    """
    An ε-NFA for the reversal of the language

    Every edge is flipped; a fresh initial state gets ε-edges to the old
    accepting states and the old initial state becomes the only accepting one.
    """
    nfa = as_nfa(automaton)
    fresh = nfa.state_count
    transitions = {(q, label, p) for p, label, q in nfa.transitions}
    transitions |= {(fresh, EPSILON, f) for f in nfa.accepting}
    labels = None if nfa.labels is None else nfa.labels + ("start",)
    return Nfa(fresh + 1, nfa.alphabet, frozenset(transitions), fresh,
               frozenset({nfa.initial}), labels)


def invert_language_automaton(automaton: Automaton) -> Nfa:
    """An ε-NFA for L⁻¹ = {w⁻¹ : w ∈ L}: reversal, then every symbol inverted"""
    reversed_nfa = reverse(automaton)
    transitions = frozenset((p, -label, q) for p, label, q in reversed_nfa.transitions)
    return Nfa(reversed_nfa.state_count, reversed_nfa.alphabet, transitions,
               reversed_nfa.initial, reversed_nfa.accepting, reversed_nfa.labels)


def concat(first: Automaton, second: Automaton) -> Nfa:
    """An ε-NFA for L(first)·L(second)"""
    _require_same_alphabet(first, second, "concatenation")
    a, b = as_nfa(first), as_nfa(second)
    offset = a.state_count
    transitions = set(a.transitions)
    transitions |= {(p + offset, label, q + offset) for p, label, q in b.transitions}
    transitions |= {(f, EPSILON, b.initial + offset) for f in a.accepting}
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(f"L.{name}" for name in a.labels) + tuple(f"R.{name}" for name in b.labels)
    return Nfa(a.state_count + b.state_count, a.alphabet, frozenset(transitions), a.initial,
               frozenset(f + offset for f in b.accepting), labels)


def is_equivalent(first: Automaton, second: Automaton) -> bool:
    """
    Language equality by the Hopcroft–Karp union-find procedure

    States of both DFAs live in one disjoint-set forest; merging the two
    initial states and propagating along every symbol either closes up
    consistently or meets a pair with different acceptance.
    """
    _require_same_alphabet(first, second, "equivalence")
    a, b = as_dfa(first), as_dfa(second)
    offset = a.state_count
    forest = _DisjointSets(a.state_count + b.state_count)
    forest.union(a.initial, b.initial + offset)
    stack = [(a.initial, b.initial)]
    while stack:
        p, q = stack.pop()
        if (p in a.accepting) != (q in b.accepting):
            return False
        for symbol in a.alphabet.symbols:
            p2, q2 = a.next_state(p, symbol), b.next_state(q, symbol)
            if forest.union(p2, q2 + offset):
                stack.append((p2, q2))
    return True


def find_distinguishing_word(first: Automaton, second: Automaton) -> Optional[Word]:
    """A shortest word accepted by exactly one of the two automata, if any"""
    _require_same_alphabet(first, second, "comparison")
    a, b = as_dfa(first), as_dfa(second)
    start = (a.initial, b.initial)
    parents: Dict[StatePair, Tuple[Optional[StatePair], Optional[Symbol]]] = {start: (None, None)}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.accepting) != (q in b.accepting):
            word: List[Symbol] = []
            while parents[pair][0] is not None:
                pair, symbol = parents[pair]
                word.append(symbol)
            return tuple(reversed(word))
        for symbol in a.alphabet.symbols:
            nxt = (a.next_state(p, symbol), b.next_state(q, symbol))
            if nxt not in parents:
                parents[nxt] = (pair, symbol)
                queue.append(nxt)
    return None


def enumerate_language(automaton: Automaton, max_len: int) -> List[Word]:
    """
    All accepted words of length <= max_len, in length-then-lexicographic order

    Words are grown level by level; extending an ordered level symbol by
    symbol in alphabet order keeps the next level ordered, and prefixes that
    cannot continue are dropped.
    """
    if max_len < 0:
        return []
    runner = _runner(automaton)
    symbols = automaton.alphabet.symbols
    result: List[Word] = []
    level = [((), runner.start)] if runner.start is not None else []
    for length in range(max_len + 1):
        result.extend(word for word, state in level if runner.accepting(state))
        if length == max_len:
            break
        next_level = []
        for word, state in level:
            for symbol in symbols:
                target = runner.advance(state, symbol)
                if target is not None:
                    next_level.append((word + (symbol,), target))
        level = next_level
    return result


def shortest_accepted(automaton: Automaton) -> Optional[Word]:
    """
    A shortest accepted word, least in symbol order among the shortest

    Breadth-first search over (lazily determinized) states; symbols are
    tried in alphabet order, so the first accepting state dequeued carries
    the least word.
    """
    runner = _runner(automaton)
    start = runner.start
    if start is None:
        return None
    parents = {start: (None, None)}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if runner.accepting(state):
            word: List[Symbol] = []
            while parents[state][0] is not None:
                state, symbol = parents[state]
                word.append(symbol)
            return tuple(reversed(word))
        for symbol in automaton.alphabet.symbols:
            target = runner.advance(state, symbol)
            if target is not None and target not in parents:
                parents[target] = (state, symbol)
                queue.append(target)
    return None


def empty_language(alphabet: InverseAlphabet) -> Dfa:
    """A complete DFA with no accepting state"""
    return Dfa(1, alphabet, ((0,) * alphabet.size,), 0, frozenset(), 0)


def universal_language(alphabet: InverseAlphabet) -> Dfa:
    """A complete DFA accepting Σ*"""
    return Dfa(1, alphabet, ((0,) * alphabet.size,), 0, frozenset({0}), None)


def single_word(alphabet: InverseAlphabet, word: Iterable[Symbol]) -> Nfa:
    """A path automaton accepting exactly ``word``"""
    word = alphabet.validate_word(word)
    transitions = frozenset((i, symbol, i + 1) for i, symbol in enumerate(word))
    return Nfa(len(word) + 1, alphabet, transitions, 0, frozenset({len(word)}))


def finite_language(alphabet: InverseAlphabet, words: Iterable[Iterable[Symbol]]) -> Nfa:
    """An ε-NFA accepting exactly the given finite set of words"""
    words = [alphabet.validate_word(w) for w in words]
    transitions = set()
    accepting = set()
    next_state = 1
    for word in words:
        previous = 0
        for symbol in word:
            transitions.add((previous, symbol, next_state))
            previous = next_state
            next_state += 1
        accepting.add(previous)
    return Nfa(next_state, alphabet, frozenset(transitions), 0, frozenset(accepting))
