"""
Shortest Reducible Words
========================

For every ordered pair of states (p, q), d(p, q) is the length of the
shortest word z with r(z) = ε that drives p to q. The distances satisfy

    d(p, q) = 0                   if q is in the ε-closure of p
    d(p, q) <= d(s, t) + 2        if s ∈ δ(p, a) and q ∈ δ(t, a⁻¹)   (wrap)
    d(p, q) <= d(p, r) + d(r, q)                                     (concat)

and they are the least solution. All rule costs are nonnegative and
monotone, so pairs can be settled in nondecreasing order with a priority
queue (Knuth's generalisation of Dijkstra to hypergraphs). Each settled pair
remembers the rule that produced it; witnesses are rebuilt from those
rules, which may describe words far longer than could be listed.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from automata.automaton import Nfa, StatePair, as_nfa
from automata.closure import wrap_rules
from automata.errors import InvalidParameterError
from automata.words import Symbol, Word, symbol_key

logger = logging.getLogger(__name__)

INFINITY = math.inf

Distance = Union[int, float]
Rule = Union[Tuple[str], Tuple[str, Symbol, int, int], Tuple[str, int]]


def _rank(rule: Optional[Rule]) -> tuple:
    if rule is None:
        return (3,)
    if rule[0] == "eps":
        return (0,)
    if rule[0] == "wrap":
        return (1, symbol_key(rule[1]), rule[2], rule[3])
    return (2, rule[1])


@dataclass(frozen=True)
class PairDistanceTable:
    """Shortest reducible connector lengths between all pairs of states"""

    automaton: Nfa
    d: Tuple[Tuple[Distance, ...], ...]
    parents: Tuple[Tuple[Optional[Rule], ...], ...]

    @property
    def state_count(self) -> int:
        return len(self.d)

    def is_finite(self, p: int, q: int) -> bool:
        return self.d[p][q] < INFINITY

    def finite_pairs(self, include_reflexive: bool = False) -> FrozenSet[StatePair]:
        n = self.state_count
        return frozenset(
            (p, q) for p in range(n) for q in range(n)
            if self.is_finite(p, q) and (include_reflexive or p != q)
        )

    def witness(self, p: int, q: int, cap: Optional[int] = None) -> Optional[Word]:
        """
        The reducible word recorded for (p, q)

        Returns None when no connector exists or its length exceeds ``cap``.
        """
        length = self.d[p][q]
        if length == INFINITY or (cap is not None and length > cap):
            return None
        symbols: List[Symbol] = []
        stack: List[tuple] = [("pair", p, q)]
        while stack:
            item = stack.pop()
            if item[0] == "sym":
                symbols.append(item[1])
                continue
            _, x, y = item
            rule = self.parents[x][y]
            if rule[0] == "wrap":
                _, a, s, t = rule
                stack.extend((("sym", -a), ("pair", s, t), ("sym", a)))
            elif rule[0] == "concat":
                r = rule[1]
                stack.extend((("pair", r, y), ("pair", x, r)))
        return tuple(symbols)

    def derivation(self, p: int, q: int) -> List[str]:
        """
        The derivation DAG of (p, q), one line per distinct pair, operands first

        Its size is at most the number of pairs even when the witness word is
        exponentially long.
        """
        if not self.is_finite(p, q):
            return []
        name = self.automaton.state_name
        order: List[StatePair] = []
        seen = set()
        stack = [((p, q), False)]
        while stack:
            pair, expanded = stack.pop()
            if expanded:
                order.append(pair)
                continue
            if pair in seen:
                continue
            seen.add(pair)
            stack.append((pair, True))
            rule = self.parents[pair[0]][pair[1]]
            if rule[0] == "wrap":
                stack.append(((rule[2], rule[3]), False))
            elif rule[0] == "concat":
                stack.append(((rule[1], pair[1]), False))
                stack.append(((pair[0], rule[1]), False))

        lines = []
        for x, y in order:
            rule = self.parents[x][y]
            head = f"({name(x)},{name(y)}) [{self.d[x][y]}]"
            if rule[0] == "eps":
                lines.append(f"{head} = ε")
            elif rule[0] == "wrap":
                _, a, s, t = rule
                lines.append(f"{head} = {a} ({name(s)},{name(t)}) {-a}")
            else:
                r = rule[1]
                lines.append(f"{head} = ({name(x)},{name(r)}) ({name(r)},{name(y)})")
        return lines


@dataclass(frozen=True)
class ShortestReducible:
    """Answer of ``shortest_reducible_word``"""

    length: int
    final_state: int
    word: Optional[Word]
    derivation: Optional[List[str]]


def reducible_pair_distances(automaton) -> PairDistanceTable:
    """
    Compute d(p, q) for all pairs by settling pairs in nondecreasing distance

    A settled pair fires the wrap rules whose premise it is and combines
    with every already-settled pair it can be concatenated with, on either
    side. Ties between equal-length candidates go to the lower-ranked rule:
    ε first, then wrap by symbol order, then concatenation by split state.
    """
    nfa = as_nfa(automaton)
    n = nfa.state_count
    best: List[List[Distance]] = [[INFINITY] * n for _ in range(n)]
    parent: List[List[Optional[Rule]]] = [[None] * n for _ in range(n)]
    settled = [[False] * n for _ in range(n)]
    heap: List[Tuple[int, int, int]] = []

    def offer(p: int, q: int, value: int, rule: Rule):
        if settled[p][q]:
            return
        current = best[p][q]
        if value < current or (value == current and _rank(rule) < _rank(parent[p][q])):
            best[p][q] = value
            parent[p][q] = rule
            heapq.heappush(heap, (value, p, q))

    for p in range(n):
        for q in nfa.epsilon_closure([p]):
            offer(p, q, 0, ("eps",))

    by_premise: Dict[StatePair, List[Tuple[int, int, int]]] = {}
    opening: Dict[int, List[StatePair]] = {}
    for p, a, s in nfa.symbol_transitions():
        opening.setdefault(a, []).append((p, s))
    for a, edges in opening.items():
        for p, s in edges:
            for t, q in opening.get(-a, []):
                by_premise.setdefault((s, t), []).append((p, q, a))

    settled_from: List[List[int]] = [[] for _ in range(n)]
    settled_into: List[List[int]] = [[] for _ in range(n)]
    while heap:
        value, x, y = heapq.heappop(heap)
        if settled[x][y] or value != best[x][y]:
            continue
        settled[x][y] = True
        settled_from[x].append(y)
        settled_into[y].append(x)

        for p, q, a in by_premise.get((x, y), ()):
            offer(p, q, value + 2, ("wrap", a, x, y))
        if x == y:
            continue
        for z in settled_from[y]:
            if z != y:
                offer(x, z, value + best[y][z], ("concat", y))
        for w in settled_into[x]:
            if w != x:
                offer(w, y, best[w][x] + value, ("concat", x))

    table = PairDistanceTable(
        automaton=nfa,
        d=tuple(tuple(row) for row in best),
        parents=tuple(tuple(row) for row in parent),
    )
    logger.info(f"Pair distances for {n} states: {len(table.finite_pairs())} connected pairs")
    return table


def shortest_reducible_word(automaton, witness: bool = True,
                            cap: Optional[int] = None) -> Optional[ShortestReducible]:
    """
    The shortest accepted word that reduces to ε

    The length is min d(q₀, f) over accepting f (least f on ties). With
    ``witness`` set, the word is materialised when its length is at most
    ``cap``; longer answers carry the derivation DAG instead. Without a cap
    the word is always written out.
    """
    nfa = as_nfa(automaton)
    if cap is not None and cap < 0:
        raise InvalidParameterError(f"witness cap must be nonnegative, got {cap}")
    table = reducible_pair_distances(nfa)
    row = table.d[nfa.initial]
    candidates = sorted((row[f], f) for f in nfa.accepting if row[f] < INFINITY)
    if not candidates:
        logger.info("No reducible word is accepted")
        return None
    length, final_state = candidates[0]
    word = None
    derivation = None
    if witness:
        word = table.witness(nfa.initial, final_state, cap)
        if word is None:
            derivation = table.derivation(nfa.initial, final_state)
    logger.info(f"Shortest reducible word has length {length}")
    return ShortestReducible(length=int(length), final_state=final_state,
                             word=word, derivation=derivation)


def reducible_pair_levels(automaton, max_len: int) -> Dict[int, FrozenSet[StatePair]]:
    """
    The sets C_m of pairs joined by a reducible word of length exactly m

    Computed level by level from C_0 (the ε-connected pairs): C_m is the
    union of the wrap extensions of C_{m−2} and the concatenations of C_{m'}
    and C_{m''} with m', m'' > 0 and m' + m'' = m, closed under ε on both
    sides. Exponential in the answer length, so only for small inputs.
    """
    if max_len < 0:
        raise InvalidParameterError(f"max_len must be nonnegative, got {max_len}")
    nfa = as_nfa(automaton)
    n = nfa.state_count
    base = frozenset((p, q) for p in range(n) for q in nfa.epsilon_closure([p]))
    rules = wrap_rules(nfa)

    def close(pairs: set) -> FrozenSet[StatePair]:
        return frozenset(
            (x, w) for (x0, y0) in pairs
            for (x, x1) in base if x1 == x0
            for (y1, w) in base if y1 == y0
        )

    levels: Dict[int, FrozenSet[StatePair]] = {0: base}
    for m in range(1, max_len + 1):
        if m % 2:
            levels[m] = frozenset()
            continue
        previous = levels[m - 2]
        current = {(p, q) for p, q, s, t in rules if (s, t) in previous}
        for first in range(2, m - 1, 2):
            left, right = levels[first], levels[m - first]
            current |= {(x, z) for (x, y) in left for (y2, z) in right if y == y2}
        levels[m] = close(current)
    return levels


def balance(word) -> int:
    """b(w) = |w|₁ − |w|₁⁻¹ for a word over {1, 1⁻¹}"""
    total = 0
    for symbol in word:
        if symbol == 1:
            total += 1
        elif symbol == -1:
            total -= 1
        else:
            raise InvalidParameterError(f"balance is defined over {{1, 1⁻¹}} only, got symbol {symbol}")
    return total


def parse_tree_length_bound(state_count: int) -> int:
    """2^(n²−n): no shorter reducible word need exist in an n-state NFA"""
    return 2 ** (state_count * state_count - state_count)


def unary_length_bound(state_count: int) -> int:
    """n(2n²+1): the ceiling for NFAs over {1, 1⁻¹}"""
    return state_count * (2 * state_count * state_count + 1)
