"""
Automaton Import and Export
===========================

The text format is line oriented::

    alphabet 2
    states 3
    initial 0
    accepting 2
    trans 0 1 1
    trans 1 -1 2
    trans 0 e 2

``e`` labels an ε-transition. Blank lines and ``#`` comments are ignored,
except ``# state i: name`` lines, which carry state names.
DFAs are written through their dead-state-free NFA view, so reading a file
back always yields an ``Nfa``.

DOT export draws accepting states as double circles and leaves the dead
state out. JSON export wraps the automaton with an ``export_info`` block.
"""

import json
import logging
import re
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Union

from automata.automaton import EPSILON, Automaton, Dfa, Nfa, as_nfa
from automata.errors import AutomatonFormatError, InvalidAutomatonError, InvalidParameterError
from automata.words import InverseAlphabet, symbol_key
from config import Config

logger = logging.getLogger(__name__)

SUPERSCRIPT_MINUS_ONE = "⁻¹"
STATE_NAME_LINE = re.compile(r"#\s*state\s+(-?\d+)\s*:\s*(.*?)\s*$")


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


class AutomatonExporter:
    """
    Reads and writes automata in the toolkit's text, DOT and JSON formats
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.epsilon_token = self.config.EPSILON_TOKEN

    # ------------------------------------------------------------------
    # text format
    # ------------------------------------------------------------------

    def to_text(self, automaton: Automaton) -> str:
        nfa = as_nfa(automaton)
        lines = [
            f"alphabet {nfa.alphabet.k}",
            f"states {nfa.state_count}",
            f"initial {nfa.initial}",
            " ".join(["accepting"] + [str(s) for s in sorted(nfa.accepting)]),
        ]
        if nfa.labels is not None:
            lines.extend(f"# state {i}: {name}" for i, name in enumerate(nfa.labels))
        for p, label, q in self._ordered_transitions(nfa):
            token = self.epsilon_token if label == EPSILON else str(label)
            lines.append(f"trans {p} {token} {q}")
        return "\n".join(lines) + "\n"

    def parse_text(self, text: str) -> Nfa:
        """Parse the text format; any malformed line raises ``AutomatonFormatError``"""
        header: Dict[str, Any] = {}
        accepting: List[int] = []
        transitions = set()
        names: Dict[int, str] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            named = STATE_NAME_LINE.match(raw.strip())
            if named and named.group(2):
                names[int(named.group(1))] = named.group(2)
                continue
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            keyword, *fields = line.split()
            try:
                if keyword in ("alphabet", "states", "initial"):
                    if len(fields) != 1:
                        raise AutomatonFormatError(f"'{keyword}' takes exactly one integer")
                    if keyword in header:
                        raise AutomatonFormatError(f"'{keyword}' given twice")
                    header[keyword] = int(fields[0])
                elif keyword == "accepting":
                    accepting.extend(int(f) for f in fields)
                elif keyword == "trans":
                    if len(fields) != 3:
                        raise AutomatonFormatError("'trans' takes 'p SYM q'")
                    p, token, q = fields
                    label = EPSILON if token == self.epsilon_token else int(token)
                    if token != self.epsilon_token and label == 0:
                        raise AutomatonFormatError("0 is not a symbol; use 'e' for ε")
                    transitions.add((int(p), label, int(q)))
                else:
                    raise AutomatonFormatError(f"unknown keyword {keyword!r}")
            except ValueError as e:
                if isinstance(e, AutomatonFormatError):
                    raise AutomatonFormatError(f"line {number}: {e}") from e
                raise AutomatonFormatError(f"line {number}: {line!r} has a non-integer field") from e

        missing = [key for key in ("alphabet", "states", "initial") if key not in header]
        if missing:
            raise AutomatonFormatError(f"missing header line(s): {', '.join(missing)}")
        outside = sorted(i for i in names if not 0 <= i < header["states"])
        if outside:
            raise AutomatonFormatError(f"state name given for unknown state {outside[0]}")
        labels = None
        if names:
            labels = tuple(names.get(i, f"s{i}") for i in range(header["states"]))
        try:
            alphabet = InverseAlphabet(header["alphabet"])
            nfa = Nfa(header["states"], alphabet, frozenset(transitions),
                      header["initial"], frozenset(accepting), labels)
        except (InvalidAutomatonError, InvalidParameterError) as e:
            raise AutomatonFormatError(str(e)) from e
        logger.info(f"Parsed automaton: {nfa.state_count} states, {len(nfa.transitions)} transitions")
        return nfa

    def read_file(self, path: Union[str, Path]) -> Nfa:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise AutomatonFormatError(f"cannot read automaton file {path}: {e.strerror}") from e
        return self.parse_text(text)

    def write_file(self, automaton: Automaton, path: Union[str, Path], fmt: str = "text") -> str:
        """Write ``automaton`` to ``path`` in one of the supported formats"""
        if not self.config.is_export_format_supported(fmt):
            raise InvalidParameterError(f"unsupported export format {fmt!r}")
        try:
            renderers = {"text": self.to_text, "dot": self.to_dot, "json": self.to_json}
            Path(path).write_text(renderers[fmt.lower()](automaton), encoding='utf-8')
            logger.info(f"Automaton export created: {path}")
            return str(path)
        except OSError as e:
            logger.error(f"Failed to write automaton export: {str(e)}")
            raise

    # ------------------------------------------------------------------
    # DOT
    # ------------------------------------------------------------------

    def symbol_label(self, label: int) -> str:
        if label == EPSILON:
            return "ε"
        if label < 0:
            return f"{-label}{SUPERSCRIPT_MINUS_ONE}"
        return str(label)

    def graphviz(self, automaton: Automaton, name: str = "automaton") -> Iterator[str]:
        """
        Produce a graphviz dot file as an iterable of lines

        Parallel edges are merged into one edge with a comma-separated label.
        """
        nfa = as_nfa(automaton)
        yield f"digraph {_gvquote(name)} {{\n"
        yield f"  rankdir={self.config.DOT_RANKDIR};\n"
        yield f'  node [fontname={_gvquote(self.config.DOT_FONT)}];\n'
        yield '  __start [shape=point, label=""];\n'
        for state in range(nfa.state_count):
            shape = "doublecircle" if state in nfa.accepting else "circle"
            yield f"  {state} [shape={shape}, label={_gvquote(nfa.state_name(state))}];\n"
        yield f"  __start -> {nfa.initial};\n"
        grouped: Dict[tuple, List[int]] = {}
        for p, label, q in self._ordered_transitions(nfa):
            grouped.setdefault((p, q), []).append(label)
        for (p, q), labels in sorted(grouped.items()):
            text = ", ".join(self.symbol_label(label) for label in labels)
            yield f"  {p} -> {q} [label={_gvquote(text)}];\n"
        yield "}\n"

    def to_dot(self, automaton: Automaton, name: str = "automaton") -> str:
        return "".join(self.graphviz(automaton, name))

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------

    def to_payload(self, automaton: Automaton) -> Dict[str, Any]:
        nfa = as_nfa(automaton)
        return {
            'alphabet': nfa.alphabet.k,
            'states': nfa.state_count,
            'initial': nfa.initial,
            'accepting': sorted(nfa.accepting),
            'labels': list(nfa.labels) if nfa.labels is not None else None,
            'transitions': [
                [p, self.epsilon_token if label == EPSILON else label, q]
                for p, label, q in self._ordered_transitions(nfa)
            ],
        }

    def to_json(self, automaton: Automaton, include_timestamp: bool = True,
                extra: Optional[Dict[str, Any]] = None) -> str:
        """JSON with an ``export_info`` metadata block; ``extra`` keys sit beside the automaton"""
        export_info = {
            'generator': f"{self.config.APP_NAME} v{self.config.APP_VERSION}",
            'format_version': self.config.EXPORT_FORMAT_VERSION,
            'kind': 'dfa' if isinstance(automaton, Dfa) else 'nfa',
        }
        if include_timestamp:
            export_info['generated_at'] = datetime.now().isoformat()
        export_data = {'export_info': export_info, 'automaton': self.to_payload(automaton)}
        export_data.update(extra or {})
        return json.dumps(export_data, indent=2, ensure_ascii=False)

    @staticmethod
    def _ordered_transitions(nfa: Nfa):
        return sorted(nfa.transitions, key=lambda t: (t[0], t[1] != EPSILON, symbol_key(t[1]), t[2]))
