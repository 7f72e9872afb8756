"""
Command-line front end for the Reduced Words Toolkit.

Usage examples::

    python app.py reduce 1 -1 2
    python app.py family lss2 4 --shortest
    python app.py --json shortest machine.txt
    python app.py rg --equations eqs.txt --cap 6 aabd

Every subcommand prints plain text by default and a JSON document with
``--json``. Exit status is 0 on success, 2 for malformed input or usage and
1 when well-formed input violates a precondition.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from automata.automaton import Automaton, enumerate_language
from automata.closure import (
    reduced_language_dfa, saturate_closure, saturate_closure_naive, state_complexity_bound,
)
from automata.errors import (
    AutomataError, EquationSyntaxError, InvalidParameterError, ParseError,
)
from automata.families import FamilyId, FamilyKind, lss1_witness, lss2_witness
from automata.language_algebra import eq_membership, eq_nonregular_demo, quotient
from automata.rewriting import EquationSystem, eq_class_bfs, rg, rg_counterexample_check
from automata.serialization import AutomatonExporter
from automata.shortest import (
    ShortestReducible, parse_tree_length_bound, shortest_reducible_word, unary_length_bound,
)
from automata.validators import InputValidator
from automata.words import format_word, reduce
from config import Config

logger = logging.getLogger(__name__)

Outcome = Tuple[str, Any]


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting on usage errors"""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}", self.format_usage())


class _UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


def configure_logging(config: Config, verbose: bool = False, log_file: Optional[str] = None):
    """Route log records to stderr (and optionally a file) once per invocation"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=config.VERBOSE_LOG_LEVEL if verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


class ReducedWordsApp:
    def __init__(self, config: Optional[Config] = None):
        """Wire the exporter and validator to one shared configuration"""
        self.config = config or Config()
        self.exporter = AutomatonExporter(self.config)
        self.validator = InputValidator(self.config)
        self.handlers: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
            'reduce': self.cmd_reduce,
            'closure': self.cmd_closure,
            'rlang': self.cmd_rlang,
            'quotient': self.cmd_quotient,
            'shortest': self.cmd_shortest,
            'family': self.cmd_family,
            'eq-member': self.cmd_eq_member,
            'eq-demo': self.cmd_eq_demo,
            'rg': self.cmd_rg,
            'rg-demo': self.cmd_rg_demo,
            'dot': self.cmd_dot,
        }

    # ------------------------------------------------------------------
    # parser
    # ------------------------------------------------------------------

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _ArgumentParser(prog=self.config.APP_NAME, description=self.config.APP_DESCRIPTION)
        parser.add_argument('--json', action='store_true', help='emit a JSON document')
        parser.add_argument('--verbose', action='store_true', help='log progress to stderr')
        parser.add_argument('--log-file', help='also write log records to this file')
        commands = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
        commands.required = True

        sub = commands.add_parser('reduce', help='reduced representation of a word')
        sub.add_argument('word', nargs='*', help="signed integers, e.g. '1 -1 2'; 'e' for ε")

        sub = commands.add_parser('closure', help='add ε-edges for every reducible connector')
        sub.add_argument('automaton')
        sub.add_argument('--naive', action='store_true', help='use the fixpoint oracle')
        sub.add_argument('--seed', type=int, help='shuffle the rule order')
        self._add_output_arguments(sub)

        sub = commands.add_parser('rlang', help='automaton for the reduced words of L')
        sub.add_argument('automaton')
        sub.add_argument('--states', action='store_true', help='report the DFA size and its bound')
        self._add_enumerate_argument(sub)
        self._add_output_arguments(sub)

        sub = commands.add_parser('quotient', help='right quotient L1/L2 of plain languages')
        sub.add_argument('dividend')
        sub.add_argument('divisor')
        self._add_enumerate_argument(sub)
        self._add_output_arguments(sub)

        sub = commands.add_parser('shortest', help='shortest accepted reducible word')
        sub.add_argument('automaton')
        sub.add_argument('--witness', action='store_true', help='also print the witness word')
        sub.add_argument('--cap', type=int, help='longest witness to write out')

        sub = commands.add_parser('family', help='lower-bound automaton families')
        sub.add_argument('kind', choices=[kind.value for kind in FamilyKind])
        sub.add_argument('n', type=int)
        view = sub.add_mutually_exclusive_group()
        view.add_argument('--dot', action='store_true')
        view.add_argument('--shortest', action='store_true')
        view.add_argument('--witness', action='store_true')
        sub.add_argument('--cap', type=int, help='longest witness to write out')

        sub = commands.add_parser('eq-member', help='membership in eq(L)')
        sub.add_argument('automaton')
        sub.add_argument('word', nargs='*')

        sub = commands.add_parser('eq-demo', help='eq({ε}) over one letter pair')
        sub.add_argument('--max-len', type=int, default=self.config.EQ_DEMO_LENGTH)

        sub = commands.add_parser('rg', help='generalized reduced representatives')
        sub.add_argument('word', help="lowercase letters, 'eps' for ε")
        sub.add_argument('--equations', required=True, help="file of 'u = v' lines")
        sub.add_argument('--cap', type=int, help='longest word explored (default: |word|)')
        sub.add_argument('--class', dest='show_class', action='store_true',
                         help='list the explored equivalence class')

        sub = commands.add_parser('rg-demo', help='r_g((abc)*) under commutation')
        sub.add_argument('--max-len', type=int, default=self.config.RG_DEMO_LENGTH)

        sub = commands.add_parser('dot', help='graphviz rendering of an automaton file')
        sub.add_argument('automaton')
        return parser

    def _add_enumerate_argument(self, sub: argparse.ArgumentParser):
        sub.add_argument('--enumerate', type=int, nargs='?', metavar='N',
                         const=self.config.DEFAULT_ENUMERATION_LENGTH,
                         help=f'list accepted words up to length N '
                              f'(default {self.config.DEFAULT_ENUMERATION_LENGTH})')

    def _add_output_arguments(self, sub: argparse.ArgumentParser):
        sub.add_argument('--output', '-o', help='write the automaton here instead of stdout')
        sub.add_argument('--format', default='text', choices=self.config.SUPPORTED_EXPORT_FORMATS)
        sub.add_argument('--dot', action='store_true', help='shorthand for --format dot')

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------

    def _word(self, tokens: List[str]):
        return self.validator.parse_word(" ".join(tokens))

    def _enumeration_bound(self, value: int) -> int:
        if not 0 <= value <= self.config.MAX_ENUMERATION_LENGTH:
            raise InvalidParameterError(
                f"--enumerate must lie in 0..{self.config.MAX_ENUMERATION_LENGTH}, got {value}"
            )
        return value

    def _emit_automaton(self, automaton: Automaton, args: argparse.Namespace,
                        extra: Optional[Dict[str, Any]] = None, notes: Sequence[str] = ()) -> Outcome:
        """
        Render ``automaton`` per the output flags

        ``notes`` are report lines printed ahead of the automaton, as comments
        when the automaton itself goes to stdout so the output still parses.
        """
        payload = {'automaton': self.exporter.to_payload(automaton)}
        payload.update(extra or {})
        if getattr(args, 'enumerate', None) is not None:
            bound = self._enumeration_bound(args.enumerate)
            words = enumerate_language(automaton, bound)
            payload['words'] = [list(w) for w in words]
            return "\n".join(format_word(w) for w in words), payload
        fmt = 'dot' if args.dot else args.format
        if args.output:
            path = self.exporter.write_file(automaton, args.output, fmt)
            payload['output'] = path
            return "\n".join([*notes, path]), payload
        if fmt == 'json':
            document = self.exporter.to_json(automaton, include_timestamp=False,
                                             extra={'notes': list(notes)} if notes else None)
            return document, payload
        if fmt == 'dot':
            body, comment = self.exporter.to_dot(automaton), '//'
        else:
            body, comment = self.exporter.to_text(automaton), '#'
        return "\n".join([f"{comment} {line}" for line in notes] + [body.rstrip("\n")]), payload

    def _read_equations(self, path: str) -> EquationSystem:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise EquationSyntaxError(f"cannot read equations file {path}: {e.strerror}") from e
        return EquationSystem.from_text(text)

    # ------------------------------------------------------------------
    # commands
    # ------------------------------------------------------------------

    def cmd_reduce(self, args) -> Outcome:
        word = self._word(args.word)
        reduced = reduce(word)
        return format_word(reduced), {'input': list(word), 'reduced': list(reduced)}

    def cmd_closure(self, args) -> Outcome:
        automaton = self.exporter.read_file(args.automaton)
        if args.naive:
            result = saturate_closure_naive(automaton)
        else:
            result = saturate_closure(automaton, shuffle_seed=args.seed)
        extra = {
            'edges': sorted(list(pair) for pair in result.edges),
            'added_edges': sorted(list(pair) for pair in result.added_edges),
        }
        notes = [f"added ε-edge {p} -> {q}" for p, q in sorted(result.added_edges)]
        return self._emit_automaton(result.saturated, args, extra, notes or ["no ε-edges added"])

    def cmd_rlang(self, args) -> Outcome:
        automaton = self.exporter.read_file(args.automaton)
        dfa = reduced_language_dfa(automaton)
        bound = state_complexity_bound(automaton.state_count, automaton.alphabet.k)
        extra = {'dfa_states': dfa.state_count, 'state_bound': bound}
        if args.states:
            return f"{dfa.state_count} states (bound {bound})", extra
        return self._emit_automaton(dfa.to_nfa(), args, extra)

    def cmd_quotient(self, args) -> Outcome:
        dividend = self.exporter.read_file(args.dividend)
        divisor = self.exporter.read_file(args.divisor)
        return self._emit_automaton(quotient(dividend, divisor), args)

    def cmd_shortest(self, args) -> Outcome:
        automaton = self.exporter.read_file(args.automaton)
        n = automaton.state_count
        payload: Dict[str, Any] = {'bound': parse_tree_length_bound(n)}
        if automaton.alphabet.k == 1:
            payload['unary_bound'] = unary_length_bound(n)
        answer = shortest_reducible_word(automaton, witness=args.witness, cap=self._witness_cap(args))
        if answer is None:
            payload.update({'length': None, 'word': None})
            return self.config.INFINITY_TOKEN, payload
        return self._answer_lines(answer, payload)

    def _witness_cap(self, args: argparse.Namespace) -> int:
        cap = args.cap if args.cap is not None else self.config.WITNESS_CAP
        if cap < 0:
            raise InvalidParameterError(f"--cap must be nonnegative, got {cap}")
        return cap

    @staticmethod
    def _answer_lines(answer: ShortestReducible, payload: Dict[str, Any]) -> Outcome:
        payload.update({
            'length': answer.length,
            'final_state': answer.final_state,
            'word': None if answer.word is None else list(answer.word),
            'derivation': answer.derivation,
        })
        lines = [str(answer.length)]
        if answer.word is not None:
            lines.append(format_word(answer.word))
        elif answer.derivation is not None:
            lines.extend(answer.derivation)
        return "\n".join(lines), payload

    def cmd_family(self, args) -> Outcome:
        family = FamilyId(kind=args.kind, n=args.n)
        dfa = family.build()
        payload: Dict[str, Any] = {'family': family.kind.value, 'n': family.n}
        if args.shortest:
            answer = shortest_reducible_word(dfa, witness=False)
            payload['length'] = None if answer is None else answer.length
            payload['closed_form'] = family.closed_form_length()
            if answer is None:
                return self.config.INFINITY_TOKEN, payload
            return str(answer.length), payload
        if args.witness:
            cap = self._witness_cap(args)
            if family.closed_form_length() > cap:
                return self._answer_lines(shortest_reducible_word(dfa, cap=cap), payload)
            if family.kind is FamilyKind.LSS1:
                word = lss1_witness(family.n)
            elif family.kind is FamilyKind.LSS2:
                word = lss2_witness(family.n)
            else:
                word = shortest_reducible_word(dfa, cap=cap).word
            payload.update({'length': len(word), 'word': list(word)})
            return format_word(word), payload
        if args.dot:
            payload['dot'] = self.exporter.to_dot(dfa, family.label)
            return payload['dot'].rstrip("\n"), payload
        payload['automaton'] = self.exporter.to_payload(dfa)
        return self.exporter.to_text(dfa).rstrip("\n"), payload

    def cmd_eq_member(self, args) -> Outcome:
        automaton = self.exporter.read_file(args.automaton)
        word = self._word(args.word)
        member = eq_membership(word, automaton)
        return ("true" if member else "false"), {'word': list(word), 'member': member}

    def cmd_eq_demo(self, args) -> Outcome:
        report = eq_nonregular_demo(args.max_len)
        return report.to_text(), report.model_dump()

    def cmd_rg(self, args) -> Outcome:
        system = self._read_equations(args.equations)
        word = self.validator.parse_letters(args.word)
        if any(letter > system.alphabet_size for letter in word):
            system = EquationSystem(alphabet_size=max(word), equations=system.equations)
        cap = args.cap if args.cap is not None else len(word) + self.config.DEFAULT_REWRITE_CAP_SLACK
        result = rg(word, system, cap)
        letters = [self.validator.format_letters(w) for w in result.sorted_representatives()]
        payload: Dict[str, Any] = {
            'word': args.word,
            'cap': cap,
            'representatives': letters,
            'exhaustive': result.exhaustive,
            'explored': result.explored,
        }
        lines = letters + [f"exhaustive: {'yes' if result.exhaustive else 'no'}"]
        if args.show_class:
            members = sorted(eq_class_bfs(word, system, cap), key=lambda w: (len(w), w))
            payload['class'] = [self.validator.format_letters(w) for w in members]
            lines += ["class:"] + [f"  {w}" for w in payload['class']]
        return "\n".join(lines), payload

    def cmd_rg_demo(self, args) -> Outcome:
        report = rg_counterexample_check(args.max_len)
        return report.to_text(), report.model_dump()

    def cmd_dot(self, args) -> Outcome:
        automaton = self.exporter.read_file(args.automaton)
        dot = self.exporter.to_dot(automaton, Path(args.automaton).stem)
        return dot.rstrip("\n"), {'dot': dot}

    # ------------------------------------------------------------------
    # entry point
    # ------------------------------------------------------------------

    def run(self, argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
            err: Optional[TextIO] = None) -> int:
        """Parse ``argv``, dispatch, print the result and return the exit status"""
        out = out or sys.stdout
        err = err or sys.stderr
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except _UsageError as e:
            err.write(e.usage)
            err.write(f"{e}\n")
            return 2
        except SystemExit as e:
            # --help
            return int(e.code or 0)

        configure_logging(self.config, args.verbose, args.log_file)
        try:
            text, payload = self.handlers[args.command](args)
        except ParseError as e:
            err.write(f"error: {e}\n")
            return 2
        except (AutomataError, ValidationError) as e:
            message = e.errors()[0]['msg'] if isinstance(e, ValidationError) else str(e)
            err.write(f"error: {message}\n")
            return 1
        except OSError as e:
            logger.error(f"I/O failure in {args.command}: {str(e)}")
            err.write(f"error: {e}\n")
            return 1

        if args.json:
            out.write(json.dumps({'command': args.command, 'result': payload},
                                 indent=2, ensure_ascii=False, default=list))
        else:
            out.write(text)
        out.write("\n")
        return 0


def main() -> int:
    return ReducedWordsApp().run()


if __name__ == "__main__":
    sys.exit(main())
