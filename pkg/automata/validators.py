"""
Input Validation
================

Text entering the toolkit arrives in three shapes: signed-integer words
("1 -1 2"), lowercase letter words for rewriting ("abd") and equation lines
("ab = cd", "eps" for ε). This module checks and converts all of them.

``is_valid_*`` methods answer yes/no and log why not; ``parse_*`` methods
return the converted value or raise a ``ParseError`` subclass.
"""

import logging
import re
from typing import Dict, Optional, Tuple

from automata.errors import EquationSyntaxError, WordSyntaxError
from automata.words import InverseAlphabet, Word
from config import Config

logger = logging.getLogger(__name__)

LETTERS = "abcdefghijklmnopqrstuvwxyz"


class InputValidator:
    """
    Validation and parsing for word and equation text

    Parsing is strict: anything that is not exactly one of the documented
    syntaxes is rejected with a message naming the offending token.
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.epsilon_tokens = {"", self.config.EPSILON_TOKEN, "ε"}
        self.validation_patterns: Dict[str, str] = {
            'symbol': r'^-?[1-9][0-9]*$',
            'letters': r'^[a-z]+$',
            'equation': r'^\s*([a-z]+|eps)\s*=\s*([a-z]+|eps)\s*$',
        }
        logger.debug("Input validator initialized")

    def is_valid_word_text(self, text: str, alphabet: Optional[InverseAlphabet] = None) -> bool:
        try:
            self.parse_word(text, alphabet)
            return True
        except WordSyntaxError as e:
            logger.warning(f"Rejected word text {text!r}: {e}")
            return False

    def parse_word(self, text: str, alphabet: Optional[InverseAlphabet] = None) -> Word:
        """
        Parse a space-separated signed-integer word

        ``e``, ``ε`` and the empty string denote the empty word. When an
        alphabet is given, symbols outside it are rejected here too.
        """
        stripped = text.strip()
        if stripped in self.epsilon_tokens:
            return ()
        symbols = []
        for token in stripped.split():
            if not re.match(self.validation_patterns['symbol'], token):
                raise WordSyntaxError(f"{token!r} is not a nonzero signed integer symbol")
            symbols.append(int(token))
        word = tuple(symbols)
        if alphabet is not None:
            outside = [s for s in word if s not in alphabet]
            if outside:
                raise WordSyntaxError(f"symbol {outside[0]} is outside the alphabet k={alphabet.k}")
        return word

    def parse_letters(self, text: str) -> Word:
        """Parse a lowercase letter word: ``a`` is symbol 1, ..., ``z`` is 26"""
        stripped = text.strip()
        if stripped == self.config.EQUATION_EPSILON_TOKEN or stripped in self.epsilon_tokens:
            return ()
        if not re.match(self.validation_patterns['letters'], stripped):
            raise WordSyntaxError(f"{text!r} is not a word of lowercase letters")
        return tuple(LETTERS.index(ch) + 1 for ch in stripped)

    def format_letters(self, word: Word) -> str:
        if not word:
            return self.config.EQUATION_EPSILON_TOKEN
        return "".join(LETTERS[symbol - 1] for symbol in word)

    def parse_equation(self, line: str) -> Tuple[Word, Word]:
        """Parse one ``u = v`` line of an equations file"""
        match = re.match(self.validation_patterns['equation'], line)
        if not match:
            raise EquationSyntaxError(f"{line.strip()!r} is not of the form 'u = v'")
        left, right = (self.parse_letters(side) for side in match.groups())
        if left == right:
            raise EquationSyntaxError(f"equation {line.strip()!r} has identical sides")
        return left, right

    def parse_equations(self, text: str) -> Tuple[Tuple[Word, Word], ...]:
        """Parse an equations file body; blank lines and ``#`` comments are skipped"""
        equations = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                equations.append(self.parse_equation(line))
            except EquationSyntaxError as e:
                raise EquationSyntaxError(f"line {number}: {e}") from e
        logger.info(f"Parsed {len(equations)} equations")
        return tuple(equations)
