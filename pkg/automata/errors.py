"""
Error types raised by the toolkit.

All of them are ``ValueError`` subclasses. ``ParseError`` marks malformed
text input (exit status 2 on the command line); everything else is a
violated precondition on well-formed input (exit status 1).
"""


class AutomataError(ValueError):
    """Base class for every error raised by the toolkit"""


class InvalidParameterError(AutomataError):
    """A numeric parameter is outside its documented range"""


class AlphabetMismatchError(AutomataError):
    """A binary operation received automata over different alphabets"""


class RejectedInputError(AutomataError):
    """A word contains a symbol outside the automaton's alphabet"""


class NotPlainLanguageError(AutomataError):
    """An automaton expected over Γ only has a transition on an inverse letter"""


class InvalidAutomatonError(AutomataError):
    """Automaton components are inconsistent (state ids, labels, totality)"""


class ParseError(AutomataError):
    """Malformed text input"""


class WordSyntaxError(ParseError):
    pass


class AutomatonFormatError(ParseError):
    pass


class EquationSyntaxError(ParseError):
    pass
