"""
Finite automata over inverse alphabets.

Modules:
    words            free-group words and their reduction
    automaton        ε-NFAs, complete DFAs and the standard constructions
    closure          ε-saturation and the automaton for r(L)
    shortest         shortest reducible words and the pair-distance table
    families         lower-bound automaton families and their witnesses
    language_algebra quotients and eq(L) membership
    rewriting        generalized reduced representations under equations
    serialization    text, DOT and JSON formats
"""

__version__ = "1.0.0"
