"""Almost periodic regular languages, factor sets of infinite words, and
contextual grammars, checked at desk scale."""

from .automata import (Automaton, are_equivalent, complement, determinize_minimize,
                       distinguishing_word, empty_automaton, enumerate_shortlex, intersect,
                       is_empty, is_finite, shortest_word, trim, union, universal_automaton,
                       word_set_automaton)
from .contextual import (ContextualGrammar, Mode, derive_step, generate, letter_star_probe,
                         min_context_growth)
from .decide import (bounded_confluence, extract_pumping_word,
                     is_almost_periodic, is_biinfinite_factor_language,
                     is_factor_language_of_almost_periodic_word, pair_has_common_superword)
from .factors import (build_factor_automaton, build_periodic_factor_automaton, is_closed,
                      is_factor_of_language, superword_automaton)
from .regex import compile_regex, parse_regex, regex_to_automaton
from .sequences import (MorphicFixedPoint, Morphism, Periodic, eventual_periodicity_probe,
                        factors_of_length, fibonacci_word, prefix, recurrence_for_factor,
                        recurrence_function, recurrence_table, thue_morse)
from .verdict import Decision, Status, Verdict
from .words import commute, is_factor, prefixes, primitive_root, suffixes

__version__ = "0.1.0"
