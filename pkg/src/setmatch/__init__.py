"""Pattern matching with set automata.

Compile a set of linear patterns into an automaton whose states are sets
of match goals, then run it over a subject term.  Every occurrence of
every pattern is reported while each subject symbol is inspected exactly
once, independent of the traversal strategy.
"""

from .automaton import (LEFTMOST, RIGHTMOST, SetAutomaton, State, Transition,
                        build, choose_label, derivative, initial_state,
                        outputs, reachable_position_bound, transition_count,
                        verify_automaton)
from .dot import to_dot
from .errors import (FormatError, InvariantError, ParseError, PatternSetError,
                     PositionError, SetMatchError, SignatureError,
                     SubjectError)
from .evaluate import (BreadthFirst, DepthFirst, MatchReport, Parallel,
                       count_inspections, evaluate, evaluation_tree,
                       tree_nodes)
from .goals import (Goal, Outcome, canonical_goals, dependency_partition,
                    fresh_goal, goal_outcome, lift_class, reduce)
from .oracle import (brute_force_matches, comb_pattern, comb_pattern_set,
                     comb_signature, random_instance)
from .positions import (ROOT, format_position, gcp, join, parse_position,
                        prefix_leq, strictly_below)
from .serialization import SCHEMA_VERSION, from_json, to_json
from .terms import (WILDCARD, PatternSet, Signature, Symbol, Term, domain,
                    format_term, matches, parse_term, read_signature,
                    subterm_at, term_depth, term_size, write_signature)

__version__ = "0.1.0"

__all__ = [
    "LEFTMOST", "RIGHTMOST", "SetAutomaton", "State", "Transition",
    "build", "choose_label", "derivative", "initial_state", "outputs",
    "reachable_position_bound", "transition_count", "verify_automaton",
    "to_dot",
    "FormatError", "InvariantError", "ParseError", "PatternSetError",
    "PositionError", "SetMatchError", "SignatureError", "SubjectError",
    "BreadthFirst", "DepthFirst", "MatchReport", "Parallel",
    "count_inspections", "evaluate", "evaluation_tree", "tree_nodes",
    "Goal", "Outcome", "canonical_goals", "dependency_partition",
    "fresh_goal", "goal_outcome", "lift_class", "reduce",
    "brute_force_matches", "comb_pattern", "comb_pattern_set",
    "comb_signature", "random_instance",
    "ROOT", "format_position", "gcp", "join", "parse_position",
    "prefix_leq", "strictly_below",
    "SCHEMA_VERSION", "from_json", "to_json",
    "WILDCARD", "PatternSet", "Signature", "Symbol", "Term", "domain",
    "format_term", "matches", "parse_term", "read_signature", "subterm_at",
    "term_depth", "term_size", "write_signature",
    "__version__",
]
