"""Match goals: the bookkeeping unit automaton states are made of.

A goal reads "once every (subpattern, position) pair in the obligation has
been observed, announce pattern ``pattern`` at position ``announce``".
Observing a symbol at a position transforms a goal in one of four ways
(:func:`goal_outcome`), and a whole goal set is advanced by transforming its
members, splitting the result into independent classes
(:func:`dependency_partition`) and re-rooting each class
(:func:`lift_class`).
"""

from dataclasses import dataclass
from enum import Enum

from .errors import InvariantError
from .positions import Position, format_position, gcp, prefix_leq
from .terms import Symbol, Term, format_term

# An obligation is a non-empty frozenset of (subpattern, position) pairs.
Pair = tuple[Term, Position]


@dataclass(frozen=True)
class Goal:
    obligation: frozenset
    pattern: int
    announce: Position

    def positions(self) -> set[Position]:
        return {pos for _, pos in self.obligation}

    @property
    def is_root(self) -> bool:
        """Announces at the root, i.e. drives the label choice of its state."""
        return self.announce == ()

    @property
    def is_fresh(self) -> bool:
        """Single obligation at the announcement position itself."""
        if len(self.obligation) != 1:
            return False
        ((_, pos),) = self.obligation
        return pos == self.announce

    def __repr__(self):
        pairs = ", ".join(
            f"{format_term(t)}@{format_position(p)}"
            for p, t in sorted((p, t) for t, p in self.obligation))
        return f"Goal({pairs} -> #{self.pattern}@{format_position(self.announce)})"


def fresh_goal(pattern_id: int, pattern: Term, at: Position) -> Goal:
    return Goal(frozenset({(pattern, at)}), pattern_id, at)


class Outcome(Enum):
    UNCHANGED = "unchanged"
    REDUCED = "reduced"
    DISCARDED = "discarded"
    COMPLETED = "completed"


def reduce(obligation: frozenset, symbol: Symbol, at: Position) -> frozenset:
    """One observation step on an obligation.

    Pairs away from ``at`` are kept; pairs at ``at`` are replaced by their
    non-wildcard children, pushed one level down.  The result may be empty,
    which means the obligation was fulfilled by this observation.
    """
    out = []
    for term, pos in obligation:
        if pos != at:
            out.append((term, pos))
        else:
            for i, child in enumerate(term.children[: symbol.arity], 1):
                if child.symbol is not None:
                    out.append((child, pos + (i,)))
    return frozenset(out)


def goal_outcome(goal: Goal, symbol: Symbol, at: Position):
    """Classify one observation against one goal.

    Returns ``(Outcome, new_goal)``; ``new_goal`` is only set for REDUCED.
    UNCHANGED: the goal does not watch ``at``.  DISCARDED: it expected a
    different symbol there.  COMPLETED: this was the last thing it was
    waiting for.  REDUCED: it keeps waiting, one level deeper.
    """
    touched = [term for term, pos in goal.obligation if pos == at]
    if not touched:
        return Outcome.UNCHANGED, None
    if any(term.symbol != symbol for term in touched):
        return Outcome.DISCARDED, None
    rest = reduce(goal.obligation, symbol, at)
    if not rest:
        # an emptied obligation is always a lone f(_,...,_) at the observed spot
        assert len(goal.obligation) == 1 and all(
            c.symbol is None for t, _ in goal.obligation for c in t.children)
        return Outcome.COMPLETED, None
    return Outcome.REDUCED, Goal(rest, goal.pattern, goal.announce)


def dependency_partition(goals) -> list[list[Goal]]:
    """Group goals whose obligations are linked by shared positions.

    Union-find over positions: two goals land in the same class iff a chain
    of position overlaps connects their obligations.  Class order follows
    first appearance in the input, so the result is deterministic.
    """
    goals = list(goals)
    parent: dict[Position, Position] = {}

    def find(x: Position) -> Position:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    for g in goals:
        first = None
        for p in g.positions():
            parent.setdefault(p, p)
            if first is None:
                first = p
            else:
                parent[find(p)] = find(first)

    classes: list[list[Goal]] = []
    index: dict[Position, int] = {}
    for g in goals:
        root = find(next(iter(g.positions())))
        at = index.get(root)
        if at is None:
            at = len(classes)
            index[root] = at
            classes.append([])
        classes[at].append(g)
    return classes


def lift_class(goals) -> tuple[list[Goal], Position]:
    """Strip the class's common announcement prefix from every position.

    The shift is the greatest common prefix of the announcement positions.
    Every position in the class must extend it; anything else means the
    construction upstream is broken, not that the input was unusual.
    """
    goals = list(goals)
    if not goals:
        raise InvariantError("cannot lift an empty class")
    shift = gcp(g.announce for g in goals)
    if not shift:
        return goals, shift
    cut = len(shift)
    lifted = []
    for g in goals:
        if not prefix_leq(g.announce, shift):
            raise InvariantError(
                f"announcement {format_position(g.announce)} does not extend "
                f"shift {format_position(shift)}")
        pairs = []
        for term, pos in g.obligation:
            if not prefix_leq(pos, shift):
                raise InvariantError(
                    f"obligation position {format_position(pos)} does not extend "
                    f"shift {format_position(shift)}")
            pairs.append((term, pos[cut:]))
        lifted.append(Goal(frozenset(pairs), g.pattern, g.announce[cut:]))
    return lifted, shift


def goal_sort_key(g: Goal):
    ob = tuple(sorted((pos, format_term(term)) for term, pos in g.obligation))
    return (g.announce, g.pattern, ob)


def canonical_goals(goals) -> tuple[Goal, ...]:
    """A canonical ordering, independent of set iteration order."""
    return tuple(sorted(goals, key=goal_sort_key))
