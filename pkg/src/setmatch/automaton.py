"""Compilation of a pattern set into its matching automaton.

A state is a canonical set of match goals plus a label: the position the
state inspects next, always taken from a root goal's obligations.  Observing
a symbol at the label advances every goal, and the surviving goal set is
split into dependency classes; each class, shifted back to its own root,
becomes one successor state.  Goals completed by the observation leave the
state machine as outputs.  A transition with no targets is the implicit
final state: nothing is left to watch below this point.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import InvariantError
from .goals import (Goal, Outcome, canonical_goals, dependency_partition,
                    fresh_goal, goal_outcome, goal_sort_key, lift_class)
from .positions import Position, comparable, format_position, prefix_leq
from .terms import PatternSet, Signature, Symbol, domain

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"
_STRATEGIES = (LEFTMOST, RIGHTMOST)

Announcement = tuple[int, Position]  # (pattern id, position relative to the state)
TargetRef = tuple[int, Position]     # (state id, pointer shift)


@dataclass(frozen=True)
class Transition:
    outputs: tuple[Announcement, ...]
    targets: tuple[TargetRef, ...]  # empty tuple = implicit final state


@dataclass
class State:
    label: Position
    goals: tuple[Goal, ...] | None  # canonical order; None when loaded without debug info
    delta: dict = field(default_factory=dict)  # symbol name -> Transition


@dataclass
class SetAutomaton:
    signature: Signature
    patterns: PatternSet
    states: list[State]
    initial: int = 0

    def state_count(self) -> int:
        return len(self.states)


def transition_count(a: SetAutomaton) -> int:
    """Number of (state, symbol, target) edges."""
    return sum(len(tr.targets) for st in a.states for tr in st.delta.values())


def initial_goals(ps: PatternSet) -> frozenset:
    """One fresh root goal per pattern."""
    return frozenset(fresh_goal(i, p, ()) for i, p in enumerate(ps.patterns))


def initial_state(ps: PatternSet) -> State:
    return State(label=(), goals=canonical_goals(initial_goals(ps)))


def choose_label(goals, strategy: str) -> Position:
    """Pick the state's inspection position among root-goal obligations."""
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown label strategy {strategy!r}")
    candidates = sorted({pos for g in goals if g.is_root for pos in g.positions()})
    if not candidates:
        raise InvariantError("state has no root goal to take a label from")
    return candidates[0] if strategy == LEFTMOST else candidates[-1]


def derivative(state: State, symbol: Symbol, ps: PatternSet) -> list[Goal]:
    """Goal set after observing ``symbol`` at the state's label.

    Unchanged and reduced goals survive; discarded and completed goals drop
    out (completions are reported by :func:`outputs` instead); fresh goals
    appear below the observed position, one per pattern and argument.
    """
    deriv, _ = _step(state, symbol, ps)
    return deriv


def outputs(state: State, symbol: Symbol) -> tuple[Announcement, ...]:
    """Announcements of goals that ``symbol`` at the label would complete.

    These are exactly the goals whose whole obligation is a lone
    ``symbol(_,...,_)`` at the label.
    """
    outs = []
    for g in state.goals:
        if len(g.obligation) == 1:
            ((term, pos),) = g.obligation
            if (pos == state.label and term.symbol == symbol
                    and all(c.symbol is None for c in term.children)):
                outs.append((g.pattern, g.announce))
    return tuple(sorted(outs))


def _step(state: State, symbol: Symbol, ps: PatternSet):
    deriv: list[Goal] = []
    completed: list[Announcement] = []
    at = state.label
    for g in state.goals:
        outcome, reduced = goal_outcome(g, symbol, at)
        if outcome is Outcome.UNCHANGED:
            deriv.append(g)
        elif outcome is Outcome.REDUCED:
            deriv.append(reduced)
        elif outcome is Outcome.COMPLETED:
            completed.append((g.pattern, g.announce))
    for i in range(1, symbol.arity + 1):
        below = at + (i,)
        for pid, pat in enumerate(ps.patterns):
            deriv.append(fresh_goal(pid, pat, below))
    return deriv, completed


def build(ps: PatternSet, label_strategy: str = RIGHTMOST) -> SetAutomaton:
    """Compile ``ps``; deterministic for a fixed strategy.

    Worklist construction with states deduplicated by goal-set equality.
    New ids are handed out in discovery order; symbols are visited in
    signature declaration order and successor classes in canonical order,
    so rebuilding yields an identical automaton.
    """
    if label_strategy not in _STRATEGIES:
        raise ValueError(f"unknown label strategy {label_strategy!r}")
    sig = ps.signature
    states: list[State] = []
    ids: dict[frozenset, int] = {}
    pending: deque[int] = deque()

    def intern(goal_set: frozenset) -> int:
        sid = ids.get(goal_set)
        if sid is None:
            sid = len(states)
            ids[goal_set] = sid
            states.append(State(label=choose_label(goal_set, label_strategy),
                                goals=canonical_goals(goal_set)))
            pending.append(sid)
        return sid

    intern(initial_goals(ps))
    while pending:
        sid = pending.popleft()
        state = states[sid]
        for symbol in sig:
            deriv, completed = _step(state, symbol, ps)
            outs = outputs(state, symbol)
            assert tuple(sorted(completed)) == outs, "output formulations disagree"
            entries = []
            for klass in dependency_partition(deriv):
                lifted, shift = lift_class(klass)
                canon = canonical_goals(lifted)
                entries.append((shift, tuple(map(goal_sort_key, canon)), frozenset(canon)))
            entries.sort(key=lambda e: (e[0], e[1]))
            targets = tuple((intern(goal_set), shift) for shift, _, goal_set in entries)
            state.delta[symbol.name] = Transition(outputs=outs, targets=targets)
    return SetAutomaton(signature=sig, patterns=ps, states=states)


def reachable_position_bound(ps: PatternSet) -> set[Position]:
    """Every obligation position any reachable state can mention.

    All suffixes of q.i, for q a position of some pattern and i up to the
    signature's widest arity.  A constant-only signature admits only the
    root.
    """
    n = ps.signature.max_arity
    if n == 0:
        return {()}
    out: set[Position] = set()
    for pat in ps.patterns:
        for q in domain(pat):
            for i in range(1, n + 1):
                full = q + (i,)
                for k in range(len(full) + 1):
                    out.add(full[k:])
    return out


def verify_automaton(a: SetAutomaton) -> None:
    """Check every state's structural invariants; raise InvariantError.

    Checked per state: a root goal exists; the label is one of a root
    goal's obligation positions; distinct obligation positions are pairwise
    incomparable; every obligation position carries a fresh goal for every
    pattern; obligation positions stay within the reachable bound;
    announcements prefix their obligations; transitions are total over the
    signature and reference valid states.
    """
    bound = reachable_position_bound(a.patterns)
    pats = a.patterns.patterns

    def bad(sid, msg):
        raise InvariantError(f"state {sid}: {msg}")

    for sid, state in enumerate(a.states):
        if state.goals is None:
            bad(sid, "no goal set to verify (loaded without debug goals?)")
        roots = [g for g in state.goals if g.is_root]
        if not roots:
            bad(sid, "no root goal")
        if not any(state.label in g.positions() for g in roots):
            bad(sid, f"label {format_position(state.label)} not an obligation "
                     "position of any root goal")
        positions = sorted({p for g in state.goals for p in g.positions()})
        for i, p in enumerate(positions):
            for q in positions[i + 1:]:
                if comparable(p, q):
                    bad(sid, f"comparable obligation positions "
                             f"{format_position(p)} and {format_position(q)}")
        goal_set = set(state.goals)
        for p in positions:
            for pid, pat in enumerate(pats):
                if fresh_goal(pid, pat, p) not in goal_set:
                    bad(sid, f"missing fresh goal for pattern {pid} "
                             f"at {format_position(p)}")
            if p not in bound:
                bad(sid, f"obligation position {format_position(p)} outside "
                         "the reachable bound")
        for g in state.goals:
            for p in g.positions():
                if not prefix_leq(p, g.announce):
                    bad(sid, f"obligation at {format_position(p)} does not extend "
                             f"its announcement {format_position(g.announce)}")
        for sym in a.signature:
            if sym.name not in state.delta:
                bad(sid, f"no transition for symbol '{sym.name}'")
        for name, tr in state.delta.items():
            if a.signature.get(name) is None:
                bad(sid, f"transition on undeclared symbol '{name}'")
            for tid, _shift in tr.targets:
                if not 0 <= tid < len(a.states):
                    bad(sid, f"transition on '{name}' references unknown state {tid}")
            for pid, _pos in tr.outputs:
                if not 0 <= pid < len(pats):
                    bad(sid, f"transition on '{name}' announces unknown pattern {pid}")
