"""Run a compiled automaton over a closed subject term.

The unit of work is a (state, pointer) pair.  Processing one item inspects
exactly one subject symbol, the one at pointer + state label, announces the
transition's outputs shifted by the pointer, and enqueues one child item per
target.  Every subject position is inspected exactly once over the whole
run, and the order in which the work set is drained (LIFO, FIFO, or a
thread pool) changes nothing about the reported match set.
"""

import queue
import threading
from collections import deque
from dataclasses import dataclass

from .automaton import SetAutomaton
from .errors import InvariantError, SubjectError
from .positions import Position, format_position
from .terms import Term


@dataclass(frozen=True)
class DepthFirst:
    """Drain the work set LIFO."""


@dataclass(frozen=True)
class BreadthFirst:
    """Drain the work set FIFO."""


@dataclass(frozen=True)
class Parallel:
    """A fixed pool of worker threads sharing one work queue."""

    workers: int = 4


@dataclass
class MatchReport:
    """What one evaluation produced.

    ``matches`` holds absolute (pattern id, position) pairs.  ``node_count``
    is the number of work items processed, which equals the number of
    subject positions inspected.  ``inspected`` lists every inspected
    position when the run was instrumented, in processing order.
    """

    matches: frozenset
    node_count: int
    inspected: tuple | None = None


def count_inspections(report: MatchReport) -> int:
    if report.inspected is None:
        raise ValueError("run was not instrumented; pass instrument=True")
    return len(report.inspected)


def evaluate(a: SetAutomaton, subject: Term, strategy=DepthFirst(), *,
             instrument: bool = False, carry_subterms: bool = False) -> MatchReport:
    """All (pattern id, position) matches of ``a``'s patterns in ``subject``.

    The strategy only fixes how the work set is drained.  With
    ``carry_subterms`` each work item keeps a handle on its subterm and
    symbols are resolved relative to it; by default every inspection walks
    from the subject root.  Both modes report identical results.
    """
    if isinstance(strategy, Parallel):
        if strategy.workers < 1:
            raise ValueError("Parallel needs at least one worker")
        return _run_parallel(a, subject, strategy.workers, instrument, carry_subterms)
    if isinstance(strategy, DepthFirst):
        return _run_sequential(a, subject, False, instrument, carry_subterms)
    if isinstance(strategy, BreadthFirst):
        return _run_sequential(a, subject, True, instrument, carry_subterms)
    raise TypeError(f"unknown strategy {strategy!r}")


def _walk(node: Term, path: Position, shown: Position) -> Term:
    """Follow ``path`` from ``node``; ``shown`` prefixes error positions."""
    for k, i in enumerate(path):
        kids = node.children
        if i < 1 or i > len(kids):
            raise InvariantError(
                f"no subject node at {format_position(shown + path[:k + 1])}; "
                "the automaton and the subject disagree")
        node = kids[i - 1]
    return node


def _transition(state, node, sig, sid):
    sym = node.symbol
    if sym is None:
        raise SubjectError("subject terms must not contain wildcards")
    if sig.get(sym.name) != sym:
        raise SubjectError(
            f"subject symbol '{sym.name}' (arity {sym.arity}) is not in the "
            "automaton signature")
    tr = state.delta.get(sym.name)
    if tr is None:
        raise InvariantError(f"state {sid} has no transition for '{sym.name}'")
    return tr


def _run_sequential(a, subject, fifo, instrument, carry):
    states = a.states
    sig = a.signature
    matches: list = []
    inspected: list | None = [] if instrument else None
    work = deque([(a.initial, (), subject)])
    pop = work.popleft if fifo else work.pop
    nodes = 0
    while work:
        sid, pointer, here = pop()
        state = states[sid]
        node = (_walk(here, state.label, pointer) if carry
                else _walk(subject, pointer + state.label, ()))
        nodes += 1
        if inspected is not None:
            inspected.append(pointer + state.label)
        tr = _transition(state, node, sig, sid)
        for pid, rel in tr.outputs:
            matches.append((pid, pointer + rel))
        if carry:
            for tid, shift in tr.targets:
                work.append((tid, pointer + shift, _walk(here, shift, pointer)))
        else:
            for tid, shift in tr.targets:
                work.append((tid, pointer + shift, subject))
    assert len(matches) == len(set(matches)), "duplicate announcements"
    return MatchReport(matches=frozenset(matches), node_count=nodes,
                       inspected=tuple(inspected) if inspected is not None else None)


_STOP = object()


def _run_parallel(a, subject, workers, instrument, carry):
    states = a.states
    sig = a.signature
    work: queue.Queue = queue.Queue()
    halt = threading.Event()
    merge = threading.Lock()
    all_matches: list = []
    all_inspected: list = []
    totals = [0]
    failures: list[BaseException] = []

    def process(item, matches, inspected):
        sid, pointer, here = item
        state = states[sid]
        node = (_walk(here, state.label, pointer) if carry
                else _walk(subject, pointer + state.label, ()))
        if inspected is not None:
            inspected.append(pointer + state.label)
        tr = _transition(state, node, sig, sid)
        for pid, rel in tr.outputs:
            matches.append((pid, pointer + rel))
        if carry:
            for tid, shift in tr.targets:
                work.put((tid, pointer + shift, _walk(here, shift, pointer)))
        else:
            for tid, shift in tr.targets:
                work.put((tid, pointer + shift, subject))

    def run():
        matches: list = []
        inspected: list | None = [] if instrument else None
        done = 0
        try:
            while True:
                item = work.get()
                if item is _STOP:
                    work.task_done()
                    break
                try:
                    if not halt.is_set():
                        process(item, matches, inspected)
                        done += 1
                except BaseException as exc:
                    with merge:
                        failures.append(exc)
                    halt.set()
                finally:
                    work.task_done()
        finally:
            with merge:
                all_matches.extend(matches)
                if inspected is not None:
                    all_inspected.extend(inspected)
                totals[0] += done

    work.put((a.initial, (), subject))
    threads = [threading.Thread(target=run, name=f"setmatch-eval-{i}")
               for i in range(workers)]
    for t in threads:
        t.start()
    work.join()
    for _ in threads:
        work.put(_STOP)
    for t in threads:
        t.join()
    if failures:
        raise failures[0]
    assert len(all_matches) == len(set(all_matches)), "duplicate announcements"
    return MatchReport(matches=frozenset(all_matches), node_count=totals[0],
                       inspected=tuple(all_inspected) if instrument else None)


@dataclass
class EvalNode:
    """One work item of an evaluation, with its successor items."""

    state: int
    pointer: Position
    children: list


def evaluation_tree(a: SetAutomaton, subject: Term) -> EvalNode:
    """The explicit tree of work items rooted at (initial state, root)."""
    sig = a.signature
    root = EvalNode(a.initial, (), [])
    stack = [root]
    while stack:
        item = stack.pop()
        state = a.states[item.state]
        node = _walk(subject, item.pointer + state.label, ())
        tr = _transition(state, node, sig, item.state)
        for tid, shift in tr.targets:
            child = EvalNode(tid, item.pointer + shift, [])
            item.children.append(child)
            stack.append(child)
    return root


def tree_nodes(root: EvalNode):
    """Iterate every node of an evaluation tree."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(node.children)
