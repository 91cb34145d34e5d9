#!/usr/bin/env python3
"""Compile the two rotation patterns and trace one evaluation.

The pattern set {f(f(x, y), z), f(x, f(y, z))} drives rewiring in
associative rewriting.  This script prints the compiled states, then
evaluates f(f(a, f(a, a)), a) and lists every work item the traversal
processes: each subject position is inspected exactly once even though
the two patterns overlap.
"""

from setmatch import (PatternSet, build, evaluate, evaluation_tree,
                      format_position, format_term, parse_term, tree_nodes)


def main() -> None:
    ps = PatternSet.from_text("f(f(_, _), _)\nf(_, f(_, _))\n")
    ps.signature.declare("a", 0)
    a = build(ps)

    print("patterns:")
    for i, p in enumerate(ps):
        print(f"  #{i}: {format_term(p)}")
    print(f"\ncompiled: {len(a.states)} states")
    for sid, state in enumerate(a.states):
        print(f"  s{sid}  label={format_position(state.label)}")
        for goal in state.goals:
            print(f"        {goal!r}")

    subject = parse_term("f(f(a, f(a, a)), a)", ps.signature)
    print(f"\nsubject: {format_term(subject)}")
    print("work items (state, pointer -> inspected position):")
    for node in tree_nodes(evaluation_tree(a, subject)):
        at = node.pointer + a.states[node.state].label
        print(f"  s{node.state} @ {format_position(node.pointer):4} "
              f"-> inspects {format_position(at)}")

    report = evaluate(a, subject)
    print("\nmatches:")
    for pid, pos in sorted(report.matches):
        print(f"  {format_term(ps[pid])} at {format_position(pos)}")


if __name__ == "__main__":
    main()
