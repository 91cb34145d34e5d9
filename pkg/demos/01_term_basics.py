#!/usr/bin/env python3
"""Terms, positions and single-pattern matching from the ground up.

Parses a pattern and a subject, walks the subject's position set, and
shows where the pattern matches by plain structural comparison.
"""

from setmatch import (Signature, domain, format_position, format_term,
                      matches, parse_term, subterm_at)


def main() -> None:
    sig = Signature()
    for name, arity in (("f", 2), ("g", 1), ("a", 0)):
        sig.declare(name, arity)

    pattern = parse_term("f(_, g(_))", sig, allow_wildcard=True)
    subject = parse_term("f(g(a), f(f(a, g(a)), g(a)))", sig)

    print("pattern:", format_term(pattern))
    print("subject:", format_term(subject))
    print()
    print("positions of the subject (1-based paths from the root):")
    for pos in sorted(domain(subject)):
        sub = subterm_at(subject, pos)
        hit = "  <- match" if matches(pattern, sub) else ""
        print(f"  {format_position(pos):8}  {format_term(sub)}{hit}")


if __name__ == "__main__":
    main()
