#!/usr/bin/env python3
"""How the label choice changes the number of states.

For the comb-shaped family t_1 = f(x, g(y)), t_{n+1} = f(t_n, g(x)),
picking the rightmost candidate label keeps the automaton linear in n
while the leftmost choice makes it quadratic.  Neither choice affects
the matches, only the machine size.
"""

from setmatch import LEFTMOST, RIGHTMOST, build, comb_pattern_set, format_term


def main() -> None:
    print(f"{'n':>2}  {'pattern':40}  {'rightmost':>9}  {'leftmost':>8}")
    for n in range(1, 9):
        ps = comb_pattern_set(n)
        right = len(build(ps, RIGHTMOST).states)
        left = len(build(ps, LEFTMOST).states)
        text = format_term(ps[0])
        if len(text) > 40:
            text = text[:37] + "..."
        print(f"{n:>2}  {text:40}  {right:>9}  {left:>8}")
        assert right == 2 * n
        assert left == n * n + n
    print("\nrightmost grows as 2n, leftmost as n^2+n")


if __name__ == "__main__":
    main()
