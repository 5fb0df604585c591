#!/usr/bin/env python3
"""Write genus-0 signatures of Gamma0(N), Gamma1(N) and Gamma(N) in the table format
read by ellmod (name level index genus cuspCount widths).

Each group is handled through the permutation action of T and S on its cosets in
PSL(2,Z), realised on rows (c, d) mod N (Gamma0, Gamma1) or on matrices mod N (Gamma).
"""

import argparse
from collections import deque
from fractions import Fraction
from math import gcd, lcm


def units(n):
    return [u for u in range(1, n + 1) if gcd(u, n) == 1]


def row_family(n, scalars):
    def canon(v):
        c, d = v
        return min(((u * c) % n, (u * d) % n) for u in scalars)

    def act(v, g):
        c, d = v
        p, q, r, s = g
        return canon((c * p + d * r, c * q + d * s))

    return canon((0, 1)), act


def matrix_family(n):
    def canon(m):
        return min(tuple(x % n for x in m), tuple((-x) % n for x in m))

    def act(m, g):
        a, b, c, d = m
        p, q, r, s = g
        return canon((a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s))

    return canon((1, 0, 0, 1)), act


T = (1, 1, 0, 1)
S = (0, -1, 1, 0)
ST = (0, -1, 1, 1)  # S*T, order 3 in PSL(2,Z)


def signature(base, act):
    seen = {base}
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for g in (T, S):
            y = act(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    points = list(seen)
    widths = []
    visited = set()
    for x in points:
        if x in visited:
            continue
        w, y = 0, x
        while y not in visited:
            visited.add(y)
            y = act(y, T)
            w += 1
        widths.append(w)
    index = len(points)
    e2 = sum(1 for x in points if act(x, S) == x)
    e3 = sum(1 for x in points if act(x, ST) == x)
    genus = 1 + Fraction(index, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(len(widths), 2)
    assert genus.denominator == 1, (index, e2, e3, widths)
    widths.sort(reverse=True)
    return index, int(genus), widths


def groups(max_level, max_full_level):
    for n in range(1, max_level + 1):
        base, act = row_family(n, units(n))
        yield f"Gamma0({n})", signature(base, act)
        # For phi(n) <= 2 the group +-Gamma1(n) is Gamma0(n).
        if len(units(n)) > 2:
            base, act = row_family(n, [1, n - 1])
            yield f"Gamma1({n})", signature(base, act)
        if 2 <= n <= max_full_level:
            base, act = matrix_family(n)
            yield f"Gamma({n})", signature(base, act)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-level", type=int, default=48)
    ap.add_argument("--max-full-level", type=int, default=12, help="largest N for Gamma(N)")
    ap.add_argument("--all-genera", action="store_true", help="keep groups of positive genus")
    ap.add_argument("--output", default="-")
    args = ap.parse_args()

    lines = ["# name level index genus cuspCount widths",
             f"# Gamma0/Gamma1 up to level {args.max_level}, Gamma up to level {args.max_full_level}"]
    for name, (index, genus, widths) in groups(args.max_level, args.max_full_level):
        if genus != 0 and not args.all_genera:
            continue
        level = lcm(*widths)
        lines.append(f"{name} {level} {index} {genus} {len(widths)} {','.join(map(str, widths))}")
    text = "\n".join(lines) + "\n"
    if args.output == "-":
        print(text, end="")
    else:
        with open(args.output, "w") as f:
            f.write(text)


if __name__ == "__main__":
    main()
