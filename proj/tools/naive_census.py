#!/usr/bin/env python3
"""Deliberately naive census of small monoids and acts.

Enumerates every multiplication table / action table outright, filters by the
axioms, and counts isomorphism classes by brute-force canonicalization over
all relabelings.  No pruning, no cleverness: this is the independent oracle
the optimized enumerator is checked against.

Output is JSON on stdout:

  {
    "monoids": {"1": c1, "2": c2, ...},
    "acts": {"<monoid key>": {"1": a1, "2": a2, ...}, ...}
  }

A monoid key is "n/e0/r00 r01 ... ;r10 ..." for the canonical table with the
identity relabeled to 0.
"""

import argparse
import itertools
import json
import sys


def find_identity(table, n):
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def is_associative(table, n):
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    return False
    return True


def monoid_key(table, n, e):
    """Lexicographically least flattened table over relabelings sending e to 0."""
    best = None
    rest = [i for i in range(n) if i != e]
    for perm in itertools.permutations(rest):
        sigma = [0] * n
        sigma[e] = 0
        for new, old in enumerate(perm, start=1):
            sigma[old] = new
        inv = [0] * n
        for old, new in enumerate(sigma):
            inv[new] = old
        flat = tuple(
            sigma[table[inv[x]][inv[y]]] for x in range(n) for y in range(n)
        )
        if best is None or flat < best:
            best = flat
    rows = ";".join(
        " ".join(str(best[r * n + c]) for c in range(n)) for r in range(n)
    )
    return "%d/0/%s" % (n, rows)


def enumerate_monoids(n):
    """All monoids of order n up to isomorphism, as canonical keys -> table."""
    found = {}
    for cells in itertools.product(range(n), repeat=n * n):
        table = [list(cells[r * n : (r + 1) * n]) for r in range(n)]
        e = find_identity(table, n)
        if e is None:
            continue
        if not is_associative(table, n):
            continue
        key = monoid_key(table, n, e)
        if key not in found:
            found[key] = (table, e)
    return found


def act_canonical(action, m, n):
    best = None
    for perm in itertools.permutations(range(m)):
        flat = tuple(
            perm[action[a][s]] for a in range(m) for s in range(n)
        )
        # reorder rows so row i of the relabeled act is the image of perm^-1(i)
        inv = [0] * m
        for old, new in enumerate(perm):
            inv[new] = old
        flat = tuple(
            perm[action[inv[a]][s]] for a in range(m) for s in range(n)
        )
        if best is None or flat < best:
            best = flat
    return best


def count_acts(table, n, e, m):
    seen = set()
    for cells in itertools.product(range(m), repeat=m * n):
        action = [list(cells[a * n : (a + 1) * n]) for a in range(m)]
        if any(action[a][e] != a for a in range(m)):
            continue
        ok = True
        for a in range(m):
            for s in range(n):
                if not ok:
                    break
                for t in range(n):
                    if action[action[a][s]][t] != action[a][table[s][t]]:
                        ok = False
                        break
            if not ok:
                break
        if not ok:
            continue
        seen.add(act_canonical(action, m, n))
    return len(seen)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=3)
    ap.add_argument("--max-act-size", type=int, default=3)
    args = ap.parse_args()

    out = {"monoids": {}, "acts": {}}
    for n in range(1, args.max_order + 1):
        monoids = enumerate_monoids(n)
        out["monoids"][str(n)] = len(monoids)
        for key in sorted(monoids):
            table, e = monoids[key]
            per_size = {}
            for m in range(1, args.max_act_size + 1):
                per_size[str(m)] = count_acts(table, n, e, m)
            out["acts"][key] = per_size
    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
