"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Pure itertools enumeration over explicit frozensets; shares no code or
encoding with the library. Run: python3 tests/oracle/brute_force.py
"""
from itertools import combinations, permutations
from math import comb, prod


def subsets(n):
    ground = range(1, n + 1)
    return [frozenset(c) for r in range(n + 1) for c in combinations(ground, r)]


def chains(family, k):
    fam = sorted(family, key=len)
    total = 0
    def extend(last, left):
        if left == 0:
            return 1
        return sum(extend(b, left - 1) for b in fam if last < b)
    for a in fam:
        total += extend(a, k - 1)
    return total


def min_count(n, k, m):
    return min(chains(f, k) for f in combinations(subsets(n), m))


def inductive_scd(n):
    cs = [[frozenset(), frozenset({1})]]
    for m in range(2, n + 1):
        nxt = []
        for c in cs:
            nxt.append(c + [c[-1] | {m}])
            if len(c) >= 2:
                nxt.append([s | {m} for s in c[:-1]])
        cs = nxt
    return cs


def n_perm(n, chain):
    scd = inductive_scd(n)
    count = 0
    for p in permutations(range(1, n + 1)):
        img = [frozenset(p[e - 1] for e in s) for s in chain]
        if any(all(s in c for s in img) for c in scd):
            count += 1
    return count


if __name__ == "__main__":
    full2 = subsets(2)
    print("chains(2^[2], 3) =", chains(full2, 3))
    b41 = [s for s in subsets(4) if len(s) == 2]
    print("chains(B(4,1)+{123}, 2) =", chains(b41 + [frozenset({1, 2, 3})], 2))
    for m in (6, 7, 8, 9, 10):
        print("min_count(4,2,%d) =" % m, min_count(4, 2, m))
    for m in (10, 11, 12, 13, 14):
        print("min_count(4,3,%d) =" % m, min_count(4, 3, m))
    print("max free (2,2) =", max(m for m in range(5) if min_count(2, 2, m) == 0))
    print("N(4; {1},{1,2}) =", n_perm(4, [frozenset({1}), frozenset({1, 2})]))
    print("N(2; 0,{1},{1,2}) =", n_perm(2, [frozenset(), frozenset({1}), frozenset({1, 2})]))
    print("N(3; full chain) =", n_perm(3, [frozenset(), frozenset({1}), frozenset({1, 2}), frozenset({1, 2, 3})]))
    print("N(6; 2,3,4) =", n_perm(6, [frozenset({1, 2}), frozenset({1, 2, 3}), frozenset({1, 2, 3, 4})]))
    print("N(3; 0,3) =", n_perm(3, [frozenset(), frozenset({1, 2, 3})]))
    print("binom(10,3) =", comb(10, 3))
    # endpoint: B(4,2,ceil) = levels {2,3} plus {1}; 3-chains with min {1}
    f = [s for s in subsets(4) if len(s) in (2, 3)] + [frozenset({1})]
    print("min-endpoint {1}, k=3 =", sum(1 for b in f for c in f if frozenset({1}) < b < c))
    print("inductive scd(2) =", [[sorted(s) for s in c] for c in inductive_scd(2)])
    full4 = subsets(4)
    print("kleitman (4,2):", [min_count(4, 2, m) for m in range(17)])
    print("kleitman (4,3):", [min_count(4, 3, m) for m in range(17)])
    yz = {}
    for t in combinations(range(5), 2):
        yz[t] = max(comb(t[1], t[0]), comb(4 - t[0], 4 - t[1]))
    print("max{y,z} over (4,2) tuples:", yz)
    print("spanning violators n<=12, k<=4:", sum(
        1 for n in range(1, 13) for k in range(2, min(4, n + 1) + 1)
        for t in combinations(range(n + 1), k)
        if max(prod(comb(t[i + 1], t[i]) for i in range(k - 1)),
               prod(comb(n - t[i], n - t[i + 1]) for i in range(k - 1)))
        < prod((n + k) // 2 - i + 1 for i in range(1, k))))
