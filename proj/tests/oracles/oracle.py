"""Brute-force oracle for frozen test values.

Independent of the C++ implementation: permutations are handled directly in
one-line notation, weak order is explored by chain search, and hom spaces are
computed by a Kronecker-product nullspace over the rationals with sympy.
Run: python3 tests/oracles/oracle.py
"""
import itertools
from collections import deque

import sympy


def sym_group(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def left_gen(i, w):
    # s_i acting on values i, i+1
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def inversions(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def right_descents(w):
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_descents(w):
    pos = {x: i for i, x in enumerate(w)}
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def weak_up(u, n):
    """All v with u <=_L v, by chain search."""
    seen = {u}
    q = deque([u])
    while q:
        w = q.popleft()
        for i in range(1, n):
            x = left_gen(i, w)
            if inversions(x) == inversions(w) + 1 and x not in seen:
                seen.add(x)
                q.append(x)
    return seen


def interval(u, v, n):
    ups = weak_up(u, n)
    return sorted((w for w in ups if v in weak_up(w, n)), key=lambda w: (inversions(w), w))


def module(members, n):
    idx = {w: k for k, w in enumerate(members)}
    mats = []
    for i in range(1, n):
        m = sympy.zeros(len(members), len(members))
        for w in members:
            if i in left_descents(w):
                m[idx[w], idx[w]] = 1
            else:
                x = left_gen(i, w)
                if x in idx:
                    m[idx[x], idx[w]] = 1
        mats.append(m)
    return mats


def hom_dim(ma, mb):
    dm = ma[0].shape[0]
    dn = mb[0].shape[0]
    rows = []
    # T (dn x dm), vec column-major: T A - B T = 0
    for a, b in zip(ma, mb):
        eq = sympy.kronecker_product(a.T, sympy.eye(dn)) - sympy.kronecker_product(sympy.eye(dm), b)
        rows.append(eq)
    big = sympy.Matrix.vstack(*rows)
    return dm * dn - big.rank()


def one_line(w):
    return "".join(map(str, w))


def main():
    # signed permutations of 3 letters
    bs = [(p, signs) for p in itertools.permutations(range(1, 4))
          for signs in itertools.product([1, -1], repeat=3)]
    print("|B3| =", len(bs))

    print("D_R(4231) =", sorted(right_descents((4, 2, 3, 1))))

    census = []
    for mask in range(8):
        sset = frozenset(i + 1 for i in range(3) if mask >> i & 1)
        census.append(sum(1 for w in sym_group(4) if right_descents(w) == sset))
    print("A3 census (bitmask order) =", census)

    d1 = [w for w in sym_group(4) if right_descents(w) == frozenset({1})]
    print("v_{1} =", one_line(max(d1, key=inversions)), " u_{1} =", one_line(min(d1, key=inversions)))

    print("2134 <=_L 1243 :", (1, 2, 4, 3) in weak_up((2, 1, 3, 4), 4))
    print("|[2134,4132]_L| =", len(interval((2, 1, 3, 4), (4, 1, 3, 2), 4)))
    print("|[2134,4231]_L| =", len(interval((2, 1, 3, 4), (4, 2, 3, 1), 4)))

    def proj(I):
        cls = [w for w in sym_group(4) if right_descents(w) == frozenset(I)]
        lo = min(cls, key=inversions)
        hi = max(cls, key=inversions)
        return module(interval(lo, hi, 4), 4)

    print("dim hom(P_{1}, P_{3}) =", hom_dim(proj({1}), proj({3})))
    print("dim hom(P_{3}, P_{1}) =", hom_dim(proj({3}), proj({1})))
    print("dim End(P_{1}^{1,3}) =", hom_dim(module(interval((2, 1, 3, 4), (4, 2, 3, 1), 4), 4),
                                          module(interval((2, 1, 3, 4), (4, 2, 3, 1), 4), 4)))

    # socle of B(2143, 4132): joint eigenvectors for each simple label
    mem = interval((2, 1, 4, 3), (4, 1, 3, 2), 4)
    mats = module(mem, 4)
    total = 0
    for mask in range(8):
        blocks = [m - (sympy.eye(len(mem)) if mask >> i & 1 else sympy.zeros(len(mem)))
                  for i, m in enumerate(mats)]
        ns = sympy.Matrix.vstack(*blocks).nullspace()
        total += len(ns)
        for v in ns:
            print("  socle label", [i + 1 for i in range(3) if mask >> i & 1],
                  {one_line(mem[k]): v[k] for k in range(len(mem)) if v[k] != 0})
    print("dim soc B(2143,4132) =", total, "members", [one_line(w) for w in mem])

    # top of W_(2,2) = B(2314, 3412): hom into simples
    mem = interval((2, 3, 1, 4), (3, 4, 1, 2), 4)
    mats = module(mem, 4)
    for mask in range(8):
        blocks = [m.T - (sympy.eye(len(mem)) if mask >> i & 1 else sympy.zeros(len(mem)))
                  for i, m in enumerate(mats)]
        ns = sympy.Matrix.vstack(*blocks).nullspace()
        if ns:
            print("top W(2,2) label", [i + 1 for i in range(3) if mask >> i & 1], "mult", len(ns))

    # B(2134, 4132) splits: 4132 lies in D_{1,3}, not D_{1}
    mem = interval((2, 1, 3, 4), (4, 1, 3, 2), 4)
    mats = module(mem, 4)
    idx = {one_line(w): k for k, w in enumerate(mem)}

    def span(*vecs):
        cols = []
        for d in vecs:
            v = sympy.zeros(len(mem), 1)
            for k, c in d.items():
                v[idx[k]] = c
            cols.append(v)
        return sympy.Matrix.hstack(*cols)

    a = span({"2143": 1}, {"3142": 1}, {"4132": 1})
    b = span({"2134": 1, "2143": -1}, {"3124": 1, "3142": -1}, {"4123": 1, "4132": -1})
    invariant = all(sympy.Matrix.hstack(x, m * x).rank() == x.rank() for x in (a, b) for m in mats)
    print("dim End B(2134,4132) =", hom_dim(mats, mats), " splits 3+3:",
          invariant and sympy.Matrix.hstack(a, b).rank() == 6)
    mem = interval((2, 1, 3, 4), (4, 1, 2, 3), 4)
    print("dim End B(2134,4123) =", hom_dim(module(mem, 4), module(mem, 4)))

    # leq_L vs ascent pairs on S_4 by chain search
    agree = True
    for u in sym_group(4):
        ups = weak_up(u, 4)
        for v in sym_group(4):
            asc_v = {(i, j) for i in range(4) for j in range(i + 1, 4) if v[i] < v[j]}
            asc_u = {(i, j) for i in range(4) for j in range(i + 1, 4) if u[i] < u[j]}
            if (v in ups) != asc_v.issubset(asc_u):
                agree = False
    print("S4 ascent-pair oracle agrees with chain search:", agree)


if __name__ == "__main__":
    main()
