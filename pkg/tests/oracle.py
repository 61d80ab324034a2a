"""Slow, independent reference arithmetic used to cross-check the package.

Nothing here imports psl2rp.  Field elements are pairs ``(a0, a1)`` meaning
``a0 + a1 x`` with ``x^2 = n``; matrices are 4-tuples of such pairs.
"""

from __future__ import annotations

from itertools import product


def nonresidue(p: int) -> int:
    return next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)


class Field:
    def __init__(self, p: int, degree: int):
        self.p, self.degree = p, degree
        self.n = nonresidue(p) if degree == 2 else 0

    def elements(self):
        if self.degree == 1:
            return [(a, 0) for a in range(self.p)]
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    def code(self, x) -> int:
        return x[0] * self.p + x[1] if self.degree == 2 else x[0]

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def neg(self, x):
        return (-x[0] % self.p, -x[1] % self.p)

    def mul(self, x, y):
        p = self.p
        return ((x[0] * y[0] + self.n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def inv(self, x):
        # brute force, deliberately unrelated to the package's formulas
        return next(y for y in self.elements() if self.mul(x, y) == (1, 0))


class Matrices:
    """SL(2,q) or PSL(2,q) with naive products and breadth-first closure."""

    def __init__(self, F: Field, projective: bool):
        self.F, self.projective = F, projective
        self.one = ((1, 0), (0, 0), (0, 0), (1, 0))

    def norm(self, A):
        if not self.projective:
            return A
        return min(A, tuple(self.F.neg(x) for x in A))

    def mul(self, A, B):
        F = self.F
        a, b, c, d = A
        e, f, g, h = B
        return self.norm((
            F.add(F.mul(a, e), F.mul(b, g)), F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)), F.add(F.mul(c, f), F.mul(d, h)),
        ))

    def det(self, A):
        a, b, c, d = A
        return self.F.add(self.F.mul(a, d), self.F.neg(self.F.mul(b, c)))

    def trace(self, A):
        return self.F.add(A[0], A[3])

    def order(self, A) -> int:
        X, k = A, 1
        one = self.norm(self.one)
        while X != one:
            X = self.mul(X, A)
            k += 1
        return k

    def closure(self, gens) -> set:
        gens = [self.norm(g) for g in gens]
        seen = {self.norm(self.one)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for X in frontier:
                for g in gens:
                    Y = self.mul(X, g)
                    if Y not in seen:
                        seen.add(Y)
                        nxt.append(Y)
            frontier = nxt
        return seen

    def elements(self):
        els = self.F.elements()
        out = set()
        for A in product(els, repeat=4):
            if self.det(A) == (1, 0):
                out.add(self.norm(A))
        return sorted(out)

    def code(self, A, q: int) -> int:
        a, b, c, d = (self.F.code(x) for x in A)
        return ((a * q + b) * q + c) * q + d


def rp_failures(M: Matrices, seq) -> list:
    """Nontrivial elements that fail every slot, by brute force over the whole group."""
    G = M.elements()
    order = len(G)
    one = M.norm(M.one)
    bad = []
    for g in G:
        if g == one:
            continue
        if all(len(M.closure(seq[:i] + [g] + seq[i + 1:])) < order for i in range(len(seq))):
            bad.append(g)
    return bad


def max_irredundant(M: Matrices, group: list, up_to: int = 4) -> int:
    """Largest irredundant generating set of ``group`` (a list of matrices), by brute force."""
    from itertools import combinations

    target = len(group)
    best = 0
    for k in range(1, up_to + 1):
        for S in combinations(group, k):
            if len(M.closure(list(S))) != target:
                continue
            if all(S[i] not in M.closure(list(S[:i] + S[i + 1:])) for i in range(k)):
                best = k
                break
    return best
