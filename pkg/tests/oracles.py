"""Brute-force symmetric polynomial oracles in NVARS variables.

A symmetric polynomial is stored by its monomial coordinates {mu: coeff}.
Schur and Schur P polynomials are expanded by counting fillings of cell sets
directly; products are taken coefficientwise on exponent vectors, then peeled
back into a basis by repeatedly removing the lex-largest monomial.
Nothing in here imports the package under test.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

NVARS = 10


def partitions(n, max_part=None, max_len=NVARS):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k, max_len - 1):
            yield (k,) + rest


def strict_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - k, k - 1):
            yield (k,) + rest


def _cells(lam, shifted):
    return frozenset((r, (r if shifted else 0) + c) for r, x in enumerate(lam) for c in range(x))


def _sub_shapes(lam, strict):
    """All (strict) partitions contained in lam."""
    def rec(r, prev):
        if r == len(lam):
            yield ()
            return
        yield ()
        top = min(lam[r], prev if not strict else prev - 1)
        for x in range(1, top + 1):
            for rest in rec(r + 1, x):
                yield (x,) + rest
    return list(rec(0, 10 ** 6))


def _one_per_col(cells):
    return max(Counter(c for _, c in cells).values(), default=0) <= 1


def _one_per_row(cells):
    return max(Counter(r for r, _ in cells).values(), default=0) <= 1


@lru_cache(maxsize=None)
def _steps(lam, strict):
    """Pairs (small, big) of shapes inside lam with their cell differences."""
    shapes = _sub_shapes(lam, strict)
    cell = {s: _cells(s, strict) for s in shapes}
    out = {}
    for a in shapes:
        out[a] = [(b, cell[b] - cell[a]) for b in shapes if cell[a] <= cell[b]]
    return out


@lru_cache(maxsize=None)
def schur_monomial(lam):
    """{mu: Kostka number K_{lam, mu}}: semistandard tableaux counted letter by letter."""
    n = sum(lam)
    steps = _steps(lam, False)
    out = {}
    for mu in partitions(n):
        states = {(): 1}
        for m in mu:
            nxt = Counter()
            for s, c in states.items():
                for b, diff in steps[s]:
                    if len(diff) == m and _one_per_col(diff):
                        nxt[b] += c
            states = nxt
        if states.get(lam):
            out[mu] = states[lam]
    return out


@lru_cache(maxsize=None)
def schur_P_monomial(lam):
    """{mu: coeff} of Schur's P_lam: marked shifted tableaux with unprimed diagonal.

    Letter k contributes primed cells (at most one per row, never on the
    diagonal) followed by unprimed cells (at most one per column).
    """
    n = sum(lam)
    steps = _steps(lam, True)
    out = {}
    for mu in partitions(n):
        states = {(): 1}
        for m in mu:
            nxt = Counter()
            for s, c in states.items():
                for mid, primed in steps[s]:
                    if len(primed) > m or not _one_per_row(primed):
                        continue
                    if any(r == col for r, col in primed):
                        continue
                    for b, plain in steps[mid]:
                        if len(primed) + len(plain) == m and _one_per_col(plain):
                            nxt[b] += c
            states = nxt
        if states.get(lam):
            out[mu] = states[lam]
    return out


def multiply(f, g):
    """Product of two symmetric polynomials in monomial coordinates."""
    if not f or not g:
        return {}
    n = sum(next(iter(f))) + sum(next(iter(g)))
    out = {}
    for mu in partitions(n):
        mu_v = list(mu) + [0] * (NVARS - len(mu))
        total = 0
        for alpha in product(*(range(x + 1) for x in mu_v)):
            a = tuple(sorted((x for x in alpha if x), reverse=True))
            b = tuple(sorted((x - y for x, y in zip(mu_v, alpha) if x - y), reverse=True))
            fa = f.get(a)
            if fa:
                gb = g.get(b)
                if gb:
                    total += fa * gb
        if total:
            out[mu] = total
    return out


def scale(f, c):
    return {k: v * c for k, v in f.items()}


def peel(f, basis):
    """Coordinates of f in a unitriangular basis {lam: monomial expansion}."""
    f = dict(f)
    out = {}
    while f:
        top = max(f)
        b = basis(top)
        lead = b[top]
        c, r = divmod(f[top], lead)
        assert r == 0, "non-integral peel"
        out[top] = c
        for k, v in b.items():
            nv = f.get(k, 0) - c * v
            if nv:
                f[k] = nv
            else:
                f.pop(k, None)
    return out


def h(r):
    return schur_monomial((r,)) if r else {(): 1}


def e(r):
    return schur_monomial((1,) * r) if r else {(): 1}


def q(r):
    return scale(schur_P_monomial((r,)), 2) if r else {(): 1}


def schur_times(lam, g):
    return peel(multiply(schur_monomial(lam) if lam else {(): 1}, g), schur_monomial)


def P_times(lam, g):
    def basis(mu):
        return schur_P_monomial(mu)
    return peel(multiply(schur_P_monomial(lam) if lam else {(): 1}, g), basis)
