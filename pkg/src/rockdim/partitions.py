"""p-strict partition combinatorics.

Partitions are tuples of positive integers in weakly decreasing order, the
empty tuple being the empty partition.  Nodes are (row, col) pairs, 1-based.
A multipartition is a tuple of l+1 partitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .arith import ONE, GlobalParams, LaurentPoly

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
Node = tuple[int, int]


class PartitionError(ValueError):
    pass


def make_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in parts)
    if any(x <= 0 for x in lam):
        raise PartitionError(f"parts must be positive: {lam}")
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise PartitionError(f"parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(s: str) -> Partition:
    s = s.strip().strip("()")
    if not s:
        return ()
    return make_partition(int(x) for x in s.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def parse_multipartition(s: str) -> Multipartition:
    return tuple(parse_partition(c) for c in s.split("|"))


def format_multipartition(mp: Multipartition) -> str:
    return "|".join(format_partition(c) for c in mp)


def size(lam: Partition) -> int:
    return sum(lam)


def multi_size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def exponent_form(lam: Partition) -> list[tuple[int, int]]:
    """[(l_1, m_1), ..., (l_k, m_k)] with l_1 > ... > l_k."""
    out: list[tuple[int, int]] = []
    for x in lam:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def is_p_strict(lam: Sequence[int], p: int) -> bool:
    """Every repeated part is divisible by p (p=0: all parts distinct)."""
    for k in range(len(lam) - 1):
        if lam[k] == lam[k + 1] and (p == 0 or lam[k] % p):
            return False
    return True


def is_strict(lam: Sequence[int]) -> bool:
    return is_p_strict(lam, 0)


def is_strict_multi(mp: Multipartition) -> bool:
    return is_strict(mp[0])


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def p_strict_partitions(n: int, p: int) -> tuple[Partition, ...]:
    return tuple(lam for lam in partitions_of(n) if is_p_strict(lam, p))


def multipartitions(d: int, ncomp: int, strict0: bool = False) -> Iterator[Multipartition]:
    """All ncomp-multipartitions of d (optionally with strict 0th component)."""
    def rec(remaining, k):
        if k == ncomp - 1:
            for lam in partitions_of(remaining):
                yield (lam,)
            return
        for s in range(remaining + 1):
            for lam in partitions_of(s):
                for rest in rec(remaining - s, k + 1):
                    yield (lam,) + rest

    for mp in rec(d, 0):
        if not strict0 or is_strict(mp[0]):
            yield mp


def compositions(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of d into n nonnegative parts."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions(d - first, n - 1):
            yield (first,) + rest


# ---------------------------------------------------------------- residues

def residue(col: int, prm: GlobalParams) -> int:
    if col < 1:
        raise ValueError("columns are 1-based")
    t = (col - 1) % prm.p
    return t if t <= prm.ell else prm.p - 1 - t


def content(lam: Partition, prm: GlobalParams) -> tuple[int, ...]:
    c = [0] * (prm.ell + 1)
    for x in lam:
        for col in range(1, x + 1):
            c[residue(col, prm)] += 1
    return tuple(c)


def c_nonzero(lam: Partition, prm: GlobalParams) -> int:
    return size(lam) - content(lam, prm)[0]


# ---------------------------------------------------------------- statistics

def h(lam: Partition) -> int:
    return len(lam)


def h_p(lam: Partition, p: int) -> int:
    return sum(1 for x in lam if x % p == 0)


def parity(lam: Partition) -> int:
    """1 iff lam has an odd number of even parts; defined for strict lam only."""
    if not is_strict(lam):
        raise PartitionError(f"parity is only defined for strict partitions: {lam}")
    return sum(1 for x in lam if x % 2 == 0) % 2


def zeta_factor(m: int) -> LaurentPoly:
    """1 - (-q^2)^m."""
    return ONE - LaurentPoly.monomial(2 * m, (-1) ** m)


def norm_q(lam: Partition, p: int) -> LaurentPoly:
    out = ONE
    for l, m in exponent_form(lam):
        if l % p == 0:
            for s in range(1, m + 1):
                out = out * zeta_factor(s)
    return out


class Stats(NamedTuple):
    h: int
    h_p: int
    parity: int
    norm_q: LaurentPoly


def stats(lam: Partition, prm: GlobalParams) -> Stats:
    par = parity(lam) if is_strict(lam) else None
    return Stats(h(lam), h_p(lam, prm.p), par, norm_q(lam, prm.p))


def contains(lam: Partition, alpha: Partition) -> bool:
    return len(alpha) <= len(lam) and all(a <= l for a, l in zip(alpha, lam))


def q_skew(lam: Partition, alpha: Partition) -> int:
    """Number of columns r such that lam/alpha meets column r but not column r+1."""
    if not contains(lam, alpha):
        raise PartitionError(f"{alpha} is not contained in {lam}")
    cols = set()
    for r, x in enumerate(lam):
        a = alpha[r] if r < len(alpha) else 0
        cols.update(range(a + 1, x + 1))
    return sum(1 for c in cols if c + 1 not in cols)


# ---------------------------------------------------------------- strips

def horizontal_strips(alpha: Partition, r: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions mu containing alpha with mu/alpha a horizontal strip of size r.

    With ``bound`` given, only mu contained in bound are produced.
    """
    n = len(alpha) + 1
    a = list(alpha) + [0]
    if bound is not None:
        if len(bound) < len(alpha):
            return
        b = list(bound[:n]) + [0] * (n - min(n, len(bound)))
    else:
        b = None

    def rec(k, remaining, acc):
        if k == n:
            if remaining == 0:
                yield tuple(x for x in acc if x > 0)
            return
        hi = a[k] + remaining if k == 0 else min(a[k - 1], a[k] + remaining)
        if b is not None:
            hi = min(hi, b[k])
        for x in range(a[k], hi + 1):
            yield from rec(k + 1, remaining - (x - a[k]), acc + [x])

    yield from rec(0, r, [])


def vertical_strips(alpha: Partition, r: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Partitions mu containing alpha with mu/alpha a vertical strip of size r."""
    n = len(alpha) + r
    a = list(alpha) + [0] * r
    if bound is not None:
        if len(bound) < len(alpha):
            return
        b = list(bound[:n]) + [0] * max(0, n - len(bound))
    else:
        b = None

    def rec(k, remaining, acc):
        if remaining == 0:
            tail = acc + a[k:]
            yield tuple(x for x in tail if x > 0)
            return
        if k == n:
            return
        opts = (0, 1)
        for e in opts:
            x = a[k] + e
            if k > 0 and x > acc[k - 1]:
                continue
            if b is not None and x > b[k]:
                continue
            if remaining - e > n - k - 1:
                continue
            yield from rec(k + 1, remaining - e, acc + [x])

    yield from rec(0, r, [])


# ---------------------------------------------------------------- nodes

class NodeSets(NamedTuple):
    addable: frozenset      # Ad_i
    removable: frozenset    # Re_i
    proper_addable: frozenset   # PAd_i
    proper_removable: frozenset  # PRe_i


def _add_node(lam: Partition, row: int) -> tuple[int, ...]:
    parts = list(lam)
    if row == len(parts) + 1:
        parts.append(1)
    else:
        parts[row - 1] += 1
    return tuple(parts)


def _remove_node(lam: Partition, row: int) -> tuple[int, ...]:
    parts = list(lam)
    parts[row - 1] -= 1
    return tuple(x for x in parts if x > 0) if parts[row - 1] == 0 else tuple(parts)


def _ok(parts: Sequence[int], p: int) -> bool:
    return is_partition(parts) and is_p_strict(parts, p)


def addable_removable(lam: Partition, i: int, prm: GlobalParams) -> NodeSets:
    p = prm.p
    if not is_p_strict(lam, p):
        raise PartitionError(f"{lam} is not {p}-strict")
    ad, re, pad, pre = set(), set(), set(), set()
    n = len(lam)
    for row in range(1, n + 2):
        cur = lam[row - 1] if row <= n else 0
        col = cur + 1
        plus = _add_node(lam, row)
        if _ok(plus, p):
            if residue(col, prm) == i:
                pad.add((row, col))  # single node, result stays p-strict
            if i == 0 and residue(col, prm) == 0 and residue(col + 1, prm) == 0:
                # domino of two 0-nodes: the end-of-row node is A, the node right of it is B
                plus2 = _add_node(plus, row)
                if _ok(plus2, p):
                    ad.add((row, col + 1))
        if row <= n:
            minus = _remove_node(lam, row)
            if residue(cur, prm) == i:
                if _ok(minus, p):
                    pre.add((row, cur))  # single node, result stays p-strict
            if i == 0 and cur >= 2 and residue(cur, prm) == 0 and residue(cur - 1, prm) == 0:
                # domino of two 0-nodes: the end-of-row node is B, the node left of it is A
                if _ok(minus, p) and _ok(_remove_node(minus, row), p):
                    re.add((row, cur - 1))
    ad |= pad
    re |= pre
    for s in (ad, re):
        cols = [c for _, c in s]
        if len(cols) != len(set(cols)):
            raise AssertionError(f"two {i}-nodes share a column for {lam}: {sorted(s)}")
    return NodeSets(frozenset(ad), frozenset(re), frozenset(pad), frozenset(pre))


@dataclass(frozen=True)
class NodeCoefficient:
    eta: int
    zeta: LaurentPoly
    value: LaurentPoly


def _multiplicity(lam: Partition, l: int) -> int:
    return sum(1 for x in lam if x == l)


def node_coeff_removable(lam: Partition, node: Node, i: int, prm: GlobalParams,
                         sets: NodeSets | None = None) -> NodeCoefficient:
    sets = sets or addable_removable(lam, i, prm)
    if node not in sets.proper_removable:
        raise PartitionError(f"{node} is not properly {i}-removable for {lam}")
    col = node[1]
    eta = (sum(1 for c in sets.removable if c[1] > col)
           - sum(1 for c in sets.addable if c[1] > col))
    zeta = zeta_factor(_multiplicity(lam, col)) if col % prm.p == 0 else ONE
    return NodeCoefficient(eta, zeta, zeta.shift(prm.half_norm(i) * eta))


def node_coeff_addable(lam: Partition, node: Node, i: int, prm: GlobalParams,
                       sets: NodeSets | None = None) -> NodeCoefficient:
    sets = sets or addable_removable(lam, i, prm)
    if node not in sets.proper_addable:
        raise PartitionError(f"{node} is not properly {i}-addable for {lam}")
    col = node[1]
    eta = (sum(1 for c in sets.addable if c[1] < col)
           - sum(1 for c in sets.removable if c[1] < col))
    l = col - 1
    zeta = zeta_factor(_multiplicity(lam, l)) if l > 0 and l % prm.p == 0 else ONE
    return NodeCoefficient(eta, zeta, zeta.shift(prm.half_norm(i) * eta))


def add_node(lam: Partition, node: Node) -> Partition:
    return make_partition(_add_node(lam, node[0]))


def remove_node(lam: Partition, node: Node) -> Partition:
    return make_partition(_remove_node(lam, node[0]))


# ---------------------------------------------------------------- colored tableaux

@dataclass(frozen=True)
class ColoredComposition:
    mu: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))
        object.__setattr__(self, "colors", tuple(int(x) for x in self.colors))
        if len(self.mu) != len(self.colors):
            raise ValueError("mu and colors must have equal length")
        if any(x < 0 for x in self.mu):
            raise ValueError("composition parts must be nonnegative")

    @property
    def d(self) -> int:
        return sum(self.mu)

    @property
    def n(self) -> int:
        return len(self.mu)

    def check(self, prm: GlobalParams) -> "ColoredComposition":
        if any(j not in prm.J for j in self.colors):
            raise ValueError(f"colors must lie in J={prm.J}: {self.colors}")
        return self

    def permuted(self, perm: Sequence[int]) -> "ColoredComposition":
        return ColoredComposition(tuple(self.mu[k] for k in perm),
                                  tuple(self.colors[k] for k in perm))


def omega(d: int) -> tuple[int, ...]:
    return (1,) * d


@dataclass(frozen=True)
class ColoredTableau:
    filling: tuple[tuple[tuple[int, int, int], int], ...]  # ((comp,row,col), value)
    q_stats: tuple[int, ...]

    @property
    def q(self) -> int:
        return sum(self.q_stats)


def _color_steps(shape: Multipartition, cc: ColoredComposition, strict_intermediate: bool):
    """Yield chains (multipartition_0 ⊂ ... ⊂ multipartition_n = shape) with q_k stats."""
    ncomp = len(shape)
    empty = tuple(() for _ in range(ncomp))

    def rec(k, cur, qs, chain):
        if k == cc.n:
            if cur == shape:
                yield chain, tuple(qs)
            return
        m, j = cc.mu[k], cc.colors[k]
        if j + 1 >= ncomp:
            return
        for a in range(m + 1):
            for hs in horizontal_strips(cur[j], a, shape[j]):
                if j == 0 and strict_intermediate and not is_strict(hs):
                    continue
                for vs in vertical_strips(cur[j + 1], m - a, shape[j + 1]):
                    nxt = list(cur)
                    nxt[j] = hs
                    nxt[j + 1] = vs
                    nxt = tuple(nxt)
                    qk = q_skew(hs, cur[0]) if j == 0 else 0
                    yield from rec(k + 1, nxt, qs + [qk], chain + [nxt])

    yield from rec(0, empty, [], [empty])


def colored_tableaux(shape: Multipartition, cc: ColoredComposition, prm: GlobalParams,
                     strict_intermediate: bool = True) -> list[ColoredTableau]:
    """All colored tableaux of the given shape and type.

    With ``strict_intermediate`` (the default) the entries <= k inside the 0th
    component must form a strict partition for every k, which is what makes
    the tableau count agree with iterated q_r-Pieri products of Schur
    P-functions.  ``strict_intermediate=False`` gives the unrestricted count.
    """
    if len(shape) != prm.ell + 1:
        raise ValueError("multipartition must have l+1 components")
    cc.check(prm)
    if multi_size(shape) != cc.d:
        return []
    out = []
    for chain, qs in _color_steps(shape, cc, strict_intermediate):
        fill = []
        for k in range(1, len(chain)):
            prev, cur = chain[k - 1], chain[k]
            for comp in range(len(shape)):
                for row, x in enumerate(cur[comp], start=1):
                    a = prev[comp][row - 1] if row <= len(prev[comp]) else 0
                    for col in range(a + 1, x + 1):
                        fill.append(((comp, row, col), k))
        out.append(ColoredTableau(tuple(sorted(fill)), qs))
    return out


def K_coeff(shape: Multipartition, cc: ColoredComposition, prm: GlobalParams,
            strict_intermediate: bool = True) -> int:
    return sum(2 ** t.q for t in colored_tableaux(shape, cc, prm, strict_intermediate))
