"""Bar-cores, bar-quotients and RoCK cores for p-strict partitions.

Beads: a part x sits on runner x mod p at level x // p.  Runner 0 carries the
parts divisible by p (repeats allowed).  For 1 <= i <= l the runners i and
p-i are read together as one Maya diagram M_i in Z:

    k >= 0 is occupied  iff  i + k*p is a part,
    -1-k is occupied    iff  (p-i) + k*p is NOT a part.

Removing a p-bar moves one bead of one M_i down by a step (or shortens a
p-divisible part by p), so the core is the ground state of every M_i with
runner 0 emptied, and the quotient records the partitions of the M_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .arith import GlobalParams
from .partitions import (Multipartition, Partition, PartitionError, content,
                         is_p_strict, is_strict, make_partition, multipartitions,
                         size)


class NotACoreError(ValueError):
    pass


def _check(lam: Partition, prm: GlobalParams):
    if not is_p_strict(lam, prm.p):
        raise PartitionError(f"{lam} is not {prm.p}-strict")


# ---------------------------------------------------------------- bar removal

def bar_removals(lam: Partition, p: int) -> Iterator[Partition]:
    """All partitions obtained from lam by removing one p-bar."""
    parts = list(lam)
    seen = set()
    for k, x in enumerate(parts):
        if x in seen:
            continue
        seen.add(x)
        rest = parts[:k] + parts[k + 1:]
        if x == p:
            yield tuple(rest)
        elif x > p:
            y = x - p
            if y % p == 0 or y not in rest:
                yield tuple(sorted(rest + [y], reverse=True))
    distinct = sorted(set(parts))
    for a in distinct:
        b = p - a
        if 0 < a < b and b in distinct:
            rest = list(parts)
            rest.remove(a)
            rest.remove(b)
            yield tuple(rest)


def bar_core(lam: Partition, prm: GlobalParams) -> Partition:
    """Remove p-bars until none is left."""
    _check(lam, prm)
    cur = tuple(lam)
    while True:
        nxt = next(bar_removals(cur, prm.p), None)
        if nxt is None:
            return cur
        cur = nxt


def is_bar_core(lam: Partition, prm: GlobalParams) -> bool:
    return is_p_strict(lam, prm.p) and next(bar_removals(tuple(lam), prm.p), None) is None


def bar_weight(lam: Partition, prm: GlobalParams) -> int:
    return (size(lam) - size(bar_core(lam, prm))) // prm.p


# ---------------------------------------------------------------- Maya diagrams

def _runner_levels(lam: Partition, r: int, p: int) -> list[int]:
    return sorted((x // p for x in lam if x % p == r), reverse=True)


def _maya_partition(pos: list[int], neg_free: list[int], depth: int) -> tuple[int, Partition]:
    """Charge and partition of the Maya diagram

    S = pos ∪ {-1-k : 0 <= k < depth, k not in neg_free} ∪ (-inf, -1-depth].
    """
    occupied = sorted(set(pos) | {-1 - k for k in range(depth) if k not in set(neg_free)},
                      reverse=True)
    charge = len(pos) - len(neg_free)
    parts = [s - (charge - r) for r, s in enumerate(occupied, start=1)]
    return charge, tuple(x for x in parts if x > 0)


def _maya_from_partition(charge: int, lam: Partition) -> tuple[list[int], list[int]]:
    """Inverse of _maya_partition: (levels on runner i, levels on runner p-i)."""
    n = len(lam) + abs(charge) + 1
    occupied = {(lam[r - 1] if r <= len(lam) else 0) + charge - r for r in range(1, n + 1)}
    floor = charge - n  # everything below is occupied
    pos = sorted(s for s in occupied if s >= 0)
    neg_free = sorted(k for k in range(0, max(0, -floor)) if -1 - k not in occupied and -1 - k > floor)
    return pos, neg_free


def _pair_maya(lam: Partition, i: int, p: int) -> tuple[int, Partition]:
    pos = _runner_levels(lam, i, p)
    neg = _runner_levels(lam, p - i, p)
    depth = (max(neg) + 1) if neg else 0
    return _maya_partition(pos, neg, depth)


def charges(lam: Partition, prm: GlobalParams) -> tuple[int, ...]:
    """(a_i - b_i) for i = 1..l: parts = i minus parts = -i mod p."""
    p = prm.p
    return tuple(sum(1 for x in lam if x % p == i) - sum(1 for x in lam if x % p == p - i)
                 for i in range(1, prm.ell + 1))


def bar_quotient(lam: Partition, prm: GlobalParams) -> Multipartition:
    _check(lam, prm)
    p = prm.p
    comps = [tuple(x // p for x in lam if x % p == 0)]
    for i in range(1, prm.ell + 1):
        # component i comes from runners (i, p-i), untransposed: with this
        # orientation f(k, j) adds a horizontal strip to component j and a
        # vertical strip to component j+1
        comps.append(_pair_maya(lam, i, p)[1])
    return tuple(comps)


def core_from_charges(ch: tuple[int, ...], prm: GlobalParams) -> Partition:
    p = prm.p
    parts = []
    for i, c in enumerate(ch, start=1):
        r = i if c >= 0 else p - i
        parts += [r + k * p for k in range(abs(c))]
    return tuple(sorted(parts, reverse=True))


def from_core_quotient(core: Partition, quot: Multipartition, prm: GlobalParams) -> Partition:
    """The unique p-strict partition with the given bar-core and bar-quotient."""
    if not is_bar_core(core, prm):
        raise NotACoreError(f"{core} is not a {prm.p}-bar core")
    if len(quot) != prm.ell + 1:
        raise ValueError("quotient must have l+1 components")
    p = prm.p
    parts = [p * x for x in quot[0]]
    for i, c in enumerate(charges(core, prm), start=1):
        pos, neg_free = _maya_from_partition(c, quot[i])
        parts += [i + k * p for k in pos]
        parts += [p - i + k * p for k in neg_free]
    return make_partition(sorted(parts, reverse=True))


@dataclass(frozen=True)
class CoreQuotientData:
    core: Partition
    weight: int
    quotient: Multipartition


def core_quotient(lam: Partition, prm: GlobalParams) -> CoreQuotientData:
    return CoreQuotientData(bar_core(lam, prm), bar_weight(lam, prm), bar_quotient(lam, prm))


# ---------------------------------------------------------------- enumeration

def p_strict_partitions_direct(n: int, p: int, max_part: int | None = None) -> Iterator[Partition]:
    """p-strict partitions of n with parts <= max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        nxt_max = first if first % p == 0 else first - 1
        for rest in p_strict_partitions_direct(n - first, p, nxt_max):
            yield (first,) + rest


def enumerate_class(core: Partition, d: int, prm: GlobalParams, strict_only: bool = False,
                    method: str = "quotient") -> list[Partition]:
    """All p-strict partitions with the given bar-core and bar-weight d."""
    if not is_bar_core(core, prm):
        raise NotACoreError(f"{core} is not a {prm.p}-bar core")
    if method == "filter":
        n = size(core) + prm.p * d
        out = [lam for lam in p_strict_partitions_direct(n, prm.p)
               if (not strict_only or is_strict(lam)) and bar_core(lam, prm) == core]
    elif method == "quotient":
        out = [from_core_quotient(core, mp, prm)
               for mp in multipartitions(d, prm.ell + 1, strict0=strict_only)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(out)


def bar_cores(max_size: int, prm: GlobalParams) -> list[Partition]:
    """All p-bar cores of size <= max_size, by filtering p-strict partitions."""
    return [lam for n in range(max_size + 1)
            for lam in p_strict_partitions_direct(n, prm.p) if is_bar_core(lam, prm)]


def bar_cores_by_charge(max_size: int, prm: GlobalParams) -> list[Partition]:
    """Same set as bar_cores, generated from the runner charges."""
    p = prm.p
    out = []

    def cost(i, c):
        r = i if c >= 0 else p - i
        k = abs(c)
        return k * r + p * k * (k - 1) // 2

    def rec(i, budget, acc):
        if i > prm.ell:
            out.append(core_from_charges(tuple(acc), prm))
            return
        c = 0
        while cost(i, c) <= budget:
            rec(i + 1, budget - cost(i, c), acc + [c])
            if c != 0 and cost(i, -c) <= budget:
                rec(i + 1, budget - cost(i, -c), acc + [-c])
            c += 1

    rec(1, max_size, [])
    return sorted(out, key=lambda lam: (size(lam), lam))


# ---------------------------------------------------------------- RoCK

def theta(core: Partition, d: int, prm: GlobalParams) -> tuple[int, ...]:
    """cont(core) + d*delta in the simple-root basis."""
    c = content(core, prm)
    return tuple(x + d * y for x, y in zip(c, prm.delta))


def coroot_pairings(theta_vec: tuple[int, ...], prm: GlobalParams) -> tuple[int, ...]:
    """(theta | alpha_i^vee) = 2 (theta|alpha_i) / (alpha_i|alpha_i) for each i."""
    out = []
    for i in prm.I:
        num = 2 * sum(prm.gram[i][j] * theta_vec[j] for j in prm.I)
        q, r = divmod(num, prm.gram[i][i])
        assert r == 0
        out.append(q)
    return tuple(out)


def is_rock(core: Partition, d: int, prm: GlobalParams) -> bool:
    """(theta|a_0^vee) >= 2d and (theta|a_i^vee) >= d-1 for 1 <= i < l.

    The last coroot is left out on purpose.  In terms of runner charges the
    pairings are (2c_1, c_2-c_1, ..., c_l-c_{l-1}, -c_l), and they satisfy
    x_0 + 2(x_1 + ... + x_l) = 0, so a bound on x_l as well would leave no
    RoCK core for any d >= 1.  See literal_rock_condition.
    """
    if not is_bar_core(core, prm):
        raise NotACoreError(f"{core} is not a {prm.p}-bar core")
    pr = coroot_pairings(theta(core, d, prm), prm)
    return pr[0] >= 2 * d and all(x >= d - 1 for x in pr[1:prm.ell])


def literal_rock_condition(core: Partition, d: int, prm: GlobalParams) -> bool:
    """The inequalities over all of 1..l; unsatisfiable once d >= 1."""
    pr = coroot_pairings(theta(core, d, prm), prm)
    return pr[0] >= 2 * d and all(x >= d - 1 for x in pr[1:])


@lru_cache(maxsize=None)
def _rock_cores(d: int, prm: GlobalParams, max_size: int, method: str) -> tuple[Partition, ...]:
    cores = bar_cores(max_size, prm) if method == "filter" else bar_cores_by_charge(max_size, prm)
    return tuple(c for c in cores if is_rock(c, d, prm))


def find_rock_cores(d: int, prm: GlobalParams, max_size: int, method: str = "filter") -> list[Partition]:
    return list(_rock_cores(d, prm, max_size, method))


def smallest_rock_core(d: int, prm: GlobalParams) -> Partition:
    """The unique RoCK core of minimal size.

    The inequalities read c_1 >= d and c_{i+1} - c_i >= d-1 on runner charges,
    and the core size grows with every |c_i|, so equality throughout wins.
    """
    if d == 0:
        return ()
    return core_from_charges(tuple(d + k * (d - 1) for k in range(prm.ell)), prm)
