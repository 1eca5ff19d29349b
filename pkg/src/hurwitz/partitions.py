"""Integer-partition combinatorics and symmetric-group characters.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Characters chi_lambda(mu) are computed
by the Murnaghan-Nakayama recursion in its beta-set form (first-column hook
lengths), memoized in a module-level cache.  Cache insertion is idempotent
and each entry is an int, so concurrent readers always observe consistent
values.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Any, Iterable, Sequence

from .algebra import RATIONAL_RING, Ring

Partition = tuple[int, ...]

PARTITION_CAP = 30


class CapExceeded(ValueError):
    """A configured size cap was exceeded."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort a composition into a partition, validating positivity."""
    t = tuple(sorted(parts, reverse=True))
    if t and t[-1] < 1:
        raise ValueError(f"partition parts must be positive: {t}")
    return t


def check_partition(mu: Sequence[int]) -> Partition:
    t = tuple(mu)
    if any(a < b for a, b in zip(t, t[1:])) or (t and t[-1] < 1):
        raise ValueError(f"not a partition (weakly decreasing, positive): {t}")
    return t


def parse_partition(text: str) -> Partition:
    """Parse the CLI/JSON form "3,2,1"; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition string: {text!r}") from None
    return check_partition(parts)


def format_partition(mu: Partition) -> str:
    return ",".join(str(p) for p in mu)


def weight(mu: Partition) -> int:
    return sum(mu)


def length(mu: Partition) -> int:
    return len(mu)


def colength(mu: Partition) -> int:
    return sum(mu) - len(mu)


@lru_cache(maxsize=None)
def _partitions_rec(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_rec(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise CapExceeded(f"partitions_of({n}) exceeds cap {cap}")
    return list(_partitions_rec(n, n))


def z_of(mu: Iterable[int]) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    for i, m in Counter(mu).items():
        z *= math.factorial(m) * i ** m
    return z


def aut_of(parts: Iterable[int]) -> int:
    """prod over part values of (multiplicity)!; compositions are sorted first."""
    a = 1
    for m in Counter(parts).values():
        a *= math.factorial(m)
    return a


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths of the Young diagram of lam."""
    conj = conjugate(lam)
    h = 1
    for i, p in enumerate(lam):
        for j in range(p):
            h *= (p - j) + (conj[j] - i) - 1
    return h


def contents(lam: Partition) -> list[int]:
    """Box contents j - i in row-major order (rows and columns 1-based)."""
    return [j - i for i, p in enumerate(lam) for j in range(p)]


# -- characters ---------------------------------------------------------

_char_cache: dict[tuple[Partition, Partition], int] = {}


def character(lam: Partition, mu: Partition) -> int:
    """chi_lambda(mu) for |lam| = |mu|, by Murnaghan-Nakayama."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _char_cache.get(key)
    if hit is not None:
        return hit
    k, rest = mu[0], mu[1:]
    n = len(lam)
    # beta-set (strictly decreasing first-column hook lengths); removing a
    # border strip of size k means lowering one entry by k into a free slot
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((nb if x == b else x for x in beta), reverse=True)
        new_lam = tuple(
            v for v in (x - (n - 1 - i) for i, x in enumerate(new_beta)) if v > 0
        )
        total += (-1) ** height * _mn(new_lam, rest)
    _char_cache[key] = total
    return total


def character_cache_size() -> int:
    return len(_char_cache)


# -- numeric symmetric-function evaluators ------------------------------


def _distinct_permutations(parts: Partition):
    """All distinct rearrangements of a multiset of parts."""
    counter = Counter(parts)
    items = sorted(counter)
    k = len(parts)

    def rec(prefix: list[int]):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for v in items:
            if counter[v]:
                counter[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counter[v] += 1

    yield from rec([])


def _ring_prod(ring: Ring, factors: Iterable[Any]) -> Any:
    out = ring.one
    for f in factors:
        out = out * f
    return out


def sym_eval(kind: str, arg: int | Partition, points: Sequence[Any],
             ring: Ring = RATIONAL_RING) -> Any:
    """Evaluate e_i / h_i / m_lambda / f_lambda exactly at the given points.

    `arg` is the index i for kinds "e" and "h", a partition for "m" and "f".
    Points are ring values; all arithmetic happens in `ring`.
    """
    if kind == "e":
        i = int(arg)
        if i < 0:
            raise ValueError("negative index")
        if i > len(points):
            return ring.zero
        total = ring.zero
        for combo in combinations(points, i):
            total = total + _ring_prod(ring, combo)
        return total
    if kind == "h":
        i = int(arg)
        if i < 0:
            raise ValueError("negative index")
        total = ring.zero
        for combo in combinations_with_replacement(points, i):
            total = total + _ring_prod(ring, combo)
        return total
    if kind == "m":
        lam = as_partition(arg)  # type: ignore[arg-type]
        k = len(lam)
        if k > len(points):
            return ring.zero
        total = ring.zero
        for idx in combinations(range(len(points)), k):
            for arrangement in _distinct_permutations(lam):
                total = total + _ring_prod(
                    ring, (_ring_pow(ring, points[i], e) for i, e in zip(idx, arrangement))
                )
        return total
    if kind == "f":
        # forgotten basis at explicit points: sign (-1)^{colength}, indices
        # weakly increasing with repetitions; the 1/|aut| of the defining sum
        # over all of S_k cancels against counting distinct rearrangements
        lam = as_partition(arg)  # type: ignore[arg-type]
        k = len(lam)
        total = ring.zero
        for arrangement in _distinct_permutations(lam):
            for idx in combinations_with_replacement(range(len(points)), k):
                total = total + _ring_prod(
                    ring, (_ring_pow(ring, points[i], e) for i, e in zip(idx, arrangement))
                )
        return total if colength(lam) % 2 == 0 else -total
    raise ValueError(f"unknown symmetric function kind: {kind!r}")


def _ring_pow(ring: Ring, v: Any, e: int) -> Any:
    out = ring.one
    for _ in range(e):
        out = out * v
    return out


def set_partitions(items: Sequence[Any]):
    """All set partitions of `items`, each a list of blocks."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def compositions_of(d: int, k: int):
    """All ordered k-tuples of nonnegative integers summing to d."""
    if k == 0:
        if d == 0:
            yield ()
        return
    if k == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions_of(d - first, k - 1):
            yield (first,) + rest
