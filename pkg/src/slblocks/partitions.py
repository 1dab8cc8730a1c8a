"""Partitions, abacus cores and quotients, and partition counting.

Partitions are plain tuples of weakly decreasing positive integers.
Quotient components are indexed by abacus runner: with a beta-set whose
length is a multiple of e, runner j holds the beads at positions
congruent to j modulo e.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return parts


class CoreQuotientPair(NamedTuple):
    core: Partition
    quotient: tuple[Partition, ...]
    e: int


def beta_set(lam: Partition, length: int) -> list[int]:
    """First-column hook lengths of lam padded with zeros to `length` beads."""
    if length < len(lam):
        raise ValueError("beta-set shorter than the partition")
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[i] + length - 1 - i for i in range(length)]


def from_beta_set(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(x for x in (beta[i] - (k - 1 - i) for i in range(k)) if x > 0)


def _runners(lam: Partition, e: int) -> tuple[int, list[list[int]]]:
    length = -(-len(lam) // e) * e
    runners = [[] for _ in range(e)]
    for b in beta_set(lam, length):
        runners[b % e].append(b // e)
    return length, runners


def e_core(lam: Partition, e: int) -> Partition:
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    _, runners = _runners(lam, e)
    return from_beta_set(j + e * i for j, r in enumerate(runners) for i in range(len(r)))


def is_core(lam: Partition, e: int) -> bool:
    return e_core(lam, e) == tuple(lam)


def e_weight(lam: Partition, e: int) -> int:
    return (sum(lam) - sum(e_core(lam, e))) // e


def e_quotient(lam: Partition, e: int) -> CoreQuotientPair:
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    _, runners = _runners(lam, e)
    return CoreQuotientPair(e_core(lam, e), tuple(from_beta_set(r) for r in runners), e)


def from_core_and_quotient(pair: CoreQuotientPair) -> Partition:
    core, quotient, e = pair
    if len(quotient) != e:
        raise ValueError(f"quotient must have {e} components, got {len(quotient)}")
    if not is_core(core, e):
        raise ValueError(f"{core} is not a {e}-core")
    need = max((len(mu) for mu in quotient), default=0)
    length, runners = _runners(core, e)
    counts = [len(r) for r in runners]
    shift = max(0, need - min(counts))
    length += e * shift
    beads = []
    for j, mu in enumerate(quotient):
        k = counts[j] + shift
        padded = list(mu) + [0] * (k - len(mu))
        beads.extend(j + e * (padded[i] + k - 1 - i) for i in range(k))
    assert len(beads) == length
    return from_beta_set(beads)


def partitions(m: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of m in reverse lexicographic order."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def count_partitions(m: int) -> int:
    if m < 0:
        return 0
    if m == 0:
        return 1
    # Euler's pentagonal recurrence
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > m:
            break
        sign = 1 if k % 2 else -1
        total += sign * count_partitions(m - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= m:
            total += sign * count_partitions(m - g2)
        k += 1
    return total


@lru_cache(maxsize=None)
def count_multipartitions(e: int, w: int) -> int:
    """Number of e-tuples of partitions of total size w."""
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    if w < 0:
        return 0
    if e == 1:
        return count_partitions(w)
    return sum(count_partitions(k) * count_multipartitions(e - 1, w - k) for k in range(w + 1))


@lru_cache(maxsize=None)
def partitions_with_core(m: int, e: int, core: Partition) -> tuple[Partition, ...]:
    """Partitions of m whose e-core is `core`, by explicit enumeration."""
    core = tuple(core)
    if sum(core) > m or (m - sum(core)) % e:
        return ()
    return tuple(lam for lam in partitions(m) if e_core(lam, e) == core)


@lru_cache(maxsize=None)
def cores_for(m: int, e: int) -> tuple[Partition, ...]:
    """The e-cores c with |c| <= m and |c| congruent to m mod e."""
    out = []
    for size in range(m % e, m + 1, e):
        out.extend(c for c in partitions(size) if is_core(c, e))
    return tuple(out)


def two_adic_decomposition(m: int) -> tuple[int, ...]:
    """Exponents of the binary digits of m, increasing."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return tuple(i for i in range(m.bit_length()) if m >> i & 1)
