"""Partitions as plain tuples, plus the predicates and enumerators built on them.

A partition is a weakly decreasing tuple of positive integers; the empty
partition is ``()``.  Compositions are tuples of non-negative integers and may
contain zeros.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, product
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Sort ``parts`` decreasingly and drop zeros."""
    out = tuple(sorted((x for x in parts if x), reverse=True))
    if out and out[-1] < 0:
        raise ValueError(f"negative part in {out}")
    return out


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def size(la: Sequence[int]) -> int:
    return sum(la)


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for x in la if x > c) for c in range(la[0]))


def dominates(la: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance on partitions or compositions: equal sums and prefix sums of
    ``la`` at least those of ``mu``."""
    if sum(la) != sum(mu):
        return False
    n = max(len(la), len(mu))
    a = list(la) + [0] * (n - len(la))
    b = list(mu) + [0] * (n - len(mu))
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def contains(la: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` lies inside the diagram of ``la``."""
    return len(mu) <= len(la) and all(m <= l for l, m in zip(la, mu))


def plus(la: Partition, mu: Partition) -> Partition:
    n = max(len(la), len(mu))
    a = list(la) + [0] * (n - len(la))
    b = list(mu) + [0] * (n - len(mu))
    return tuple(x + y for x, y in zip(a, b))


def union_sorted(la: Partition, mu: Partition) -> Partition:
    return tuple(sorted(la + mu, reverse=True))


def parity_a(la: Sequence[int]) -> int:
    """0 if ``la`` has an even number of positive even parts, else 1."""
    return sum(1 for x in la if x > 0 and x % 2 == 0) % 2


def is_strict(la: Partition) -> bool:
    return all(la[i] > la[i + 1] for i in range(len(la) - 1))


def is_p_strict(la: Partition, p: int) -> bool:
    return all(la[i] > la[i + 1] or la[i] % p == 0 for i in range(len(la) - 1))


def is_restricted(la: Partition, p: int) -> bool:
    # the trailing zero part counts as lambda_{h+1}
    if not is_p_strict(la, p):
        return False
    padded = tuple(la) + (0,)
    for r in range(len(la)):
        gap = padded[r] - padded[r + 1]
        if gap < p or (gap == p and padded[r] % p):
            continue
        return False
    return True


def is_p_prime(la: Partition, p: int) -> bool:
    return all(x % p for x in la)


def residue(p: int, row: int, col: int) -> int:
    """Residue of the node in column ``col``; rows play no role."""
    del row
    return min((col - 1) % p, (-col) % p)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return []
    return list(_partitions(n, n))


def enumerate_strict(n: int) -> list[Partition]:
    return [la for la in enumerate_partitions(n) if is_strict(la)]


def partitions_inside(outer: Partition, n: int) -> list[Partition]:
    """Partitions of ``n`` whose diagram fits inside ``outer``."""

    def rec(i: int, remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for x in range(min(cap, outer[i], remaining), 0, -1):
            for rest in rec(i + 1, remaining - x, x):
                yield (x,) + rest

    if n < 0 or n > sum(outer):
        return []
    return list(rec(0, n, outer[0] if outer else 0))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into exactly ``k`` parts, lexicographically
    decreasing."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_multipartitions(index_count: int, d: int) -> list[Multipartition]:
    """All ``index_count``-tuples of partitions of total size ``d``.

    Ordered by the size vector (lexicographically decreasing), then by the
    components in reverse-lexicographic order.
    """
    out: list[Multipartition] = []
    for sizes in compositions(d, index_count):
        out.extend(product(*(enumerate_partitions(s) for s in sizes)))
    return out


def canonical_order(labels: Iterable[Partition]) -> list[Partition]:
    """Reverse-lexicographic order used for all matrix labels."""
    return sorted(labels, reverse=True)


def format_partition(la: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in la) + ")"


def format_multipartition(q: Sequence[Sequence[int]]) -> str:
    return "(" + ",".join(format_partition(c) for c in q) + ")"


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,1"`` (optionally wrapped in quotes or brackets); an empty
    string is the empty partition."""
    s = text.strip().strip("'\"").strip()
    if s[:1] in "([" and s[-1:] in ")]":
        s = s[1:-1]
    s = s.strip()
    if not s or s == "∅":
        return ()
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"not a decreasing list of positive integers: {text!r}")
    return tuple(parts)
