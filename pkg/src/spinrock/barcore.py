"""p-bar combinatorics: cores, weights, Rouquier cores and bar-quotients."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .partitions import (
    Multipartition,
    Partition,
    canonical_order,
    conjugate,
    contains,
    dominates,
    enumerate_multipartitions,
    is_p_prime,
    is_p_strict,
    is_restricted,
    is_strict,
    plus,
    residue,
)


def _bar_moves(la: Partition, p: int) -> list[Partition]:
    """Every partition reachable by removing one p-bar, leftmost move first."""
    moves = []
    parts = set(la)
    for r, x in enumerate(la):
        if x >= p and (x % p == 0 or (x - p) not in parts):
            rest = la[:r] + la[r + 1:] + ((x - p,) if x > p else ())
            moves.append(tuple(sorted(rest, reverse=True)))
        for s in range(r + 1, len(la)):
            if x + la[s] == p:
                moves.append(la[:r] + la[r + 1:s] + la[s + 1:])
    return moves


def bar_core(la: Partition, p: int, rng: Optional[random.Random] = None) -> tuple[Partition, int]:
    """Return ``(core, weight)`` of a p-strict partition.

    By default the leftmost applicable bar is removed at each step.  Passing
    ``rng`` picks a random applicable bar instead, which is only useful to
    check that the answer does not depend on the order.
    """
    if not is_p_strict(la, p):
        raise ValueError(f"{la} is not {p}-strict")
    weight = 0
    while True:
        moves = _bar_moves(la, p)
        if not moves:
            return la, weight
        la = rng.choice(moves) if rng is not None else moves[0]
        weight += 1


def is_bar_core(la: Partition, p: int) -> bool:
    return is_p_strict(la, p) and not _bar_moves(la, p)


def residue_content(la: Partition, p: int) -> tuple[int, ...]:
    """Number of nodes of each residue ``0..ell``."""
    ell = (p - 1) // 2
    counts = [0] * (ell + 1)
    # residues are periodic in the column with period p
    period = [residue(p, 1, c) for c in range(1, p + 1)]
    for x in la:
        full, rem = divmod(x, p)
        for c in range(p):
            counts[period[c]] += full + (1 if c < rem else 0)
    return tuple(counts)


def r_counts(rho: Partition, p: int) -> tuple[int, ...]:
    """``(r_1, ..., r_{p-1})``: how many parts lie in each nonzero class mod p."""
    return tuple(sum(1 for x in rho if x % p == i) for i in range(1, p))


def is_d_rouquier(rho: Partition, p: int, d: int) -> bool:
    if not is_bar_core(rho, p):
        return False
    if d <= 0:
        return True
    ell = (p - 1) // 2
    r = r_counts(rho, p)
    if r[0] < d:
        return False
    return all(r[i - 1] >= r[i - 2] + d - 1 for i in range(2, ell + 1))


def make_rouquier_core(p: int, d: int) -> Partition:
    """Smallest d-Rouquier core: ``r_i = d + (i-1)(d-1)`` parts ``i, i+p, ...``."""
    ell = (p - 1) // 2
    parts: list[int] = []
    for i in range(1, ell + 1):
        r = max(0, d + (i - 1) * (d - 1))
        parts.extend(i + k * p for k in range(r))
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class RouquierBlock:
    """The block of p-strict partitions with d-Rouquier core ``rho`` and weight ``d``."""

    p: int
    rho: Partition
    d: int

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or any(self.p % q == 0 for q in range(3, int(self.p ** 0.5) + 1, 2)):
            raise ValueError(f"p={self.p} is not an odd prime")
        if self.d < 0:
            raise ValueError("weight must be non-negative")
        if not is_d_rouquier(self.rho, self.p, self.d):
            raise ValueError(f"{self.rho} is not a {self.d}-Rouquier {self.p}-bar-core")

    @classmethod
    def minimal(cls, p: int, d: int) -> "RouquierBlock":
        return cls(p, make_rouquier_core(p, d), d)

    @property
    def ell(self) -> int:
        return (self.p - 1) // 2

    @property
    def r_counts(self) -> tuple[int, ...]:
        return r_counts(self.rho, self.p)

    def with_weight(self, d: int) -> "RouquierBlock":
        """Same core at a smaller weight (the core stays Rouquier)."""
        if d > self.d:
            raise ValueError(f"weight {d} exceeds the Rouquier bound {self.d}")
        return RouquierBlock(self.p, self.rho, d)

    @cached_property
    def partitions(self) -> "BlockPartitions":
        return block_partitions(self)


@dataclass(frozen=True)
class BlockPartitions:
    all: list[Partition] = field(default_factory=list)
    strict: list[Partition] = field(default_factory=list)
    restricted: list[Partition] = field(default_factory=list)
    p_prime: list[Partition] = field(default_factory=list)


def bar_quotient(la: Partition, block: RouquierBlock) -> Multipartition:
    """The (ell+1)-tuple of partitions encoding ``la`` relative to the block core."""
    p, rho = block.p, block.rho
    core, weight = bar_core(la, p)
    if core != rho:
        raise ValueError(f"{la} has {p}-bar-core {core}, not {rho}")
    if weight > block.d:
        raise ValueError(f"{la} has bar-weight {weight} > {block.d}")
    comps = [tuple(x // p for x in la if x % p == 0)]
    for i in range(1, block.ell + 1):
        cls = [x for x in la if x % p == i]
        r = len(cls)
        comps.append(tuple(q for q in ((x - (r - 1 - j) * p - i) // p for j, x in enumerate(cls)) if q))
    q = tuple(comps)
    if sum(map(sum, q)) != weight or from_bar_quotient(block, q) != la:
        raise ValueError(f"{la} is outside the Rouquier range of {rho}")
    return q


def from_bar_quotient(block: RouquierBlock, q: Sequence[Partition]) -> Partition:
    p, ell = block.p, block.ell
    if len(q) != ell + 1:
        raise ValueError(f"quotient needs {ell + 1} components, got {len(q)}")
    if sum(map(sum, q)) > block.d:
        raise ValueError(f"quotient {q} is larger than the weight {block.d}")
    r = block.r_counts
    parts = [p * x for x in q[0]]
    for i in range(1, ell + 1):
        ri, comp = r[i - 1], q[i]
        if len(comp) > ri:
            raise ValueError(f"component {i} of {q} has more than {ri} rows")
        padded = tuple(comp) + (0,) * (ri - len(comp))
        parts.extend(i + (ri - 1 - j) * p + p * padded[j] for j in range(ri))
    return tuple(sorted(parts, reverse=True))


def block_partitions(block: RouquierBlock) -> BlockPartitions:
    """Label sets of the block, each in canonical order."""
    everything = [from_bar_quotient(block, q) for q in enumerate_multipartitions(block.ell + 1, block.d)]
    p = block.p
    everything = canonical_order(everything)
    return BlockPartitions(
        all=everything,
        strict=[la for la in everything if is_strict(la)],
        restricted=[la for la in everything if is_restricted(la, p)],
        p_prime=[la for la in everything if is_p_prime(la, p)],
    )


def quotient_succeq(a: Sequence[Partition], b: Sequence[Partition]) -> bool:
    """True iff ``a`` is obtained from ``b`` by moving nodes further left."""
    if sum(map(sum, a)) != sum(map(sum, b)):
        return False
    before_a = before_b = 0
    for ca, cb in zip(a, b):
        ta, tb = conjugate(ca), conjugate(cb)
        sa, sb = before_a, before_b
        for c in range(max(len(ta), len(tb))):
            sa += ta[c] if c < len(ta) else 0
            sb += tb[c] if c < len(tb) else 0
            if sa < sb:
                return False
        before_a += sum(ca)
        before_b += sum(cb)
        if before_a < before_b:
            return False
    return True


def quotient_contains(a: Sequence[Partition], b: Sequence[Partition]) -> bool:
    """Componentwise containment ``a ⊆ b``."""
    return all(contains(cb, ca) for ca, cb in zip(a, b))


def regularize_rock(la: Partition, block: RouquierBlock) -> Partition:
    """The regularization of a strict block member: fold the last quotient
    component, conjugated, into the one before it."""
    if not is_strict(la):
        raise ValueError(f"{la} is not strict")
    q = bar_quotient(la, block)
    ell = block.ell
    folded = q[: ell - 1] + (plus(q[ell - 1], conjugate(q[ell])), ())
    return from_bar_quotient(block, folded)


def bar_bijection(la: Partition, block: RouquierBlock) -> Partition:
    """p' block member to the restricted member with quotient
    ``(la1', ..., la_ell', ())``."""
    q = bar_quotient(la, block)
    if q[0]:
        raise ValueError(f"{la} is not {block.p}'")
    return from_bar_quotient(block, tuple(conjugate(c) for c in q[1:]) + ((),))


def fd(mu: Partition, block: RouquierBlock) -> Partition:
    """Inverse of :func:`bar_bijection`."""
    q = bar_quotient(mu, block)
    if q[-1]:
        raise ValueError(f"{mu} is not restricted")
    return from_bar_quotient(block, ((),) + tuple(conjugate(c) for c in q[:-1]))


def gth(la: Partition, block: RouquierBlock) -> tuple[int, ...]:
    """Sizes of the quotient components, trailing zeros kept."""
    return tuple(sum(c) for c in bar_quotient(la, block))


def fd_composition(m: Sequence[int]) -> tuple[int, ...]:
    """Shift ``(m_0, ..., m_{ell-1}, 0)`` to ``(0, m_0, ..., m_{ell-1})``."""
    if m[-1]:
        raise ValueError(f"last entry of {m} must be zero")
    return (0,) + tuple(m[:-1])


def _support(vec: Mapping[Partition, int]) -> list[Partition]:
    return [la for la, c in vec.items() if c]


def m_semi_bounded(vec: Mapping[Partition, int], m: Sequence[int], block: RouquierBlock) -> bool:
    low = fd_composition(m)
    sizes = [gth(la, block) for la in _support(vec)]
    return all(dominates(g, low) for g in sizes) and low in sizes


def m_bounded(vec: Mapping[Partition, int], m: Sequence[int], block: RouquierBlock) -> bool:
    m = tuple(m)
    sizes = [gth(la, block) for la in _support(vec)]
    return (
        m_semi_bounded(vec, m, block)
        and all(dominates(m, g) for g in sizes)
        and m in sizes
    )


def iter_block_members(block: RouquierBlock, weights: Iterable[int]) -> list[tuple[Partition, Multipartition]]:
    """(partition, quotient) pairs for every weight listed, all on the same core."""
    out = []
    for a in weights:
        sub = block.with_weight(a)
        for q in enumerate_multipartitions(block.ell + 1, a):
            out.append((from_bar_quotient(sub, q), q))
    return out
