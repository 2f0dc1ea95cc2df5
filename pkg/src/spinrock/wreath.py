"""Composition multiplicities and super-Cartan matrices for the wreath
superproduct of the zigzag-type superalgebra with ``S_d``.

Labels are J-multipartitions: tuples of ``ell`` partitions of total size ``d``.
A composition factor is written ``(index, odd)``; ``odd`` marks the parity-shifted
simple module, whose contribution enters through the conjugate partition.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .partitions import Multipartition, Partition, conjugate, enumerate_multipartitions, enumerate_partitions
from .symmfunc import lr_coeff

Factor = tuple[int, bool]


def pj_factors(ell: int, j: int) -> list[Factor]:
    """Composition factors of the projective cover of the ``j``-th simple module."""
    if ell < 1 or not 0 <= j < ell:
        raise ValueError(f"index {j} out of range for ell={ell}")
    if j == 0:
        out = [(0, False), (0, True)]
        if ell > 1:
            out.append((1, False))
        out.append((0, False))
        return out
    if j == ell - 1:
        return [(j, False), (j - 1, False), (j, False)]
    return [(j, False), (j - 1, False), (j + 1, False), (j, False)]


def _size_vectors(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _size_vectors(total - first, parts - 1):
            yield (first,) + rest


def lr_splittings(la: Partition, parts: int) -> list[tuple[tuple[Partition, ...], int]]:
    """All ``(nu_1, ..., nu_parts)`` with ``c^la_{nu_1..nu_parts} != 0``, with the coefficient."""
    out = []
    for sizes in _size_vectors(sum(la), parts):
        for nus in product(*(enumerate_partitions(s) for s in sizes)):
            c = lr_coeff(la, nus)
            if c:
                out.append((nus, c))
    return out


def circ_multiplicity(factors: Sequence[Multipartition], mu: Multipartition) -> int:
    """Multiplicity of ``L(mu)`` in the induction product of the ``L(factors)``."""
    total = 1
    for j in range(len(mu)):
        total *= lr_coeff(mu[j], [f[j] for f in factors])
        if not total:
            return 0
    return total


def filtered_multiplicity(la: Multipartition, series: Sequence[Sequence[Factor]], mu: Multipartition) -> int:
    """Multiplicity of ``L(mu)`` in ``V_0(la_0) ∘ ... ∘ V_{ell-1}(la_{ell-1})``, where
    ``series[j]`` lists the composition factors of ``V_j`` from top to bottom."""
    ell = len(la)
    if len(series) != ell or len(mu) != ell:
        raise ValueError("label and series lengths disagree")
    if sum(map(sum, la)) != sum(map(sum, mu)):
        return 0
    per_module = [lr_splittings(la[j], len(series[j])) for j in range(ell)]
    total = 0
    for choice in product(*per_module):
        weight = 1
        targets: list[list[Partition]] = [[] for _ in range(ell)]
        for j, (nus, c) in enumerate(choice):
            weight *= c
            for (i, odd), nu in zip(series[j], nus):
                targets[i].append(conjugate(nu) if odd else nu)
        for i in range(ell):
            weight *= lr_coeff(mu[i], targets[i])
            if not weight:
                break
        total += weight
    return total


def wreath_cartan_entry(ell: int, la: Multipartition, mu: Multipartition) -> int:
    """``[P(la) : L(mu)]`` from the closed alpha/beta/gamma/delta sum."""
    if len(la) != ell or len(mu) != ell:
        raise ValueError(f"labels must have {ell} components")
    if sum(map(sum, la)) != sum(map(sum, mu)):
        return 0
    if ell == 1:
        total = 0
        for (a, b, d), c in lr_splittings(la[0], 3):
            total += c * lr_coeff(mu[0], [a, conjugate(b), d])
        return total
    # split each la^j into (alpha, beta, gamma, delta)
    splits = [lr_splittings(la[j], 4) for j in range(ell)]
    total = 0
    for choice in product(*splits):
        weight = 1
        for _, c in choice:
            weight *= c
        parts = [nus for nus, _ in choice]
        for j in range(ell):
            alpha, _, _, delta = parts[j]
            beta_next = parts[j + 1][1] if j + 1 < ell else ()
            gamma_prev = parts[j - 1][2] if j > 0 else conjugate(parts[0][1])
            if j == ell - 1 and parts[j][2]:
                weight = 0  # gamma^{ell-1} is empty
                break
            weight *= lr_coeff(mu[j], [alpha, beta_next, gamma_prev, delta])
            if not weight:
                break
        total += weight
    return total


def j_multipartitions(ell: int, d: int) -> list[Multipartition]:
    """Canonical order: reverse-lexicographic on the component tuple."""
    return sorted(enumerate_multipartitions(ell, d), reverse=True)


def wreath_cartan_matrix(ell: int, d: int) -> tuple[list[Multipartition], list[list[int]]]:
    labels = j_multipartitions(ell, d)
    return labels, [[wreath_cartan_entry(ell, a, b) for b in labels] for a in labels]
