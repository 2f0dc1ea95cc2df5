"""Block-level numbers for RoCK blocks: q-decomposition polynomials, decomposition
numbers, the virtual projective characters built from them, and the unadjusted
Cartan matrix computed two ways."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Mapping, Optional, Sequence

from .barcore import RouquierBlock, bar_quotient, residue_content
from .partitions import (
    Multipartition,
    Partition,
    conjugate,
    enumerate_partitions,
    format_multipartition,
    format_partition,
    parity_a,
)
from .polynomial import ZERO, IntPolynomial
from .symmfunc import inverse_kostka, inverse_kostka_at, lr_coeff, lr_skew
from .wreath import lr_splittings, wreath_cartan_entry

Label = Any  # a Partition or a Multipartition


def _is_multi(label: Label) -> bool:
    return bool(label) and isinstance(label[0], tuple)


def format_label(label: Label) -> str:
    return format_multipartition(label) if _is_multi(label) else format_partition(label)


def _label_json(label: Label) -> list:
    if _is_multi(label):
        return [list(c) for c in label]
    return list(label)


def _entry_json(v: Any) -> Any:
    if isinstance(v, IntPolynomial):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    return v


def _entry_text(v: Any, var: str) -> str:
    if isinstance(v, IntPolynomial):
        return v.format(var)
    return str(v)


@dataclass
class LabeledMatrix:
    row_labels: list
    col_labels: list
    entries: list[list]
    var: str = "q"

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_labels) or any(len(r) != len(self.col_labels) for r in self.entries):
            raise ValueError("matrix shape does not match its labels")

    def __getitem__(self, key: tuple) -> Any:
        r, c = key
        return self.entries[self.row_labels.index(r)][self.col_labels.index(c)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (self.row_labels, self.col_labels, self.entries) == (other.row_labels, other.col_labels, other.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def transpose(self) -> "LabeledMatrix":
        cols = [list(x) for x in zip(*self.entries)] if self.entries else []
        if not cols:
            cols = [[] for _ in self.col_labels]
        return LabeledMatrix(self.col_labels, self.row_labels, cols, self.var)

    def to_json(self, meta: Optional[Mapping[str, Any]] = None) -> str:
        data: dict[str, Any] = {"schema": 1}
        if meta:
            data.update(meta)
        data["row_labels"] = [_label_json(x) for x in self.row_labels]
        data["col_labels"] = [_label_json(x) for x in self.col_labels]
        data["entries"] = [[_entry_json(v) for v in row] for row in self.entries]
        return json.dumps(data, sort_keys=False, separators=(",", ":")) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [format_label(c) for c in self.col_labels])
        for lab, row in zip(self.row_labels, self.entries):
            w.writerow([format_label(lab)] + [_entry_text(v, self.var) for v in row])
        return buf.getvalue()

    def to_table(self) -> str:
        head = [""] + [format_label(c) for c in self.col_labels]
        body = [[format_label(lab)] + [_entry_text(v, self.var) for v in row] for lab, row in zip(self.row_labels, self.entries)]
        widths = [max(len(r[k]) for r in [head] + body) for k in range(len(head))]
        lines = ["  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)).rstrip() for r in [head] + body]
        return "\n".join(lines) + "\n"


@dataclass
class CharacterVector:
    """Integer combination of the characters indexed by strict block members."""

    block: RouquierBlock
    coeffs: dict[Partition, int] = field(default_factory=dict)

    @classmethod
    def unit(cls, block: RouquierBlock, la: Partition) -> "CharacterVector":
        return cls(block, {tuple(la): 1})

    def __getitem__(self, la: Partition) -> int:
        return self.coeffs.get(tuple(la), 0)

    def support(self) -> list[Partition]:
        return sorted((k for k, v in self.coeffs.items() if v), reverse=True)

    def pruned(self) -> "CharacterVector":
        return CharacterVector(self.block, {k: v for k, v in self.coeffs.items() if v})

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return CharacterVector(self.block, out).pruned()

    def scale(self, c: int) -> "CharacterVector":
        return CharacterVector(self.block, {k: c * v for k, v in self.coeffs.items()}).pruned()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterVector):
            return NotImplemented
        return self.pruned().coeffs == other.pruned().coeffs

    def to_json(self) -> str:
        data = {
            "schema": 1,
            "rho": list(self.block.rho),
            "d": self.block.d,
            "coeffs": [[list(k), v] for k, v in sorted(self.pruned().coeffs.items(), reverse=True)],
        }
        return json.dumps(data, separators=(",", ":")) + "\n"


def default_jobs() -> int:
    return os.cpu_count() or 1


def _parallel_rows(fn: Callable[[Any], list], rows: Sequence, jobs: Optional[int]) -> list[list]:
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(rows) < 2:
        return [fn(r) for r in rows]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, rows))


# --- q-decomposition numbers --------------------------------------------------

@lru_cache(maxsize=None)
def _sigma0_weights(qla: Multipartition, qmu: Multipartition) -> tuple[tuple[Partition, int], ...]:
    """Collapse the LR part of the canonical-basis sum onto the zeroth sigma.

    Walks ``i = ell, ..., 1``: ``tau^(ell) = la^(ell)`` (sigma^(ell) is empty),
    ``sigma^(i-1)`` runs over ``c^{mu^(i-1)}_{sigma, tau^(i)'}`` and, for ``i-1 >= 1``,
    ``tau^(i-1)`` over ``c^{la^(i-1)}_{sigma^(i-1), tau}``.
    """
    ell = len(qla) - 1
    taus: dict[Partition, int] = {qla[ell]: 1}
    sigmas: dict[Partition, int] = {}
    for i in range(ell, 0, -1):
        sigmas = {}
        for tau, w in taus.items():
            for sig, c in lr_skew(qmu[i - 1], conjugate(tau)).items():
                sigmas[sig] = sigmas.get(sig, 0) + w * c
        if i == 1:
            break
        taus = {}
        for sig, w in sigmas.items():
            for tau, c in lr_skew(qla[i - 1], sig).items():
                taus[tau] = taus.get(tau, 0) + w * c
    return tuple(sorted((s, w) for s, w in sigmas.items() if w))


def _q_shift(qla: Multipartition, qmu: Multipartition) -> int:
    return 2 * sum(i * (sum(qla[i]) - sum(qmu[i])) for i in range(len(qla)))


def qdecomp(la: Partition, mu: Partition, block: RouquierBlock) -> IntPolynomial:
    """Canonical-basis coefficient ``d_{la,mu}(q)`` for a RoCK block."""
    qla = bar_quotient(tuple(la), block)
    qmu = bar_quotient(tuple(mu), block)
    if qmu[-1]:
        raise ValueError(f"{mu} is not restricted")
    total = ZERO
    for sig0, w in _sigma0_weights(qla, qmu):
        ik = inverse_kostka(qla[0], sig0)
        if ik:
            total = total + ik.substitute(-1, 2) * w
    if total.is_zero():
        return ZERO
    shift = _q_shift(qla, qmu)
    if shift < 0:
        raise ArithmeticError(f"negative q-power for ({la}, {mu})")
    return total * IntPolynomial.monomial(shift)


def _coefficient_sum(la: Partition, mu: Partition, block: RouquierBlock) -> int:
    """The inner sum of the projective-character formula, ``K^{-1}`` taken at -1."""
    qla = bar_quotient(tuple(la), block)
    qmu = bar_quotient(tuple(mu), block)
    return sum(w * inverse_kostka_at(qla[0], s, -1) for s, w in _sigma0_weights(qla, qmu))


def _h0(la: Partition, p: int) -> int:
    return sum(1 for x in la if x % p == 0)


def big_D(la: Partition, mu: Partition, block: RouquierBlock) -> int:
    """Coefficient of ``chi^la`` in the virtual projective character of ``mu``,
    from ``d_{la,mu}(1)``."""
    e = (_h0(la, block.p) + 1 - parity_a(la)) // 2
    return 2 ** e * qdecomp(la, mu, block).evaluate(1)


def big_D_direct(la: Partition, mu: Partition, block: RouquierBlock) -> int:
    """Same number from the integer sum with ``K^{-1}`` evaluated at ``-1``."""
    e = (_h0(la, block.p) + 1 - parity_a(la)) // 2
    return 2 ** e * _coefficient_sum(la, mu, block)


def dhat(la: Partition, mu: Partition, block: RouquierBlock) -> int:
    """Decomposition number ``[S(la) : D(mu)]``."""
    e = (_h0(la, block.p) + parity_a(la)) // 2
    return 2 ** e * _coefficient_sum(la, mu, block)


def type_of_S(la: Partition) -> str:
    return "M" if parity_a(la) == 0 else "Q"


def type_of_D(mu: Partition, p: int) -> str:
    nonzero = sum(residue_content(mu, p)[1:])
    return "M" if nonzero % 2 == 0 else "Q"


def brauer_factor(la: Partition, mu: Partition, p: int) -> Fraction:
    s, t = type_of_S(la), type_of_D(mu, p)
    if s == "Q" and t == "M":
        return Fraction(2)
    if s == "M" and t == "Q":
        return Fraction(1, 2)
    return Fraction(1)


def decomp_matrix(block: RouquierBlock, jobs: Optional[int] = None) -> LabeledMatrix:
    rows = block.partitions.strict
    cols = block.partitions.restricted
    entries = _parallel_rows(lambda la: [dhat(la, mu, block) for mu in cols], rows, jobs)
    return LabeledMatrix(rows, cols, entries)


def big_D_matrix(block: RouquierBlock, jobs: Optional[int] = None) -> LabeledMatrix:
    rows = block.partitions.strict
    cols = block.partitions.restricted
    entries = _parallel_rows(lambda la: [big_D(la, mu, block) for mu in cols], rows, jobs)
    return LabeledMatrix(rows, cols, entries)


def qdecomp_matrix(block: RouquierBlock, jobs: Optional[int] = None) -> LabeledMatrix:
    rows = block.partitions.all
    cols = block.partitions.restricted
    entries = _parallel_rows(lambda la: [qdecomp(la, mu, block) for mu in cols], rows, jobs)
    return LabeledMatrix(rows, cols, entries, var="q")


def phat_character(mu: Partition, block: RouquierBlock) -> CharacterVector:
    coeffs = {la: big_D(la, mu, block) for la in block.partitions.strict}
    return CharacterVector(block, coeffs).pruned()


# --- unadjusted Cartan matrix -------------------------------------------------

def _triples_beside(mu: Partition, fixed: Partition) -> dict[tuple[Partition, Partition, Partition], int]:
    """``(phi, chi, omega) -> c^mu_{phi, chi, fixed, omega}`` over nonzero values."""
    out: dict[tuple[Partition, Partition, Partition], int] = {}
    for kappa, c in lr_skew(mu, fixed).items():
        for trip, c2 in lr_splittings(kappa, 3):
            out[trip] = out.get(trip, 0) + c * c2
    return out


def unadjusted_cartan_entry(qmu: Multipartition, qnu: Multipartition) -> int:
    """Closed-form entry for restricted labels given by their quotients.

    State carried from component ``i+1`` down to ``i``: the pair ``(psi, chi)``
    that component ``i`` sees conjugated.
    """
    ell = len(qmu) - 1
    state: dict[tuple[Partition, Partition], int] = {((), ()): 1}
    for i in range(ell - 1, -1, -1):
        new: dict[tuple[Partition, Partition], int] = {}
        for (psi_n, chi_n), w in state.items():
            chi_n_c = conjugate(chi_n)
            for (phi, chi, omega), c1 in _triples_beside(qmu[i], conjugate(psi_n)).items():
                rest = sum(qnu[i]) - sum(phi) - sum(omega) - sum(chi_n)
                if rest < 0:
                    continue
                for psi in enumerate_partitions(rest):
                    if i == 0 and chi != conjugate(psi):
                        continue
                    c2 = lr_coeff(qnu[i], [phi, psi, chi_n_c, omega])
                    if c2:
                        key = (psi, chi)
                        new[key] = new.get(key, 0) + w * c1 * c2
        state = new
    return sum(state.values())


def unadjusted_cartan(block: RouquierBlock, method: str = "closed_form", jobs: Optional[int] = None) -> LabeledMatrix:
    labels = block.partitions.restricted
    if method == "closed_form":
        quots = {mu: bar_quotient(mu, block) for mu in labels}
        entries = _parallel_rows(
            lambda mu: [unadjusted_cartan_entry(quots[mu], quots[nu]) for nu in labels], labels, jobs
        )
    elif method == "from_decomp":
        strict = block.partitions.strict
        dd = decomp_matrix(block, jobs).entries
        DD = big_D_matrix(block, jobs).entries
        m = len(labels)
        entries = [
            [sum(dd[k][a] * DD[k][b] for k in range(len(strict))) for b in range(m)] for a in range(m)
        ]
    else:
        raise ValueError(f"unknown method {method!r}")
    return LabeledMatrix(labels, labels, entries)


def iota(mu: Partition, block: RouquierBlock, conjugate_at: str = "odd") -> Multipartition:
    """Relabel a restricted member by a J-multipartition.

    Position ``i`` (1-based) holds component ``i-1`` of the quotient, conjugated
    when ``i`` is odd (``conjugate_at="odd"``) or even (``"even"``).
    """
    q = bar_quotient(tuple(mu), block)
    if q[-1]:
        raise ValueError(f"{mu} is not restricted")
    parity = 1 if conjugate_at == "odd" else 0
    return tuple(conjugate(q[i - 1]) if i % 2 == parity else q[i - 1] for i in range(1, block.ell + 1))


def wreath_cartan_relabeled(block: RouquierBlock, conjugate_at: str = "odd", jobs: Optional[int] = None) -> LabeledMatrix:
    """Wreath-product Cartan matrix on restricted labels: entry ``(nu, mu)`` is
    ``[P(iota(nu)) : L(iota(mu))]``."""
    labels = block.partitions.restricted
    im = {mu: iota(mu, block, conjugate_at) for mu in labels}
    entries = _parallel_rows(
        lambda nu: [wreath_cartan_entry(block.ell, im[nu], im[mu]) for mu in labels], labels, jobs
    )
    return LabeledMatrix(labels, labels, entries)
