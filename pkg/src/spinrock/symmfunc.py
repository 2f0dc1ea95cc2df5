"""Exact symmetric-function coefficients.

Kostka numbers, Littlewood-Richardson coefficients (lattice words), Kostka-Foulkes
polynomials via charge, inverse Kostka polynomials by unitriangular inversion,
and two independent oracles: a monomial-basis LR computation and a shifted
tableau expansion of Schur P-functions.
"""

from __future__ import annotations

import os
import threading
from functools import wraps
from itertools import product
from typing import Callable, Iterator, Sequence

from .partitions import (
    Partition,
    conjugate,
    contains,
    dominates,
    enumerate_partitions,
    is_strict,
    partitions_inside,
)
from .polynomial import ONE, ZERO, IntPolynomial

DEFAULT_CACHE_LIMIT = 12


def cache_limit() -> int:
    """Largest size ``n`` whose results are memoized (``SPINROCK_CACHE_LIMIT``)."""
    raw = os.environ.get("SPINROCK_CACHE_LIMIT")
    if raw is None:
        return DEFAULT_CACHE_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_CACHE_LIMIT


_ALL_CACHES: list[dict] = []


def sized_cache(size_of: Callable[..., int]) -> Callable:
    """Memoize a pure function, but only for arguments with ``size_of(*args) <=
    cache_limit()``.  Reads are lock-free; inserts take a lock."""

    def deco(fn: Callable) -> Callable:
        table: dict = {}
        lock = threading.Lock()
        _ALL_CACHES.append(table)

        @wraps(fn)
        def wrapper(*args):
            try:
                return table[args]
            except KeyError:
                pass
            value = fn(*args)
            if size_of(*args) <= cache_limit():
                with lock:
                    table.setdefault(args, value)
            return value

        wrapper.cache = table  # type: ignore[attr-defined]
        return wrapper

    return deco


def clear_caches() -> None:
    for t in _ALL_CACHES:
        t.clear()


def _strip(comp: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(x) for x in comp)


# --- semistandard tableaux -------------------------------------------------

def _horizontal_strips(inner: Partition, outer: Partition, k: int) -> Iterator[Partition]:
    """Shapes ``nu`` with ``inner ⊆ nu ⊆ outer`` and ``nu/inner`` a horizontal
    strip of ``k`` cells."""
    rows = len(outer)
    base = tuple(inner) + (0,) * (rows - len(inner))

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if r == rows:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        cap = outer[r] if r == 0 else min(outer[r], base[r - 1])
        for x in range(min(cap, base[r] + left), base[r] - 1, -1):
            acc.append(x)
            yield from rec(r + 1, left - (x - base[r]), acc)
            acc.pop()

    yield from rec(0, k, [])


def ssyt(shape: Partition, content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of ``shape`` with ``content[k-1]`` entries equal to ``k``."""
    if sum(shape) != sum(content):
        return
    content = _strip(content)

    def rec(k: int, cur: Partition, rows: list[list[int]]) -> Iterator:
        if k == len(content):
            if cur == tuple(shape):
                yield tuple(tuple(r) for r in rows)
            return
        for nxt in _horizontal_strips(cur, shape, content[k]):
            added = []
            for r, x in enumerate(nxt):
                old = cur[r] if r < len(cur) else 0
                if x > old:
                    if r == len(rows):
                        rows.append([])
                    rows[r].extend([k + 1] * (x - old))
                    added.append((r, x - old))
            yield from rec(k + 1, nxt, rows)
            for r, n in added:
                del rows[r][-n:]
            while rows and not rows[-1]:
                rows.pop()

    yield from rec(0, (), [])


@sized_cache(lambda mu, content: sum(mu))
def kostka_number(mu: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``mu`` and the given content."""
    mu = tuple(mu)
    content = tuple(x for x in content if x)
    if sum(mu) != sum(content):
        return 0

    memo: dict[tuple[int, Partition], int] = {}

    def count(k: int, cur: Partition) -> int:
        if k == len(content):
            return 1 if cur == mu else 0
        key = (k, cur)
        if key not in memo:
            memo[key] = sum(count(k + 1, nxt) for nxt in _horizontal_strips(cur, mu, content[k]))
        return memo[key]

    return count(0, ())


# --- Littlewood-Richardson -------------------------------------------------

@sized_cache(lambda la, mu, nu: sum(la))
def _lr2(la: Partition, mu: Partition, nu: Partition) -> int:
    if sum(la) != sum(mu) + sum(nu) or not contains(la, mu) or not contains(la, nu):
        return 0
    if not nu:
        return 1 if la == mu else 0
    if not mu:
        return 1 if la == nu else 0
    # skew cells in reading order: rows top to bottom, each right to left
    cells = []
    for r, x in enumerate(la):
        start = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(x - 1, start - 1, -1))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    letters = len(nu)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = filling.get((r, c + 1), letters)
        lo = filling.get((r - 1, c), 0) + 1
        total = 0
        for x in range(lo, min(hi, r + 1, letters) + 1):
            if counts[x] >= nu[x - 1]:
                continue
            if x > 1 and counts[x - 1] <= counts[x]:
                continue
            counts[x] += 1
            filling[(r, c)] = x
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[x] -= 1
        return total

    return rec(0)


def lr_coeff(la: Partition, factors: Sequence[Partition]) -> int:
    """Littlewood-Richardson coefficient of ``la`` in the product of ``factors``."""
    la = tuple(la)
    fs = [tuple(f) for f in factors if f]
    if sum(la) != sum(sum(f) for f in fs):
        return 0
    return _lr_multi(la, tuple(fs))


@sized_cache(lambda la, fs: sum(la))
def _lr_multi(la: Partition, fs: tuple[Partition, ...]) -> int:
    if not fs:
        return 1 if not la else 0
    if len(fs) == 1:
        return 1 if la == fs[0] else 0
    if len(fs) == 2:
        return _lr2(la, fs[0], fs[1])
    head, last = fs[:-1], fs[-1]
    total = 0
    for kappa in partitions_inside(la, sum(la) - sum(last)):
        c = _lr2(la, kappa, last)
        if c:
            total += c * _lr_multi(kappa, head)
    return total


@sized_cache(lambda la, nu: sum(la))
def lr_skew(la: Partition, nu: Partition) -> dict[Partition, int]:
    """``{sigma: c^la_{sigma,nu}}`` over the nonzero coefficients."""
    la, nu = tuple(la), tuple(nu)
    if not contains(la, nu):
        return {}
    out = {}
    for sigma in partitions_inside(la, sum(la) - sum(nu)):
        c = _lr2(la, sigma, nu)
        if c:
            out[sigma] = c
    return out


def lr_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_mu * s_nu`` in the Schur basis, via lattice words."""
    n = sum(mu) + sum(nu)
    out = {}
    for la in enumerate_partitions(n):
        c = _lr2(la, tuple(mu), tuple(nu))
        if c:
            out[la] = c
    return out


def lr_product_oracle(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_mu * s_nu`` by monomial expansion and triangular reduction.

    Uses only Kostka numbers: the coefficient of ``x^kappa`` in ``s_mu s_nu``
    is a convolution of monomial coefficients, and ``s_la`` contributes
    ``K_{la,kappa}`` there.
    """
    n = sum(mu) + sum(nu)
    nvars = max(n, 1)

    def mono(shape: Partition, bound: Sequence[int]) -> dict[tuple[int, ...], int]:
        out = {}
        k = sum(shape)

        def rec(i: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
            if i == nvars:
                if left == 0:
                    yield tuple(acc)
                return
            for x in range(min(left, bound[i]), -1, -1):
                acc.append(x)
                yield from rec(i + 1, left - x, acc)
                acc.pop()

        for a in rec(0, k, []):
            c = kostka_number(tuple(shape), a)
            if c:
                out[a] = c
        return out

    coeff: dict[Partition, int] = {}
    for kappa in enumerate_partitions(n):
        padded = tuple(kappa) + (0,) * (nvars - len(kappa))
        left = mono(mu, padded)
        total = 0
        for a, ca in left.items():
            b = tuple(x - y for x, y in zip(padded, a))
            total += ca * kostka_number(tuple(nu), b)
        coeff[kappa] = total
    result: dict[Partition, int] = {}
    for kappa in enumerate_partitions(n):  # dominance-compatible order
        rem = coeff[kappa] - sum(g * kostka_number(la, kappa) for la, g in result.items())
        if rem:
            result[kappa] = rem
    return result


# --- charge and Kostka-Foulkes polynomials ---------------------------------

def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    word = list(word)
    if not word:
        return 0
    m = max(word)
    counts = [word.count(x) for x in range(1, m + 1)]
    if any(counts[i] < counts[i + 1] for i in range(m - 1)) or min(word) < 1:
        raise ValueError(f"word {word} does not have partition content")
    alive = list(range(len(word)))
    total = 0
    while alive:
        letters = sorted({word[i] for i in alive})
        top = len(letters)
        picked: list[int] = []
        # scan right to left, cyclically, for 1, 2, ..., top
        cursor = len(alive)
        for target in range(1, top + 1):
            found = None
            for step in range(1, len(alive) + 1):
                j = (cursor - step) % len(alive)
                if word[alive[j]] == target:
                    found = j
                    break
            if found is None:
                raise ValueError("malformed word")
            picked.append(alive[found])
            cursor = found
        index = 0
        for r in range(1, top):
            if picked[r] > picked[r - 1]:
                index += 1
            total += index
        chosen = set(picked)
        alive = [i for i in alive if i not in chosen]
    return total


def reading_word(tableau: Sequence[Sequence[int]]) -> list[int]:
    """Rows from bottom to top, each read left to right."""
    out: list[int] = []
    for row in reversed(tableau):
        out.extend(row)
    return out


@sized_cache(lambda sigma, la: sum(sigma))
def kostka_foulkes(sigma: Partition, la: Partition) -> IntPolynomial:
    """``K_{sigma,la}(t)``: sum of ``t^charge`` over SSYT of shape sigma, content la."""
    if sum(sigma) != sum(la):
        return ZERO
    c: dict[int, int] = {}
    for tab in ssyt(tuple(sigma), tuple(la)):
        e = charge(reading_word(tab))
        c[e] = c.get(e, 0) + 1
    return IntPolynomial(c)


_IK_LOCK = threading.Lock()
_IK_TABLES: dict[int, dict[tuple[Partition, Partition], IntPolynomial]] = {}


def _inverse_kostka_table(n: int) -> dict[tuple[Partition, Partition], IntPolynomial]:
    table = _IK_TABLES.get(n)
    if table is not None:
        return table
    labels = enumerate_partitions(n)  # reverse-lex, so K is upper unitriangular
    m = len(labels)
    K = [[kostka_foulkes(labels[i], labels[j]) for j in range(m)] for i in range(m)]
    inv = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        inv[i][i] = ONE
        for j in range(i + 1, m):
            acc = ZERO
            for k in range(i, j):
                if inv[i][k] and K[k][j]:
                    acc = acc + inv[i][k] * K[k][j]
            inv[i][j] = -acc
    table = {(labels[i], labels[j]): inv[i][j] for i in range(m) for j in range(m) if inv[i][j]}
    if n <= cache_limit():
        with _IK_LOCK:
            _IK_TABLES.setdefault(n, table)
    return table


def inverse_kostka(la: Partition, sigma: Partition) -> IntPolynomial:
    """Coefficient of ``s_sigma`` in the Hall-Littlewood ``P_la``."""
    if sum(la) != sum(sigma):
        return ZERO
    return _inverse_kostka_table(sum(la)).get((tuple(la), tuple(sigma)), ZERO)


def inverse_kostka_at(la: Partition, sigma: Partition, value: int) -> int:
    return inverse_kostka(la, sigma).evaluate(value)


def substitute_minus_q2(poly: IntPolynomial) -> IntPolynomial:
    """``t -> -q^2``."""
    return poly.substitute(-1, 2)


def kostka_matrix(n: int) -> tuple[list[Partition], list[list[IntPolynomial]]]:
    labels = enumerate_partitions(n)
    return labels, [[kostka_foulkes(a, b) for b in labels] for a in labels]


def inverse_kostka_matrix(n: int) -> tuple[list[Partition], list[list[IntPolynomial]]]:
    labels = enumerate_partitions(n)
    return labels, [[inverse_kostka(a, b) for b in labels] for a in labels]


# --- Schur P oracle ---------------------------------------------------------

def _shifted_cells(shape: Partition) -> set[tuple[int, int]]:
    return {(r, r + c) for r, x in enumerate(shape) for c in range(x)}


def _strip_fillings(cells: list[tuple[int, int]]) -> int:
    """Ways to mark the cells of one letter as primed/unprimed.

    Rows: primed cells left of unprimed ones, at most one primed.  Columns:
    primed cells above unprimed ones, at most one unprimed.  Diagonal cells
    stay unprimed.
    """
    total = 0
    for marks in product((False, True), repeat=len(cells)):
        ok = True
        rows: dict[int, list[tuple[int, bool]]] = {}
        cols: dict[int, list[tuple[int, bool]]] = {}
        for (r, c), primed in zip(cells, marks):
            if primed and r == c:
                ok = False
                break
            rows.setdefault(r, []).append((c, primed))
            cols.setdefault(c, []).append((r, primed))
        if not ok:
            continue
        for entries in rows.values():
            entries.sort()
            flags = [pr for _, pr in entries]
            if sum(flags) > 1 or any(not a and b for a, b in zip(flags, flags[1:])):
                ok = False
                break
        if not ok:
            continue
        for entries in cols.values():
            entries.sort()
            flags = [pr for _, pr in entries]
            if sum(not f for f in flags) > 1 or any(not a and b for a, b in zip(flags, flags[1:])):
                ok = False
                break
        if ok:
            total += 1
    return total


def _strict_inside(outer: Partition, inner: Partition, k: int) -> Iterator[Partition]:
    """Strict ``nu`` with ``inner ⊆ nu ⊆ outer`` (as shifted shapes) and ``|nu| = |inner| + k``."""
    rows = len(outer)
    base = tuple(inner) + (0,) * (rows - len(inner))

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if r == rows:
            if left == 0:
                nu = tuple(x for x in acc if x)
                if is_strict(nu):
                    yield nu
            return
        cap = min(outer[r], base[r] + left)
        if r:
            cap = min(cap, max(acc[-1] - 1, 0))
        for x in range(base[r], cap + 1):
            acc.append(x)
            yield from rec(r + 1, left - (x - base[r]), acc)
            acc.pop()

    yield from rec(0, k, [])


def schur_p_monomial(la: Partition, content: Sequence[int]) -> int:
    """Coefficient of ``x^content`` in the Schur P-function of ``la``."""
    la = tuple(la)
    content = tuple(content)
    memo: dict[tuple[int, Partition], int] = {}

    def count(k: int, cur: Partition) -> int:
        if k == len(content):
            return 1 if cur == la else 0
        key = (k, cur)
        if key in memo:
            return memo[key]
        total = 0
        have = _shifted_cells(cur)
        for nxt in _strict_inside(la, cur, content[k]):
            new = sorted(_shifted_cells(nxt) - have)
            ways = _strip_fillings(new) if new else 1
            if ways:
                total += ways * count(k + 1, nxt)
        memo[key] = total
        return total

    return count(0, ())


def schur_p_expansion(la: Partition) -> dict[Partition, int]:
    """Schur expansion of ``P_la`` from shifted tableaux (independent of charge)."""
    la = tuple(la)
    if not is_strict(la):
        raise ValueError(f"{la} is not strict")
    n = sum(la)
    result: dict[Partition, int] = {}
    for kappa in enumerate_partitions(n):
        m = schur_p_monomial(la, kappa)
        # P_la is symmetric; spot-check one rearrangement of the content
        perm = tuple(reversed(kappa))
        if perm != kappa and schur_p_monomial(la, perm) != m:
            raise ArithmeticError(f"monomial expansion of P{la} is not symmetric at {kappa}")
        rem = m - sum(g * kostka_number(sig, kappa) for sig, g in result.items())
        if rem:
            if not dominates(la, kappa):
                raise ArithmeticError(f"nonzero remainder {rem} at {kappa} for P{la}")
            result[kappa] = rem
    return result


# --- permutation modules -----------------------------------------------------

def perm_sgn_perm_mult(beta: Sequence[int], gamma: Sequence[int], alpha: Partition) -> int:
    """Multiplicity of ``S^alpha`` in ``(M^beta ⊗ sgn) ∘ M^gamma`` as an LR coefficient."""
    factors = [tuple([1] * b) for b in beta if b] + [(g,) for g in gamma if g]
    return lr_coeff(tuple(alpha), factors)


def perm_sgn_perm_mult_modules(beta: Sequence[int], gamma: Sequence[int], alpha: Partition) -> int:
    """Same multiplicity via ``sum K_{kappa',beta} K_{eta,gamma} c^alpha_{kappa,eta}``."""
    b, g = sum(beta), sum(gamma)
    if sum(alpha) != b + g:
        return 0
    total = 0
    for kappa in enumerate_partitions(b):
        kb = kostka_number(conjugate(kappa), tuple(beta))
        if not kb:
            continue
        for eta in enumerate_partitions(g):
            kg = kostka_number(eta, tuple(gamma))
            if kg:
                total += kb * kg * lr_coeff(tuple(alpha), [kappa, eta])
    return total
