"""Branching operators on character vectors and the induced projective
characters built from thick Gelfand-Graev words.

This is the independent side of the checks: everything here is computed by
adding nodes one at a time, then compared with closed formulas.
"""

from __future__ import annotations

from itertools import product
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

from .barcore import RouquierBlock, bar_quotient, m_bounded
from .partitions import Partition, conjugate, contains, is_strict, parity_a, residue
from .rock import CharacterVector, phat_character
from .symmfunc import _horizontal_strips, kostka_number, perm_sgn_perm_mult

Vector = dict[Partition, int]


def add_i_nodes(la: Partition, i: int, p: int) -> list[tuple[Partition, int]]:
    """Strict partitions obtained by adding one node of residue ``i``, with the
    branching coefficient (2 exactly when ``la`` is odd and the result even)."""
    la = tuple(la)
    out = []
    odd = parity_a(la) == 1
    for r in range(len(la) + 1):
        cur = la[r] if r < len(la) else 0
        if r > 0 and la[r - 1] <= cur + 1:
            continue
        if residue(p, r + 1, cur + 1) != i:
            continue
        mu = la[:r] + (cur + 1,) + la[r + 1:]
        a = 2 if odd and parity_a(mu) == 0 else 1
        out.append((mu, a))
    return out


def remove_i_nodes(mu: Partition, i: int, p: int) -> list[tuple[Partition, int]]:
    """Transpose of :func:`add_i_nodes`."""
    mu = tuple(mu)
    out = []
    for r in range(len(mu)):
        la = tuple(x for x in mu[:r] + (mu[r] - 1,) + mu[r + 1:] if x)
        if not is_strict(la) or residue(p, r + 1, mu[r]) != i:
            continue
        for nu, a in add_i_nodes(la, i, p):
            if nu == mu:
                out.append((la, a))
    return out


def _vec(v: Mapping[Partition, int] | CharacterVector) -> Mapping[Partition, int]:
    return v.coeffs if isinstance(v, CharacterVector) else v


def apply_F(v: Mapping[Partition, int] | CharacterVector, i: int, p: int) -> Vector:
    out: Vector = {}
    for la, c in _vec(v).items():
        if not c:
            continue
        for mu, a in add_i_nodes(la, i, p):
            out[mu] = out.get(mu, 0) + a * c
    return {k: x for k, x in out.items() if x}


def apply_E(v: Mapping[Partition, int] | CharacterVector, i: int, p: int) -> Vector:
    out: Vector = {}
    for mu, c in _vec(v).items():
        if not c:
            continue
        for la, a in remove_i_nodes(mu, i, p):
            out[la] = out.get(la, 0) + a * c
    return {k: x for k, x in out.items() if x}


def gg_word(i: int, k: int, ell: int) -> list[int]:
    """Residues in the order the nodes are added."""
    if not 0 <= i < ell or k < 1:
        raise ValueError(f"need 0 <= i < {ell} and k >= 1")
    word = [ell] * k
    for j in range(ell - 1, i, -1):
        word += [j] * (2 * k)
    if i == 0:
        return word + [0] * (2 * k)
    for j in range(i, 0, -1):
        word += [j] * k
    word += [0] * (2 * k)
    for j in range(1, i + 1):
        word += [j] * k
    return word


def apply_gg(v: Mapping[Partition, int] | CharacterVector, i: int, k: int, p: int) -> Vector:
    out = dict(_vec(v))
    for j in gg_word(i, k, (p - 1) // 2):
        out = apply_F(out, j, p)
    return out


def _added_columns(inner: Partition, outer: Partition) -> list[int]:
    """Column counts of ``outer/inner``, indexed from column 1."""
    a, b = conjugate(outer), conjugate(inner)
    return [a[c] - (b[c] if c < len(b) else 0) for c in range(len(a))]


def gg_coefficient_closed(la: Partition, alpha: Partition, i: int, k: int, block: RouquierBlock) -> int:
    """Coefficient of ``chi^alpha`` in the thick Gelfand-Graev induction of ``chi^la``."""
    p, ell = block.p, block.ell
    ql = bar_quotient(tuple(la), block)
    qa = bar_quotient(tuple(alpha), block)
    if not is_strict(tuple(la)) or not is_strict(tuple(alpha)):
        raise ValueError("both labels must be strict")
    if sum(map(sum, qa)) - sum(map(sum, ql)) != k:
        return 0
    for j in range(ell + 1):
        if j not in (i, i + 1) and qa[j] != ql[j]:
            return 0
    if not contains(qa[i], ql[i]) or not contains(qa[i + 1], ql[i + 1]):
        return 0
    # component i gains a horizontal strip, component i+1 a vertical strip
    if any(x > 1 for x in _added_columns(ql[i], qa[i])):
        return 0
    if any(x - y > 1 for x, y in zip(qa[i + 1], ql[i + 1] + (0,) * len(qa[i + 1]))):
        return 0
    cols = _added_columns(ql[0], qa[0])
    f = sum(1 for c in range(len(cols)) if cols[c] and not (c + 1 < len(cols) and cols[c + 1]))
    twice = k * (p - 2) + len(ql[0]) - len(qa[0]) + parity_a(la) - parity_a(alpha)
    if twice % 2:
        raise ArithmeticError(f"odd exponent for ({la}, {alpha})")
    return 2 ** (f + twice // 2) * factorial(2 * k) ** (ell - i) * factorial(k) ** (2 * i + 1)


def cbar(pi: Partition, gamma: Sequence[int]) -> int:
    """Chains from the empty partition to ``pi`` adding ``gamma[s]`` nodes in
    distinct columns at step ``s``, every shape strict."""
    pi = tuple(pi)
    if sum(pi) != sum(gamma):
        return 0
    memo: dict[tuple[int, Partition], int] = {}

    def count(s: int, cur: Partition) -> int:
        if s == len(gamma):
            return 1 if cur == pi else 0
        key = (s, cur)
        if key not in memo:
            memo[key] = sum(
                count(s + 1, nxt) for nxt in _horizontal_strips(cur, pi, gamma[s]) if is_strict(nxt)
            )
        return memo[key]

    return count(0, ())


def _check_p_prime(la: Partition, block: RouquierBlock) -> tuple:
    q = bar_quotient(tuple(la), block)
    if q[0]:
        raise ValueError(f"{la} is not {block.p}'")
    return q


def Dtilde(la: Partition, block: RouquierBlock) -> int:
    """Scalar prefactor of the induced character of a p' member.

    The power of two is the telescoped product of the single-word coefficients,
    ``(d(p-2) + a(rho) - a(la)) / 2``.
    """
    q = _check_p_prime(la, block)
    p, ell = block.p, block.ell
    d = sum(map(sum, q))
    twice = d * (p - 2) + parity_a(block.rho) - parity_a(la)
    if twice % 2:
        raise ArithmeticError(f"odd exponent for {la}")
    value = 2 ** (twice // 2)
    for i in range(1, ell + 1):
        for x in conjugate(q[i]):
            value *= factorial(2 * x) ** (ell - i + 1) * factorial(x) ** (2 * i - 1)
    return value


def _splits(comp: Sequence[int]) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    for g in product(*(range(x + 1) for x in comp)):
        yield tuple(x - y for x, y in zip(comp, g)), tuple(g)


def Dtilde_entry(la: Partition, alpha: Partition, block: RouquierBlock) -> int:
    q = _check_p_prime(la, block)
    qa = bar_quotient(tuple(alpha), block)
    ell = block.ell
    cols = [conjugate(q[i]) for i in range(1, ell + 1)]
    total = 0
    for choice in product(*(list(_splits(c)) for c in cols)):
        betas = [b for b, _ in choice]
        gammas = [g for _, g in choice] + [()]
        term = cbar(qa[0], gammas[0])
        for i in range(1, ell + 1):
            if not term:
                break
            term *= perm_sgn_perm_mult(betas[i - 1], gammas[i], qa[i])
        total += term
    return Dtilde(la, block) * total if total else 0


def gg_factors(la: Partition, block: RouquierBlock) -> list[tuple[int, int]]:
    """``(i-1, la^(i)'_r)`` for ``i = 1..ell`` then ``r`` ascending."""
    q = _check_p_prime(la, block)
    return [(i - 1, x) for i in range(1, block.ell + 1) for x in conjugate(q[i])]


def phitilde(la: Partition, block: RouquierBlock, factor_order: Optional[Sequence[int]] = None) -> CharacterVector:
    """Induce ``chi^rho`` along the words of ``la``; ``factor_order`` permutes
    the canonical factor list."""
    factors = gg_factors(la, block)
    if factor_order is not None:
        if sorted(factor_order) != list(range(len(factors))):
            raise ValueError("factor_order must permute the factor indices")
        factors = [factors[j] for j in factor_order]
    vec: Vector = {tuple(block.rho): 1}
    for i, k in factors:
        vec = apply_gg(vec, i, k, block.p)
    return CharacterVector(block.with_weight(sum(map(sum, bar_quotient(tuple(la), block)))), vec)


def lfromm_rhs(la: Partition, block: RouquierBlock) -> CharacterVector:
    """``Dtilde_la * sum_mu prod_i K_{mu^(i-1), la^(i)'} * phat_mu``."""
    q = _check_p_prime(la, block)
    ell = block.ell
    sub = block.with_weight(sum(map(sum, q)))
    out = CharacterVector(sub, {})
    for mu in sub.partitions.restricted:
        qm = bar_quotient(mu, sub)
        coef = 1
        for i in range(1, ell + 1):
            coef *= kostka_number(qm[i - 1], conjugate(q[i]))
            if not coef:
                break
        if coef:
            out = out + phat_character(mu, sub).scale(coef)
    return out.scale(Dtilde(la, block))


def check_lfromm(la: Partition, block: RouquierBlock) -> bool:
    return phitilde(la, block) == lfromm_rhs(la, block)


def phitilde_bounded(la: Partition, block: RouquierBlock) -> bool:
    q = _check_p_prime(la, block)
    sub = block.with_weight(sum(map(sum, q)))
    m = tuple(sum(c) for c in q[1:]) + (0,)
    return m_bounded(phitilde(la, block).coeffs, m, sub)
