"""Named verification suites: each checks an identity exhaustively over a range
and reports how many cases it covered."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .barcore import (
    RouquierBlock,
    bar_bijection,
    bar_quotient,
    fd,
    fd_composition,
    gth,
    iter_block_members,
    m_bounded,
    quotient_contains,
    quotient_succeq,
    regularize_rock,
)
from .branching import (
    Dtilde_entry,
    apply_gg,
    check_lfromm,
    gg_coefficient_closed,
    gg_factors,
    phitilde,
    phitilde_bounded,
)
from .partitions import (
    conjugate,
    contains,
    dominates,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_strict,
    is_p_prime,
    is_restricted,
    is_strict,
    parity_a,
)
from .polynomial import IntPolynomial
from .rock import (
    big_D,
    big_D_direct,
    brauer_factor,
    dhat,
    phat_character,
    qdecomp,
    type_of_D,
    unadjusted_cartan,
    wreath_cartan_relabeled,
)
from .symmfunc import (
    inverse_kostka,
    inverse_kostka_at,
    kostka_foulkes,
    kostka_number,
    lr_coeff,
    lr_product,
    lr_product_oracle,
    perm_sgn_perm_mult,
    perm_sgn_perm_mult_modules,
    schur_p_expansion,
)
from .wreath import lr_splittings


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, witness: object = None) -> None:
        self.cases += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(witness)
        elif not ok:
            self.failures.append(None)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  first failure: {self.failures[0]!r}"
        return f"{status}  {self.name}: {self.cases} cases{extra}"


# --- symmetric functions ----------------------------------------------------------

def _positive_compositions(n: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _positive_compositions(n - first):
            yield (first,) + rest


def _pairs(n: int):
    for a in range(n + 1):
        for x in enumerate_partitions(a):
            for y in enumerate_partitions(n - a):
                yield x, y


def check_mackey(max_size: int = 6) -> Check:
    chk = Check("mackey")
    for n in range(max_size + 1):
        for lam in _positive_compositions(n):
            for tau, sigma in _pairs(n):
                lhs = sum(kostka_number(mu, lam) * lr_coeff(mu, [tau, sigma]) for mu in enumerate_partitions(n))
                rhs = 0
                for split in product(*(range(x + 1) for x in lam)):
                    beta = split
                    gamma = tuple(x - y for x, y in zip(lam, split))
                    if sum(beta) != sum(tau):
                        continue
                    rhs += kostka_number(tau, beta) * kostka_number(sigma, gamma)
                chk.record(lhs == rhs, (lam, tau, sigma, lhs, rhs))
    return chk


def check_smackey(max_size: int = 6) -> Check:
    chk = Check("smackey")
    for n in range(max_size + 1):
        pairs = list(_pairs(n))
        for alpha, beta in pairs:
            ab = lr_product(alpha, beta)
            split_a = lr_splittings(alpha, 2)
            split_b = lr_splittings(beta, 2)
            for gamma, delta in pairs:
                gd = lr_product(gamma, delta)
                lhs = sum(c * gd.get(la, 0) for la, c in ab.items())
                rhs = 0
                for (phi, chi), c1 in split_a:
                    for (psi, omega), c2 in split_b:
                        c3 = lr_coeff(gamma, [phi, psi])
                        if c3:
                            rhs += c1 * c2 * c3 * lr_coeff(delta, [chi, omega])
                chk.record(lhs == rhs, (alpha, beta, gamma, delta, lhs, rhs))
    return chk


def check_klem(max_size: int = 5) -> Check:
    chk = Check("klem")
    for n in range(max_size + 1):
        parts = enumerate_partitions(n)
        strict = enumerate_strict(n)
        for xi in parts:
            for pi in parts:
                lhs = sum(
                    2 ** len(la) * inverse_kostka_at(la, xi, -1) * inverse_kostka_at(la, pi, -1) for la in strict
                )
                rhs = 0
                for a in range(n + 1):
                    for beta in enumerate_partitions(a):
                        for gamma in enumerate_partitions(n - a):
                            c = lr_coeff(xi, [beta, conjugate(gamma)])
                            if c:
                                rhs += c * lr_coeff(pi, [beta, gamma])
                chk.record(lhs == rhs, (xi, pi, lhs, rhs))
    return chk


def check_msgnm(max_size: int = 6) -> Check:
    chk = Check("msgnm")
    for n in range(max_size + 1):
        for b in range(n + 1):
            for beta in _positive_compositions(b):
                for gamma in _positive_compositions(n - b):
                    for alpha in enumerate_partitions(n):
                        x = perm_sgn_perm_mult(beta, gamma, alpha)
                        y = perm_sgn_perm_mult_modules(beta, gamma, alpha)
                        chk.record(x == y, (beta, gamma, alpha, x, y))
    return chk


def check_kostka_inverse(max_size: int = 8) -> Check:
    """``K * K^{-1} = I`` as polynomial matrices."""
    chk = Check("kostka-times-inverse")
    for n in range(max_size + 1):
        labels = enumerate_partitions(n)
        for a in labels:
            for b in labels:
                acc = IntPolynomial()
                for c in labels:
                    k = kostka_foulkes(a, c)
                    if k:
                        acc = acc + k * inverse_kostka(c, b)
                chk.record(acc == (1 if a == b else 0), (a, b, acc))
    return chk


def check_kostka_foulkes_at_one(max_size: int = 6) -> Check:
    chk = Check("kostka-foulkes-at-1")
    for n in range(max_size + 1):
        for s in enumerate_partitions(n):
            for la in enumerate_partitions(n):
                chk.record(kostka_foulkes(s, la).evaluate(1) == kostka_number(s, la), (s, la))
    return chk


def diagonal_hooks(sigma) -> tuple[int, ...]:
    """Hook lengths of the diagonal cells of ``sigma``."""
    conj = conjugate(sigma)
    out = []
    for i in range(len(sigma)):
        if sigma[i] <= i:
            break
        out.append(sigma[i] - i + conj[i] - i - 1)
    return tuple(out)


def check_inverse_kostka_positivity(max_size: int = 8) -> Check:
    chk = Check("inverse-kostka-at-minus-1-nonnegative")
    for n in range(max_size + 1):
        for la in enumerate_strict(n):
            for s in enumerate_partitions(n):
                v = inverse_kostka_at(la, s, -1)
                chk.record(v >= 0, (la, s, v))
        for s in enumerate_partitions(n):
            v = inverse_kostka_at(diagonal_hooks(s), s, -1)
            chk.record(v > 0, ("diagonal-hook witness", s, v))
    return chk


def check_schur_p_oracle(max_size: int = 8) -> Check:
    chk = Check("schur-p-oracle")
    for n in range(max_size + 1):
        for la in enumerate_strict(n):
            ex = schur_p_expansion(la)
            ik = {s: inverse_kostka_at(la, s, -1) for s in enumerate_partitions(n)}
            chk.record(ex == {k: v for k, v in ik.items() if v}, la)
    return chk


def check_lr_oracle(max_size: int = 6) -> Check:
    chk = Check("lr-monomial-oracle")
    for n in range(max_size + 1):
        for mu, nu in _pairs(n):
            chk.record(lr_product(mu, nu) == lr_product_oracle(mu, nu), (mu, nu))
    return chk


# --- block combinatorics ---------------------------------------------------------

def check_partition_counts(block: RouquierBlock) -> Check:
    chk = Check(f"block-sizes p={block.p} d={block.d}")
    parts = block.partitions
    n_i = len(enumerate_multipartitions(block.ell + 1, block.d))
    n_j = len(enumerate_multipartitions(block.ell, block.d))
    chk.record(len(parts.all) == n_i, ("all", len(parts.all), n_i))
    chk.record(len(parts.restricted) == n_j, ("restricted", len(parts.restricted), n_j))
    chk.record(len(parts.p_prime) == n_j, ("p'", len(parts.p_prime), n_j))
    for la in parts.all:
        q = bar_quotient(la, block)
        chk.record(is_strict(la) == is_strict(q[0]), ("strict", la))
        chk.record(is_p_prime(la, block.p) == (not q[0]), ("p'", la))
        chk.record(is_restricted(la, block.p) == (not q[-1]), ("restricted", la))
    return chk


def check_quotient_dominance(block: RouquierBlock) -> Check:
    chk = Check(f"quotient-dominance p={block.p} d={block.d}")
    labels = block.partitions.all
    quots = {la: bar_quotient(la, block) for la in labels}
    for la in labels:
        for mu in labels:
            chk.record(quotient_succeq(quots[la], quots[mu]) == dominates(mu, la), (la, mu))
    return chk


def check_quotient_containment(block: RouquierBlock) -> Check:
    chk = Check(f"quotient-containment p={block.p} d={block.d}")
    members = iter_block_members(block, range(block.d + 1))
    for la, ql in members:
        for al, qa in members:
            chk.record(quotient_contains(ql, qa) == contains(al, la), (la, al))
    return chk


def check_bar_bijection(block: RouquierBlock) -> Check:
    chk = Check(f"bar-bijection p={block.p} d={block.d}")
    images = set()
    for la in block.partitions.p_prime:
        mu = bar_bijection(la, block)
        images.add(mu)
        chk.record(is_restricted(mu, block.p) and fd(mu, block) == la, la)
    chk.record(images == set(block.partitions.restricted), "not onto")
    return chk


# --- rock ---------------------------------------------------------------------------

def check_triangularity(block: RouquierBlock) -> list[Check]:
    p = block.p
    tri = Check(f"unitriangularity p={p} d={block.d}")
    diag = Check(f"regularization-diagonal p={p} d={block.d}")
    qreg = Check(f"qdecomp-at-regularization p={p} d={block.d}")
    fixed = Check(f"regularization-fixes-restricted p={p} d={block.d}")
    brauer = Check(f"brauer-reciprocity p={p} d={block.d}")
    routes = Check(f"big-D-two-routes p={p} d={block.d}")
    pos = Check(f"positivity p={p} d={block.d}")
    dtype = Check(f"D-type-constant p={p} d={block.d}")
    parts = block.partitions
    regs = {}
    for la in parts.strict:
        q = bar_quotient(la, block)
        reg = regularize_rock(la, block)
        regs[la] = reg
        h0, a = len(q[0]), parity_a(la)
        diag.record(dhat(la, reg, block) == 2 ** ((h0 + a) // 2), la)
        qreg.record(qdecomp(la, reg, block) == IntPolynomial.monomial(2 * sum(q[-1])), la)
        for mu in parts.restricted:
            v = dhat(la, mu, block)
            D = big_D(la, mu, block)
            tri.record(v == 0 or dominates(reg, mu), (la, mu, v))
            brauer.record(v == brauer_factor(la, mu, p) * D, (la, mu, v, D))
            routes.record(D == big_D_direct(la, mu, block), (la, mu))
            pos.record(v >= 0 and D >= 0, (la, mu))
    for la in parts.strict:
        if is_restricted(la, p):
            fixed.record(regs[la] == la, la)
    types = {type_of_D(mu, p) for mu in parts.restricted}
    dtype.record(len(types) == 1, types)
    return [tri, diag, qreg, fixed, brauer, routes, pos, dtype]


def check_phat(block: RouquierBlock) -> Check:
    chk = Check(f"phat-bounded p={block.p} d={block.d}")
    for mu in block.partitions.restricted:
        vec = phat_character(mu, block)
        m = gth(mu, block)
        chk.record(m_bounded(vec.coeffs, m, block), ("bounded", mu))
        chk.record(vec[fd(mu, block)] == 1, ("coefficient at fd", mu))
        low = fd_composition(m)
        hits = [la for la in vec.support() if gth(la, block) == low]
        chk.record(hits == [fd(mu, block)], ("unique lowest term", mu, hits))
    return chk


def check_cartan_equality(block: RouquierBlock, jobs: Optional[int] = None) -> list[Check]:
    a = unadjusted_cartan(block, "closed_form", jobs)
    b = unadjusted_cartan(block, "from_decomp", jobs)
    c = wreath_cartan_relabeled(block, "odd", jobs)
    c1 = Check(f"cartan closed=from-decomp p={block.p} d={block.d}")
    c2 = Check(f"cartan closed=wreath(iota) p={block.p} d={block.d}")
    c3 = Check(f"cartan symmetric p={block.p} d={block.d}")
    for i, mu in enumerate(a.row_labels):
        for j, nu in enumerate(a.col_labels):
            c1.record(a.entries[i][j] == b.entries[i][j], (mu, nu))
            c2.record(a.entries[i][j] == c.entries[i][j], (mu, nu))
            c3.record(a.entries[i][j] == a.entries[j][i], (mu, nu))
    return [c1, c2, c3]


# --- branching -----------------------------------------------------------------------

def check_gg_oracle(block: RouquierBlock) -> Check:
    chk = Check(f"gg-oracle p={block.p} d={block.d}")
    for c in range(block.d):
        for la, _ in iter_block_members(block, [c]):
            if not is_strict(la):
                continue
            for k in range(1, block.d - c + 1):
                targets = [a for a, _ in iter_block_members(block, [c + k]) if is_strict(a)]
                for i in range(block.ell):
                    out = apply_gg({la: 1}, i, k, block.p)
                    chk.record(set(out) <= set(targets), ("left the block", la, i, k))
                    for al in targets:
                        x, y = out.get(al, 0), gg_coefficient_closed(la, al, i, k, block)
                        chk.record(x == y, (la, al, i, k, x, y))
    return chk


def check_lfromm_suite(block: RouquierBlock) -> list[Check]:
    lf = Check(f"lfromm p={block.p} d={block.d}")
    lp = Check(f"phitilde-p-prime-coefficients p={block.p} d={block.d}")
    bd = Check(f"phitilde-bounded p={block.p} d={block.d}")
    order = Check(f"phitilde-order-independent p={block.p} d={block.d}")
    dom = Check(f"phitilde-dominance-window p={block.p} d={block.d}")
    for la in block.partitions.p_prime:
        vec = phitilde(la, block)
        lf.record(check_lfromm(la, block), la)
        bd.record(phitilde_bounded(la, block), la)
        n = len(gg_factors(la, block))
        order.record(phitilde(la, block, list(reversed(range(n)))) == vec, la)
        q = bar_quotient(la, block)
        top = tuple(conjugate(c) for c in q[1:]) + ((),)
        dom.record(vec[la] != 0, ("diagonal", la))
        for al in block.partitions.strict:
            qa = bar_quotient(al, block)
            if vec[al]:
                dom.record(quotient_succeq(qa, q) and quotient_succeq(top, qa), (la, al))
            lp.record((vec[al] != 0) == (Dtilde_entry(la, al, block) != 0), ("support", la, al))
            if is_p_prime(al, block.p):
                lp.record(vec[al] == Dtilde_entry(la, al, block), ("value", la, al))
    return [lf, lp, bd, order, dom]


# --- registry ---------------------------------------------------------------------------

SUITES = (
    "symmfunc-identities",
    "symmfunc-oracles",
    "dominance",
    "containment",
    "gg-oracle",
    "lfromm",
    "cartan-equality",
    "triangularity",
)


def blocks_for(ps: Iterable[int], ds: Iterable[int]) -> list[RouquierBlock]:
    return [RouquierBlock.minimal(p, d) for p in ps for d in ds]


def run_suite(name: str, ps: Iterable[int], ds: Iterable[int], jobs: Optional[int] = None) -> list[Check]:
    ps, ds = list(ps), list(ds)
    if name == "symmfunc-identities":
        return [check_mackey(), check_smackey(), check_klem(), check_msgnm()]
    if name == "symmfunc-oracles":
        return [
            check_kostka_inverse(),
            check_kostka_foulkes_at_one(),
            check_inverse_kostka_positivity(),
            check_schur_p_oracle(),
            check_lr_oracle(),
        ]
    out: list[Check] = []
    for block in blocks_for(ps, ds):
        if name == "dominance":
            out += [check_partition_counts(block), check_quotient_dominance(block), check_bar_bijection(block)]
        elif name == "containment":
            out.append(check_quotient_containment(block))
        elif name == "gg-oracle":
            out.append(check_gg_oracle(block))
        elif name == "lfromm":
            out += check_lfromm_suite(block)
        elif name == "cartan-equality":
            out += check_cartan_equality(block, jobs)
        elif name == "triangularity":
            out += check_triangularity(block) + [check_phat(block)]
        else:
            raise KeyError(name)
    return out
