"""Univariate polynomials with integer coefficients, stored sparsely."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "IntPolynomial"]


class IntPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[int], None] = None):
        c: dict[int, int] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent")
                if v:
                    c[int(e)] = int(v)
        else:
            for e, v in enumerate(coeffs):
                if v:
                    c[e] = int(v)
        self._c = c

    @classmethod
    def constant(cls, v: int) -> "IntPolynomial":
        return cls({0: v})

    @classmethod
    def monomial(cls, e: int, v: int = 1) -> "IntPolynomial":
        return cls({e: v})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c, default=-1)

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    @staticmethod
    def _lift(x: Scalar) -> "IntPolynomial":
        return x if isinstance(x, IntPolynomial) else IntPolynomial.constant(x)

    def __add__(self, other: Scalar) -> "IntPolynomial":
        o = self._lift(other)
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return IntPolynomial(c)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: Scalar) -> "IntPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "IntPolynomial":
        return self._lift(other) - self

    def __mul__(self, other: Scalar) -> "IntPolynomial":
        o = self._lift(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return IntPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        out = IntPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x: int) -> int:
        return sum(v * x ** e for e, v in self._c.items())

    def substitute(self, scale: int, power: int) -> "IntPolynomial":
        """Replace the variable ``t`` by ``scale * q**power``."""
        return IntPolynomial({e * power: v * scale ** e for e, v in self._c.items()})

    def to_json(self) -> dict:
        return {"coeffs": {str(e): self._c[e] for e in sorted(self._c)}}

    @classmethod
    def from_json(cls, data: Mapping) -> "IntPolynomial":
        return cls({int(e): v for e, v in data["coeffs"].items()})

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                body = str(abs(v))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if abs(v) == 1 else f"{abs(v)}*{mono}"
            sign = "-" if v < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({self.format()})"

    def __str__(self) -> str:
        return self.format()


ZERO = IntPolynomial()
ONE = IntPolynomial.constant(1)
T = IntPolynomial.monomial(1)
