"""Sparse one-variable integer Laurent polynomials.

Stored as a sorted tuple of (exponent, coefficient) pairs with no zero
coefficients, so values are hashable and comparison is exact.  The
variable tag ('A' for bracket values, 't' for Jones values) travels with
the polynomial and must agree for arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple[tuple[int, int], ...] = ()
    var: str = "t"

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((e, c) for e, c in self.terms if c != 0))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, var: str = "t") -> "LaurentPoly":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "t") -> "LaurentPoly":
        return cls(((0, 1),), var)

    @classmethod
    def monomial(cls, coeff: int, exp: int, var: str = "t") -> "LaurentPoly":
        return cls(((exp, coeff),), var)

    @classmethod
    def from_dict(cls, d: dict[int, int], var: str = "t") -> "LaurentPoly":
        return cls(tuple(d.items()), var)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_var(self, other: "LaurentPoly") -> None:
        if self.var != other.var:
            raise DomainError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_var(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d, self.var)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.var)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_var(other)
        d: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(d, self.var)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise DomainError("negative powers of polynomials are not defined")
        result = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e, k * c) for e, c in self.terms), self.var)

    def shift(self, delta: int) -> "LaurentPoly":
        """Multiply by var^delta."""
        return LaurentPoly(tuple((e + delta, c) for e, c in self.terms), self.var)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute var -> var^-1."""
        return LaurentPoly(tuple((-e, c) for e, c in self.terms), self.var)

    def reindex(self, divisor: int, new_var: str) -> "LaurentPoly":
        """Substitute var^divisor -> new_var; every exponent must divide evenly."""
        out = []
        for e, c in self.terms:
            if e % divisor != 0:
                raise DomainError(
                    f"exponent {e} not divisible by {divisor} when substituting"
                    f" {self.var}^{divisor} -> {new_var}"
                )
            out.append((e // divisor, c))
        return LaurentPoly(tuple(out), new_var)

    def min_degree(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def max_degree(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            parts.append(str(c) if e == 0 else f"{c}*{self.var}^{e}")
        return " + ".join(parts)
