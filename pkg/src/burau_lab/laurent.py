"""Exact arithmetic for integer-coefficient Laurent polynomials in one
variable t, and for square matrices over them.

A Laurent polynomial is stored as a finitely supported map from integer
exponents to nonzero integer coefficients, so equality is structural and
the zero polynomial has empty support. Coefficients are Python ints and
therefore unbounded; matrix entries in braid-group representations grow
without limit in the word length, so nothing here may round or overflow.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping


class NotDivisible(ArithmeticError):
    """Exact division failed: the numerator is not a multiple of the
    denominator in the Laurent ring over the integers."""


class DimensionMismatch(ValueError):
    """Matrix operands have incompatible dimensions."""


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*?\s*)?"
    r"(?:(?P<var>t)(?:\^(?P<exp>[+-]?\d+))?)?"
)


class LaurentPoly:
    """An integer-coefficient Laurent polynomial in one variable t.

    >>> p = LaurentPoly({0: 1, 1: -1})
    >>> print(p * p)
    1 - 2t + t^2
    >>> print(LaurentPoly.t(-1) * LaurentPoly.t(1))
    1
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data: dict[int, int] = {}
        for exp, c in items:
            if c:
                data[exp] = data.get(exp, 0) + c
                if not data[exp]:
                    del data[exp]
        self._coeffs = data
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> LaurentPoly:
        return _ZERO

    @classmethod
    def one(cls) -> LaurentPoly:
        return _ONE

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def t(cls, exp: int = 1) -> LaurentPoly:
        """The monomial t^exp."""
        return cls({exp: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        """A copy of the exponent-to-coefficient map (zero coefficients absent)."""
        return dict(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_unit(self) -> bool:
        """True for the ring units: the monomials with coefficient +-1."""
        if len(self._coeffs) != 1:
            return False
        return next(iter(self._coeffs.values())) in (1, -1)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return _ZERO
            return _raw({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def shift(self, exp: int) -> LaurentPoly:
        """Multiply by the monomial t^exp."""
        if not exp:
            return self
        return _raw({e + exp: c for e, c in self._coeffs.items()})

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            # Only units +-t^e are invertible, and their inverses are +-t^-e.
            if not self.is_unit:
                raise NotDivisible(f"cannot invert non-unit {self}")
            ((e, c),) = self._coeffs.items()
            return LaurentPoly({-e: c}) ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """Divide exactly by ``den``, raising NotDivisible if no Laurent
        polynomial quotient with integer coefficients exists.

        Runs lowest-exponent-first long division, which is well defined on
        the Laurent ring after shifting by the minimal exponents.

        >>> print((LaurentPoly.one() - LaurentPoly.t(4)).exact_div(1 - LaurentPoly.t()))
        1 + t + t^2 + t^3
        """
        if isinstance(den, int):
            den = LaurentPoly({0: den})
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return _ZERO
        num = dict(self._coeffs)
        den_low = den.min_exp
        den_lc = den._coeffs[den_low]
        # Quotient exponents cannot exceed this if the division is exact.
        max_q_exp = self.max_exp - den.max_exp
        quot: dict[int, int] = {}
        while num:
            low = min(num)
            q_exp = low - den_low
            if q_exp > max_q_exp:
                raise NotDivisible(f"{self} is not divisible by {den}")
            q_c, rem = divmod(num[low], den_lc)
            if rem:
                raise NotDivisible(f"{self} is not divisible by {den}")
            quot[q_exp] = q_c
            for e, c in den._coeffs.items():
                e2 = e + q_exp
                s = num.get(e2, 0) - c * q_c
                if s:
                    num[e2] = s
                else:
                    num.pop(e2, None)
        return _raw(quot)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._coeffs.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the textual form produced by ``str``: integer coefficients
        and caret exponents, e.g. ``1 - t + t^2 - t^-1``."""
        out: dict[int, int] = {}
        pos = 0
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty polynomial text")
        if stripped == "0":
            return _ZERO
        n = len(text)
        first = True
        while pos < n:
            m = _TERM_RE.match(text, pos)
            if not m or (m.group("coeff") is None and m.group("var") is None):
                raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
            sign = m.group("sign")
            if sign is None and not first:
                raise ValueError(f"missing +/- between terms at position {pos}: {text!r}")
            c = int(m.group("coeff")) if m.group("coeff") else 1
            if sign == "-":
                c = -c
            if m.group("var"):
                e = int(m.group("exp")) if m.group("exp") else 1
            else:
                e = 0
            out[e] = out.get(e, 0) + c
            pos = m.end()
            first = False
            while pos < n and text[pos].isspace():
                pos += 1
        return cls(out)


def _raw(coeffs: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._coeffs = coeffs
    p._hash = None
    return p


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})


class LaurentMatrix:
    """A square matrix over LaurentPoly with exact operations.

    Immutable once constructed; all arithmetic returns new matrices.
    """

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Iterable[Iterable[LaurentPoly | int]]):
        grid = tuple(
            tuple(r if isinstance(r, LaurentPoly) else LaurentPoly({0: r}) for r in row)
            for row in rows
        )
        dim = len(grid)
        if dim == 0 or any(len(row) != dim for row in grid):
            raise DimensionMismatch("matrix must be square and nonempty")
        self.dim = dim
        self._rows = grid

    @classmethod
    def identity(cls, dim: int) -> LaurentMatrix:
        if dim < 1:
            raise DimensionMismatch("dimension must be positive")
        return cls(
            [[_ONE if i == j else _ZERO for j in range(dim)] for i in range(dim)]
        )

    @property
    def rows(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatch(f"cannot multiply {self.dim}x{self.dim} by {other.dim}x{other.dim}")
        cols = list(zip(*other._rows))
        out = []
        for row in self._rows:
            out.append(
                [
                    sum((a * b for a, b in zip(row, col) if not a.is_zero), _ZERO)
                    for col in cols
                ]
            )
        return LaurentMatrix(out)

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")
        return LaurentMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")
        return LaurentMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __pow__(self, n: int) -> LaurentMatrix:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: LaurentPoly | int) -> LaurentMatrix:
        return LaurentMatrix([[e * c for e in row] for row in self._rows])

    def map_entries(self, fn) -> list[list]:
        """Apply fn to every entry, returning a plain nested list."""
        return [[fn(e) for e in row] for row in self._rows]

    def pad_identity(self, extra: int) -> LaurentMatrix:
        """Direct sum with an identity block of the given size."""
        if extra < 0:
            raise DimensionMismatch("padding size must be nonnegative")
        if extra == 0:
            return self
        d = self.dim + extra
        out = [[_ZERO] * d for _ in range(d)]
        for i, row in enumerate(self._rows):
            out[i][: self.dim] = row
        for i in range(self.dim, d):
            out[i][i] = _ONE
        return LaurentMatrix(out)

    def drop_last_row_col(self) -> LaurentMatrix:
        if self.dim < 2:
            raise DimensionMismatch("cannot shrink a 1x1 matrix")
        return LaurentMatrix([row[:-1] for row in self._rows[:-1]])

    def det(self) -> LaurentPoly:
        """Determinant by fraction-free (Bareiss) elimination; every interior
        division is exact in the Laurent ring."""
        n = self.dim
        a = [list(row) for row in self._rows]
        sign = 1
        prev = _ONE
        for k in range(n - 1):
            if a[k][k].is_zero:
                for r in range(k + 1, n):
                    if not a[r][k].is_zero:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return _ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
                a[i][k] = _ZERO
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def inverse(self) -> LaurentMatrix:
        """Exact inverse over the Laurent ring.

        Exists iff det is a unit (+-t^k); otherwise adjugate entries fail
        to divide and NotDivisible is raised.
        """
        d = self.det()
        if d.is_zero:
            raise NotDivisible("matrix is singular")
        n = self.dim
        if n == 1:
            return LaurentMatrix([[_ONE.exact_div(d)]])
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = LaurentMatrix(
                    [
                        [self._rows[r][c] for c in range(n) if c != i]
                        for r in range(n)
                        if r != j
                    ]
                )
                cof = minor.det()
                if (i + j) % 2:
                    cof = -cof
                row.append(cof.exact_div(d))
            out.append(row)
        return LaurentMatrix(out)

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self._rows]
        widths = [max(len(cells[i][j]) for i in range(self.dim)) for j in range(self.dim)]
        lines = []
        for row in cells:
            lines.append("[ " + "  ".join(s.rjust(w) for s, w in zip(row, widths)) + " ]")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"LaurentMatrix(dim={self.dim})"
