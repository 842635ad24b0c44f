"""Truncated formal power series in z whose coefficients are polynomials in x.

A :class:`TruncatedSeries` of order N carries exactly the coefficients of
z^0 .. z^N.  Arithmetic is exact and closed under the truncation: the
product of two order-N series is the true product with every term above
z^N discarded, so any chain of operations at a common order agrees with
the untruncated computation up to that order.
"""

from __future__ import annotations

from typing import Iterable, Union

from .poly import ONE, Polynomial, ZERO

DEFAULT_ORDER = 32

CoeffLike = Union[Polynomial, int]


def _as_poly(value: CoeffLike) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial((value,))
    raise TypeError(f"series coefficients must be Polynomial or int, got {type(value).__name__}")


class TruncatedSeries:
    """Power series in z, truncated after z**order, with Polynomial coefficients."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, terms: Iterable[CoeffLike] = (), order: int = DEFAULT_ORDER) -> None:
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        coeffs = [_as_poly(t) for t in terms]
        if len(coeffs) > order + 1:
            raise ValueError(
                f"got {len(coeffs)} coefficients for a series of order {order}"
            )
        coeffs.extend([ZERO] * (order + 1 - len(coeffs)))
        self._order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((ONE,), order)

    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Polynomial:
        """Coefficient of z**k."""
        if not 0 <= k <= self._order:
            raise ValueError(f"coefficient index {k} outside order {self._order}")
        return self._coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self._order != other._order:
            raise ValueError(
                f"series order mismatch: {self._order} != {other._order}"
            )

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(
            (a + b for a, b in zip(self._coeffs, other._coeffs)), self._order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-a for a in self._coeffs), self._order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(
            (a - b for a, b in zip(self._coeffs, other._coeffs)), self._order
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        n = self._order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"series exponent must be a non-negative int, got {exponent!r}")
        result = TruncatedSeries.one(self._order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant coefficient exactly 1.

        Coefficients follow from solving self * inv = 1 degree by degree,
        which keeps everything in integer-coefficient polynomials.
        """
        if self._coeffs[0] != ONE:
            raise ValueError("series inverse requires constant coefficient 1")
        n = self._order
        inv = [ONE] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                a = self._coeffs[j]
                b = inv[k - j]
                if not a.is_zero and not b.is_zero:
                    acc = acc + a * b
            inv[k] = -acc
        return TruncatedSeries(inv, n)

    def shifted(self, k: int) -> "TruncatedSeries":
        """Multiply by z**k, discarding what truncation pushes past the order."""
        if k < 0:
            raise ValueError(f"shift must be >= 0, got {k}")
        kept = self._coeffs[: max(0, self._order + 1 - k)]
        return TruncatedSeries((ZERO,) * min(k, self._order + 1) + kept, self._order)

    def truncated(self, order: int) -> "TruncatedSeries":
        """The same series at a lower (or equal) order."""
        if order > self._order:
            raise ValueError(f"cannot extend order {self._order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1], order)

    # ------------------------------------------------------------------
    # rendering / serialization

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero:
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*z")
            else:
                parts.append(f"({c})*z^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^{self._order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self._order}, {str(self)!r})"

    def to_json_dict(self) -> dict:
        return {
            "order": self._order,
            "z_coeffs": [{"coeffs": c.to_coeff_strings()} for c in self._coeffs],
        }


def rational_expand(numerator: TruncatedSeries, denominator: TruncatedSeries) -> TruncatedSeries:
    """Expand numerator / denominator; the denominator's constant term must be 1."""
    return numerator * denominator.inverse()
