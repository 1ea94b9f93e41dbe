"""
Truncated power series with exact integer coefficients.

A CoeffSeq holds the coefficients of t^1..t^N; the constant term is always zero.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple


@dataclass(frozen=True)
class CoeffSeq:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("coefficient sequence must have at least one term")
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient(self, n: int) -> int:
        if not 1 <= n <= len(self.coeffs):
            raise ValueError(f"coefficient index {n} outside 1..{len(self.coeffs)}")
        return self.coeffs[n - 1]

    def to_json(self):
        return list(self.coeffs)

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, list):
            raise ValueError("coefficient sequence must be a JSON array")
        return CoeffSeq(tuple(obj))


def invert_transform(w: CoeffSeq) -> CoeffSeq:
    """Coefficients of w/(1-w), truncated to the length of w."""
    big_w = []
    for n in range(1, len(w) + 1):
        total = w.coefficient(n)
        for j in range(1, n):
            total += w.coefficient(j) * big_w[n - j - 1]
        big_w.append(total)
    return CoeffSeq(tuple(big_w))


def rational_coeffs(numer: Sequence[int], denom: Sequence[int], N: int) -> CoeffSeq:
    """
    First N coefficients (t^1..t^N) of numer(t)/denom(t). Polynomials are
    dense coefficient lists, constant term first.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    numer = list(numer) or [0]
    denom = list(denom)
    if not denom or denom[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")

    out = []
    for k in range(N + 1):
        total = numer[k] if k < len(numer) else 0
        for i in range(1, min(k, len(denom) - 1) + 1):
            total -= denom[i] * out[k - i]
        q, r = divmod(total, denom[0])
        if r:
            raise ValueError(f"coefficient of t^{k} is not an integer")
        out.append(q)

    if out[0] != 0:
        raise ValueError("series has a nonzero constant term")
    return CoeffSeq(tuple(out[1:]))


def linear_recurrence_check(seq: Iterable[int], coeffs: Sequence[int]) -> bool:
    """True iff a(n) = sum(c_i * a(n-i)) for every n past the initial terms."""
    a = list(seq)
    d = len(coeffs)
    for n in range(d, len(a)):
        if a[n] != sum(c * a[n - i - 1] for i, c in enumerate(coeffs)):
            return False
    return True


def parse_poly(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"polynomial must be comma-separated integers, got {text!r}")
