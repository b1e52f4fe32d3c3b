"""Path counting and higher q,t-Catalan polynomials.

C_n^(k)(q, t) sums q^dinv t^area over the m = kn+1 frame; the sweep map
transports (dinv, area) to (area, bounce), so summing q^area t^bounce gives
the same polynomial.  catalan_step instead builds it from the one-column-
narrower frame, weighting each path by its small ranks.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Iterator

from .core import DyckPath, Frame, area, dinv, enumerate_paths, make_frame, rank_sequence
from .fuss import invert_fuss


class QTPolynomial:
    """Sparse bivariate polynomial in q, t with nonnegative integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c < 0 or a < 0 or b < 0:
                raise ValueError("exponents and coefficients must be nonnegative")
            if c:
                clean[(a, b)] = c
        self.terms = clean

    def __eq__(self, other) -> bool:
        return isinstance(other, QTPolynomial) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"QTPolynomial({self.pretty()})"

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QTPolynomial(out)

    def __mul__(self, other: "QTPolynomial") -> "QTPolynomial":
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return QTPolynomial(out)

    def evaluate(self, q: int, t: int) -> int:
        return sum(c * q**a * t**b for (a, b), c in self.terms.items())

    def max_q_degree(self) -> int:
        return max((a for a, _ in self.terms), default=0)

    def max_t_degree(self) -> int:
        return max((b for _, b in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(q-exp, t-exp, coeff) ascending by (total degree, q-exponent)."""
        return [
            (a, b, self.terms[(a, b)])
            for a, b in sorted(self.terms, key=lambda ab: (ab[0] + ab[1], ab[0]))
        ]

    def to_json(self) -> str:
        return json.dumps([[a, b, str(c)] for a, b, c in self.sorted_terms()])

    @classmethod
    def from_json(cls, text: str) -> "QTPolynomial":
        return cls({(int(a), int(b)): int(c) for a, b, c in json.loads(text)})

    def pretty(self) -> str:
        """Human form, highest (total degree, q-exponent) first: 'q^3 + q^2 t + ...'."""
        if not self.terms:
            return "0"
        parts = []
        for a, b in sorted(self.terms, key=lambda ab: (ab[0] + ab[1], ab[0]), reverse=True):
            c = self.terms[(a, b)]
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            parts.append(" ".join(factors))
        return " + ".join(parts)


def _accumulate(pairs: Iterable[tuple[int, int]]) -> QTPolynomial:
    terms: dict[tuple[int, int], int] = {}
    for key in pairs:
        terms[key] = terms.get(key, 0) + 1
    return QTPolynomial(terms)


def path_count(frame: Frame) -> int:
    """Number of paths of the frame: C(m+n, m) / (m+n), exactly."""
    return math.comb(frame.size, frame.m) // frame.size


def _fuss_paths(k: int, n: int) -> Iterator[DyckPath]:
    return enumerate_paths(make_frame(k * n + 1, n))


def catalan_qt(k: int, n: int, paths: Iterable[DyckPath] | None = None) -> QTPolynomial:
    """Sum of q^dinv t^area over the m = kn+1 frame.

    ``paths`` may restrict the sum to a partition of the frame (see
    enumerate_paths prefixes); partial polynomials add up to the whole.
    """
    if paths is None:
        paths = _fuss_paths(k, n)
    return _accumulate((dinv(D), area(D)) for D in paths)


def catalan_qt_via_bounce(
    k: int, n: int, paths: Iterable[DyckPath] | None = None
) -> QTPolynomial:
    """Sum of q^area t^bounce, bounce taken through the linear inversion."""
    if paths is None:
        paths = _fuss_paths(k, n)
    return _accumulate((area(D), area(invert_fuss(D))) for D in paths)


def catalan_step(k: int, n: int) -> QTPolynomial:
    """One-column-step form: build C_n^(k) from the n-1 frame.

    Each reduced path contributes q^dinv t^area times one monomial
    q^(i-1) t^(n'k - r_i) per sorted rank r_i below m'.
    """
    if n < 2:
        raise ValueError("catalan_step needs n >= 2")
    n_ = n - 1
    m_ = k * n_ + 1
    terms: dict[tuple[int, int], int] = {}
    for D in _fuss_paths(k, n_):
        d, a = dinv(D), area(D)
        for i, r in enumerate(rank_sequence(D), start=1):
            if r < m_:
                key = (d + i - 1, a + n_ * k - r)
                terms[key] = terms.get(key, 0) + 1
    return QTPolynomial(terms)
