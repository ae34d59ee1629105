"""Integer Laurent polynomials in a single variable ``A``."""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple


class LaurentPolynomial:
    """Sparse integer Laurent polynomial; zero coefficients are never stored.

    >>> A = LaurentPolynomial.monomial(1)
    >>> str(-(A ** 3))
    '-A^3'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: Dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + int(v)
            if v:
                c[int(e)] = v
            else:
                c.pop(int(e), None)
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def terms(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def degree_span(self) -> Tuple[int, int]:
        return min(self._c), max(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return isinstance(other, LaurentPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return LaurentPolynomial(list(self._c.items()) + list(other._c.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: v * other for e, v in self._c.items()})
        out: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPolynomial({e * n: v ** (-n)})
        out = LaurentPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``A**k``."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def divexact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._c)
        lo_d, hi_d = other.degree_span()
        lead = other._c[hi_d]
        quot: Dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - hi_d < min(rem) - lo_d:
                break
            q, r = divmod(rem[hi], lead)
            if r:
                break
            e = hi - hi_d
            quot[e] = q
            for oe, ov in other._c.items():
                v = rem.get(e + oe, 0) - q * ov
                if v:
                    rem[e + oe] = v
                else:
                    rem.pop(e + oe, None)
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        return LaurentPolynomial(quot)

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Polynomial in ``A**k`` (e.g. k=-4 rewrites in terms of t = A^-4)."""
        return LaurentPolynomial({e * k: v for e, v in self._c.items()})

    def in_t(self) -> Dict[int, int] | None:
        """Coefficients in ``t = A**-4`` if every exponent is divisible by 4."""
        if any(e % 4 for e in self._c):
            return None
        return {-e // 4: v for e, v in self._c.items()}

    def __call__(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def to_json(self):
        return [[e, v] for e, v in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls((int(e), int(v)) for e, v in data)

    def __repr__(self):
        return f"LaurentPolynomial({dict(self.terms())})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mag = abs(v)
            body = "" if (mag == 1 and e != 0) else str(mag)
            if e == 1:
                mono = "A"
            elif e != 0:
                mono = f"A^{e}"
            else:
                mono = ""
            term = body + mono
            parts.append(("-" if v < 0 else "+") + term)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


A = LaurentPolynomial.monomial(1)
DELTA = LaurentPolynomial({2: -1, -2: -1})
