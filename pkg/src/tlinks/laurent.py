"""Exact integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping


class Laurent:
    """Immutable integer Laurent polynomial, stored sparsely as {exponent: coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + int(v)
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, v: int) -> Laurent:
        return cls({0: v})

    @classmethod
    def monomial(cls, e: int, v: int = 1) -> Laurent:
        return cls({e: v})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> Laurent:
        return cls((low + k, v) for k, v in enumerate(coeffs))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def span(self) -> int:
        return self.max_degree() - self.min_degree() if self._c else 0

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent.const(other)
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def _lift(self, other) -> Laurent:
        return other if isinstance(other, Laurent) else Laurent.const(other)

    def __add__(self, other) -> Laurent:
        other = self._lift(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return Laurent(c)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        return Laurent({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> Laurent:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Laurent:
        return self._lift(other) - self

    def __mul__(self, other) -> Laurent:
        other = self._lift(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return Laurent(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            m = -k
            return Laurent({-e * m: v ** m})
        out = Laurent.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> Laurent:
        """Multiply by t^k."""
        return Laurent({e + k: v for e, v in self._c.items()})

    def divmod_exact(self, other: Laurent) -> Laurent:
        """Exact quotient self / other; raises ArithmeticError if it does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Laurent()
        rem = dict(self._c)
        dlo, dhi = other.min_degree(), other.max_degree()
        lead = other._c[dhi]
        q: dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - dhi < min(rem) - dlo:
                raise ArithmeticError("inexact polynomial division")
            v = rem[hi]
            if v % lead:
                raise ArithmeticError("inexact polynomial division")
            k = v // lead
            e = hi - dhi
            q[e] = k
            for de, dv in other._c.items():
                x = rem.get(e + de, 0) - k * dv
                if x:
                    rem[e + de] = x
                else:
                    rem.pop(e + de, None)
        return Laurent(q)

    def __floordiv__(self, other) -> Laurent:
        return self.divmod_exact(self._lift(other))

    def evaluate(self, x):
        return sum(v * x ** e for e, v in self._c.items())

    def substitute_power(self, k: int) -> Laurent:
        """p(t) -> p(t^k)."""
        return Laurent({e * k: v for e, v in self._c.items()})

    def canonical(self) -> Laurent:
        """Normalize up to units +-t^k: lowest exponent 0, positive constant term."""
        if not self._c:
            return self
        lo = self.min_degree()
        sign = 1 if self._c[lo] > 0 else -1
        return Laurent({e - lo: sign * v for e, v in self._c.items()})

    def items(self):
        return sorted(self._c.items())

    def __repr__(self) -> str:
        return f"Laurent({dict(self.items())})"

    def to_str(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                body = str(abs(v))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if abs(v) == 1 else f"{abs(v)}*{mono}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_str


def parse_laurent(text: str, var: str = "t") -> Laurent:
    """Inverse of ``Laurent.to_str``."""
    text = text.strip()
    if text == "0":
        return Laurent()
    toks = text.replace("- ", "-").replace("+ ", "+").split()
    coeffs: dict[int, int] = {}
    for tok in toks:
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        if "*" in tok:
            num, mono = tok.split("*")
            v = int(num)
        elif tok.startswith(var):
            v, mono = 1, tok
        else:
            v, mono = int(tok), ""
        if not mono:
            e = 0
        elif mono == var:
            e = 1
        elif mono.startswith(var + "^"):
            e = int(mono[len(var) + 1:])
        else:
            raise ValueError(f"bad monomial {mono!r}")
        coeffs[e] = coeffs.get(e, 0) + sign * v
    return Laurent(coeffs)


def determinant(m: list[list[Laurent]]) -> Laurent:
    """Fraction-free (Bareiss) determinant over Z[t, t^-1]."""
    n = len(m)
    if n == 0:
        return Laurent.const(1)
    a = [row[:] for row in m]
    sign = 1
    prev = Laurent.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Laurent()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return a[n - 1][n - 1] * sign
