"""Exact coefficient rings and the graded super-scalar ring R = Z[q,q^-1][t]/(t^2-1).

Coefficients are always exact: arbitrary-precision integers, Fractions, or
residues mod a prime.  Graded super-scalars are sparse maps
(degree m, parity eps) -> integer; pi^2 = 1.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class CoefficientRing:
    """One of Z, Q, or F_p with exact element arithmetic.

    Elements are plain ints (Z, F_p as residues in [0, p)) or Fractions (Q).
    """

    INT = "INT"
    RAT = "RAT"
    PRIME_FIELD = "PRIME_FIELD"

    def __init__(self, kind: str, p: int | None = None):
        if kind not in (self.INT, self.RAT, self.PRIME_FIELD):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == self.PRIME_FIELD:
            if p is None or not _is_prime(p):
                raise ValueError(f"PRIME_FIELD requires a prime, got {p!r}")
        elif p is not None:
            raise ValueError("p only makes sense for PRIME_FIELD")
        self.kind = kind
        self.p = p

    def __repr__(self) -> str:
        return f"F{self.p}" if self.kind == self.PRIME_FIELD else ("Z" if self.kind == self.INT else "Q")

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientRing) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    @property
    def is_field(self) -> bool:
        return self.kind != self.INT

    def of(self, n: int | Fraction):
        """Coerce an integer (or exact rational, for Q) into this ring."""
        if self.kind == self.INT:
            if isinstance(n, Fraction):
                if n.denominator != 1:
                    raise ValueError(f"{n} is not an integer")
                return n.numerator
            return int(n)
        if self.kind == self.RAT:
            return Fraction(n)
        if isinstance(n, Fraction):
            return (n.numerator * pow(n.denominator, self.p - 2, self.p)) % self.p
        return int(n) % self.p

    def zero(self):
        return self.of(0)

    def one(self):
        return self.of(1)

    def add(self, a, b):
        r = a + b
        return r % self.p if self.kind == self.PRIME_FIELD else r

    def sub(self, a, b):
        r = a - b
        return r % self.p if self.kind == self.PRIME_FIELD else r

    def neg(self, a):
        return (-a) % self.p if self.kind == self.PRIME_FIELD else -a

    def mul(self, a, b):
        r = a * b
        return r % self.p if self.kind == self.PRIME_FIELD else r

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero")
        if self.kind == self.INT:
            if a % b != 0:
                raise ValueError(f"{a} not divisible by {b} over Z")
            return a // b
        if self.kind == self.RAT:
            return Fraction(a) / b
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def inv(self, a):
        return self.div(self.one(), a)

    def is_zero(self, a) -> bool:
        return a == 0


ZZ = CoefficientRing(CoefficientRing.INT)
QQ = CoefficientRing(CoefficientRing.RAT)


def GF(p: int) -> CoefficientRing:
    return CoefficientRing(CoefficientRing.PRIME_FIELD, p)


class GradedSuperScalar:
    """Element of R = Z[q, q^-1][t]/(t^2 - 1), stored sparsely.

    Keys are (m, eps) with m the q-degree and eps in {0, 1} the pi-exponent;
    zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        d: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for (m, eps), c in items:
            if c:
                k = (int(m), int(eps) % 2)
                d[k] = d.get(k, 0) + int(c)
                if not d[k]:
                    del d[k]
        self.coeffs = d

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "GradedSuperScalar":
        return GradedSuperScalar()

    @staticmethod
    def one() -> "GradedSuperScalar":
        return GradedSuperScalar({(0, 0): 1})

    @staticmethod
    def term(c: int, m: int = 0, eps: int = 0) -> "GradedSuperScalar":
        return GradedSuperScalar({(m, eps % 2): c})

    @staticmethod
    def q_power(m: int) -> "GradedSuperScalar":
        return GradedSuperScalar.term(1, m, 0)

    # -- ring structure -----------------------------------------------
    def __add__(self, other: "GradedSuperScalar") -> "GradedSuperScalar":
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, 0) + c
            if not d[k]:
                del d[k]
        out = GradedSuperScalar.zero()
        out.coeffs = d
        return out

    def __neg__(self) -> "GradedSuperScalar":
        out = GradedSuperScalar.zero()
        out.coeffs = {k: -c for k, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "GradedSuperScalar") -> "GradedSuperScalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        d: dict[tuple[int, int], int] = {}
        for (m1, e1), c1 in self.coeffs.items():
            for (m2, e2), c2 in other.coeffs.items():
                k = (m1 + m2, (e1 + e2) % 2)
                d[k] = d.get(k, 0) + c1 * c2
        return GradedSuperScalar(d)

    __rmul__ = __mul__

    def scale(self, c: int) -> "GradedSuperScalar":
        return GradedSuperScalar({k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GradedSuperScalar.term(other)
        return isinstance(other, GradedSuperScalar) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- queries -------------------------------------------------------
    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coeffs.get((key[0], key[1] % 2), 0)

    def specialize(self, q0, sign: int = 1):
        """Evaluate q -> q0, pi -> sign (a ring homomorphism); q0 must be invertible."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        total = 0
        for (m, eps), c in self.coeffs.items():
            if m >= 0:
                qm = q0 ** m
            else:
                if q0 == 0:
                    raise ZeroDivisionError("q0 must be invertible for negative degrees")
                qm = Fraction(1, 1) / Fraction(q0) ** (-m)
            total += c * qm * (sign ** eps)
        if isinstance(total, Fraction) and total.denominator == 1:
            total = total.numerator
        return total

    # -- display / serialization --------------------------------------
    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (m, eps) in sorted(self.coeffs):
            c = self.coeffs[(m, eps)]
            mon = []
            if m:
                mon.append(f"q^{m}" if m != 1 else "q")
            if eps:
                mon.append("pi")
            if not mon or abs(c) != 1:
                mon.insert(0, str(abs(c)))
            term = "*".join(mon)
            parts.append(("-" if c < 0 else ("+" if parts else "")) + term)
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"q": m, "pi": eps, "c": str(self.coeffs[(m, eps)])}
                for (m, eps) in sorted(self.coeffs)
            ]
        }

    @staticmethod
    def from_json(obj: dict) -> "GradedSuperScalar":
        return GradedSuperScalar(
            {(int(t["q"]), int(t["pi"])): int(t["c"]) for t in obj["terms"]}
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)
