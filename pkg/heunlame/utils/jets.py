"""
Second-order jets: (f, f', f'') carried together through arithmetic.

Series, prefactors and elliptic arguments are all evaluated on jets so the
ODE residuals use exact derivatives rather than finite differences.
"""

import math
from typing import Callable, Union

Number = Union[int, float]


class Jet:
    """
    Value plus first and second derivative with respect to one variable.

    Args:
        value: f
        d1: f'
        d2: f''
    """

    __slots__ = ("value", "d1", "d2")

    def __init__(self, value: float, d1: float = 0.0, d2: float = 0.0):
        self.value = float(value)
        self.d1 = float(d1)
        self.d2 = float(d2)

    @classmethod
    def variable(cls, x: float) -> "Jet":
        return cls(x, 1.0, 0.0)

    @classmethod
    def constant(cls, c: float) -> "Jet":
        return cls(c, 0.0, 0.0)

    def __repr__(self) -> str:
        return f"Jet({self.value!r}, {self.d1!r}, {self.d2!r})"

    def __add__(self, other: Union["Jet", Number]) -> "Jet":
        if isinstance(other, Jet):
            return Jet(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)
        return Jet(self.value + other, self.d1, self.d2)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-self.value, -self.d1, -self.d2)

    def __sub__(self, other: Union["Jet", Number]) -> "Jet":
        return self + (-other)

    def __rsub__(self, other: Number) -> "Jet":
        return (-self) + other

    def __mul__(self, other: Union["Jet", Number]) -> "Jet":
        if isinstance(other, Jet):
            return Jet(
                self.value * other.value,
                self.d1 * other.value + self.value * other.d1,
                self.d2 * other.value + 2.0 * self.d1 * other.d1 + self.value * other.d2,
            )
        return Jet(self.value * other, self.d1 * other, self.d2 * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        return self.apply(1.0 / self.value, -1.0 / self.value**2, 2.0 / self.value**3)

    def __truediv__(self, other: Union["Jet", Number]) -> "Jet":
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.value / other, self.d1 / other, self.d2 / other)

    def __rtruediv__(self, other: Number) -> "Jet":
        return self.reciprocal() * other

    def apply(self, f0: float, f1: float, f2: float) -> "Jet":
        """Chain rule for g = f(self) given f, f', f'' at self.value."""
        return Jet(f0, f1 * self.d1, f2 * self.d1**2 + f1 * self.d2)

    def compose(self, fn: Callable[[float], "Jet"]) -> "Jet":
        """Compose with a function returning its own jet at a point (f, f', f'')."""
        inner = fn(self.value)
        return self.apply(inner.value, inner.d1, inner.d2)

    def __pow__(self, p: Number) -> "Jet":
        v = self.value
        if isinstance(p, int) or float(p).is_integer():
            p = int(p)
            if p == 0:
                return Jet.constant(1.0)
            if v == 0.0:
                if p < 0:
                    raise ZeroDivisionError(f"negative power {p} of a vanishing jet")
                f1 = float(p) if p == 1 else 0.0
                f2 = 2.0 if p == 2 else 0.0
                return self.apply(0.0, f1, f2)
            return self.apply(v**p, p * v ** (p - 1), p * (p - 1) * v ** (p - 2))
        if v < 0.0:
            raise ValueError(f"non-integer power {p} of negative jet value {v}")
        if v == 0.0:
            return self.apply(0.0, math.inf if p < 1 else (1.0 if p == 1 else 0.0), 0.0)
        return self.apply(v**p, p * v ** (p - 1), p * (p - 1) * v ** (p - 2))

    def abs(self) -> "Jet":
        return -self if self.value < 0 else self

    def signed_power(self, p: Number) -> "Jet":
        """|f|^p with the sign of f kept for odd integer p, |f|^p otherwise."""
        if float(p).is_integer():
            return self ** int(p)
        return self.abs() ** p


def lift(x: Union[Jet, Number]) -> Jet:
    return x if isinstance(x, Jet) else Jet.constant(x)
