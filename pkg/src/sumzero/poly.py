"""Dense univariate polynomials with exact integer coefficients.

Coefficients are plain Python ``int`` (arbitrary precision), stored lowest
degree first with trailing zeros trimmed, so the zero polynomial has an empty
coefficient tuple.  Each polynomial carries a variable tag: ``"X"`` and ``"E"``
for classes in the Grothendieck ring, ``"x"`` for virtual Poincaré polynomials.
"""

import json
import operator
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import VariableMismatchError

VARIABLES = ("X", "E", "x")

_TERM = re.compile(r"([+-]?)(\d*)(?:([A-Za-z])(?:\^\{?(\d+)\}?)?)?")


def _trim(coeffs: Sequence[int]) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple = ()
    var: str = "x"

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise ValueError(f"unknown variable tag {self.var!r}; expected one of {VARIABLES}")
        try:
            # operator.index rejects floats, Fractions and other non-integers
            coeffs = [operator.index(c) for c in self.coeffs]
        except TypeError:
            raise TypeError(f"coefficients must be integers, got {self.coeffs!r}") from None
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int, var: str = "x") -> "IntPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, var: str = "x", coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("negative exponents are not supported")
        return cls((0,) * degree + (coeff,), var)

    @classmethod
    def gen(cls, var: str = "x") -> "IntPoly":
        """The polynomial consisting of the bare variable."""
        return cls.monomial(1, var)

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative degree")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def with_var(self, var: str) -> "IntPoly":
        """Same coefficients under another variable tag."""
        return IntPoly(self.coeffs, var)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            if other.var != self.var:
                raise VariableMismatchError(
                    f"cannot combine polynomials in {self.var!r} and {other.var!r}"
                )
            return other
        try:
            return IntPoly.constant(operator.index(other), self.var)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        k = operator.index(k)
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = IntPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- evaluation and substitution --------------------------------------

    def __call__(self, t):
        if isinstance(t, IntPoly):
            return self.compose(t)
        return self.eval(t)

    def eval(self, t: int) -> int:
        t = operator.index(t)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose(self, q: "IntPoly") -> "IntPoly":
        """Substitute ``q`` for the variable; the result is tagged with ``q.var``."""
        acc = IntPoly((), q.var)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    # -- rendering --------------------------------------------------------

    def to_plain(self) -> str:
        """Descending powers, e.g. ``E^3 - 6E^2 + 20E - 96``."""
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = self.var if d == 1 else f"{self.var}^{d}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_latex(self) -> str:
        return f"${self.to_plain()}$"

    def to_json(self) -> str:
        """Coefficient array, lowest degree first."""
        return json.dumps(list(self.coeffs))

    def __str__(self):
        return self.to_plain()

    # -- parsing ----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, var: str = "x") -> "IntPoly":
        """Build from integers or decimal strings (the CLI's JSON form)."""
        out = []
        for c in coeffs:
            if isinstance(c, str):
                if not re.fullmatch(r"[+-]?\d+", c.strip()):
                    raise ValueError(f"not an integer coefficient: {c!r}")
                c = int(c)
            elif isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"not an integer coefficient: {c!r}")
            out.append(c)
        return cls(out, var)

    @classmethod
    def from_json(cls, text: str, var: str = "x") -> "IntPoly":
        """Parse a coefficient array, or an object with a ``coeffs`` array."""
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("coeffs")
        if not isinstance(data, list):
            raise ValueError("expected a JSON array of coefficients")
        return cls.from_coeffs(data, var)

    @classmethod
    def parse(cls, text: str, var: str = None) -> "IntPoly":
        """Parse plain or LaTeX text such as ``$E^8- 28E^7 + 5040E$``.

        The variable tag is inferred from the text when ``var`` is omitted;
        constant expressions then default to ``"x"``.
        """
        s = re.sub(r"\s+", "", text).strip("$")
        if not s:
            raise ValueError("empty polynomial")
        terms = re.split(r"(?=[+-])", s)
        if terms and terms[0] == "":
            terms = terms[1:]
        coeffs = {}
        seen_var = var
        for term in terms:
            m = _TERM.fullmatch(term)
            if m is None or term in ("+", "-"):
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            sign, digits, name, power = m.groups()
            if not digits and not name:
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            if name is None and power is not None:
                raise ValueError(f"exponent without variable in {term!r}")
            if name is not None:
                if seen_var is None:
                    seen_var = name
                elif name != seen_var:
                    raise VariableMismatchError(f"mixed variables in {text!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            d = 0 if name is None else (int(power) if power is not None else 1)
            coeffs[d] = coeffs.get(d, 0) + c
        dense = [0] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            dense[d] = c
        return cls(dense, seen_var or "x")


def poly_eval(p: IntPoly, t: int) -> int:
    return p.eval(t)


def poly_compose(p: IntPoly, q: IntPoly) -> IntPoly:
    return p.compose(q)
