"""Tiny polynomial expression parser for the CLI.

Grammar: terms joined by + and -; a term is an optional rational
coefficient (integer, p/q, or finite decimal) followed by optional
variable powers, with '*' between factors optional. Variables are
case-insensitive; 't' and 'x' both name the univariate variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polyarith import Poly


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


_TOKEN = re.compile(r"""
      (?P<number>\d+(?:\.\d+)?(?:\s*/\s*\d+)?)
    | (?P<var>[a-zA-Z])(?:\s*\^\s*(?P<exp>[+-]?\d+))?
    | (?P<star>\*)
    | (?P<sign>[+-])
    """, re.VERBOSE)


@dataclass(frozen=True)
class PolynomialExpr:
    """Parsed polynomial: source plus (coefficient, x-exp, y-exp) terms."""

    source: str
    terms: tuple[tuple[Fraction, int, int], ...]
    nvars: int

    def to_poly(self) -> Poly:
        """Univariate terms as a RationalPoly (y exponents must be 0)."""
        if self.nvars != 1:
            raise ParseError("expected a univariate polynomial")
        degree = max((i for _, i, _ in self.terms), default=0)
        coeffs = [Fraction(0)] * (degree + 1)
        for c, i, _ in self.terms:
            coeffs[i] += c
        return Poly(coeffs)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, i, j in sorted(self.terms, key=lambda t: (t[1], t[2])):
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append(("t" if self.nvars == 1 else "X")
                               + (f"^{i}" if i > 1 else ""))
            if j:
                factors.append("Y" + (f"^{j}" if j > 1 else ""))
            parts.append(("- " if c < 0 else "+ ") + "*".join(factors))
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _parse_number(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        return Fraction(num.strip()) / Fraction(den.strip())
    return Fraction(text)  # exact for finite decimals


def parse_polynomial(text: str, nvars: int = 1) -> PolynomialExpr:
    """Parse with nvars = 1 (variable t or x) or 2 (variables X and Y)."""
    if nvars not in (1, 2):
        raise ParseError(f"nvars must be 1 or 2, got {nvars}")
    pos = 0
    n = len(text)
    raw_terms: list[tuple[Fraction, int, int]] = []
    sign = 1
    coeff: Fraction | None = None
    xexp = 0
    yexp = 0
    in_term = False

    def flush():
        nonlocal sign, coeff, xexp, yexp, in_term
        if in_term:
            raw_terms.append((sign * (coeff if coeff is not None else
                                      Fraction(1)), xexp, yexp))
        sign, coeff, xexp, yexp, in_term = 1, None, 0, 0, False

    saw_sign = False
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot parse {text[pos:pos + 10]!r}", pos)
        if m.group("number") is not None:
            if coeff is not None or xexp or yexp:
                raise ParseError("unexpected number", m.start())
            coeff = _parse_number(m.group("number"))
            in_term = True
        elif m.group("var") is not None:
            name = m.group("var").lower()
            e = int(m.group("exp")) if m.group("exp") else 1
            if e < 0:
                raise ParseError("negative exponent", m.start())
            if nvars == 1:
                if name not in ("t", "x"):
                    raise ParseError(f"unknown variable {name!r}", m.start())
                xexp += e
            else:
                if name == "x":
                    xexp += e
                elif name == "y":
                    yexp += e
                else:
                    raise ParseError(f"unknown variable {name!r}", m.start())
            in_term = True
        elif m.group("star") is not None:
            if not in_term:
                raise ParseError("misplaced '*'", m.start())
        else:  # sign
            if in_term:
                flush()
            saw_sign = True
            if m.group("sign") == "-":
                sign = -sign
        pos = m.end()
    if not in_term and saw_sign:
        raise ParseError("dangling sign", pos)
    flush()
    if not raw_terms:
        raise ParseError("empty polynomial")
    agg: dict[tuple[int, int], Fraction] = {}
    for c, i, j in raw_terms:
        agg[(i, j)] = agg.get((i, j), Fraction(0)) + c
    terms = tuple((c, i, j) for (i, j), c in sorted(agg.items()) if c != 0)
    return PolynomialExpr(text, terms, nvars)
