"""Sparse Laurent polynomials in one variable v with integer coefficients.

The degree of the zero polynomial is the sentinel ``NEG_INF``, which
compares below every integer so that ``max(deg(p), deg(q))`` works
without special-casing.
"""
from __future__ import annotations

import re


class _NegInf:
    """Sentinel that is smaller than every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __neg__(self):
        raise ArithmeticError("cannot negate NEG_INF")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "NEG_INF"


NEG_INF = _NegInf()

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coeff>\d+)\s*\*?\s*)?
        (?:(?P<var>v)(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


class LaurentPoly:
    """Integer Laurent polynomial, stored as {exponent: nonzero coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    data[int(e)] = int(c)
        self.coeffs = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, exp=0):
        """The monomial coeff * v^exp."""
        return cls({exp: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return res
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by v^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else NEG_INF

    def leading_coeff(self):
        if not self.coeffs:
            return 0
        return self.coeffs[max(self.coeffs)]

    def mirror(self):
        """Substitute v -> v^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def exact_div(self, other):
        """Divide by ``other``, raising ArithmeticError unless exact."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly({})
        rem = LaurentPoly(dict(self.coeffs))
        quot = {}
        dtop = other.degree()
        dlead = other.coeffs[dtop]
        floor = self.min_degree() - other.min_degree()
        while rem:
            rtop = rem.degree()
            c, r = divmod(rem.coeffs[rtop], dlead)
            e = rtop - dtop
            if r or e < floor:
                raise ArithmeticError("division is not exact")
            quot[e] = c
            rem = rem - other.shift(e) * c
        return LaurentPoly(quot)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"

    def to_json(self):
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): c for e, c in data.items()})


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_degree(p: LaurentPoly):
    """Top exponent of p, or NEG_INF for the zero polynomial."""
    return p.degree()


def format_poly(p: LaurentPoly) -> str:
    """Render like "v^18 - v^10 - v^6 - v^2", highest exponent first."""
    if not p:
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "v" if e == 1 else f"v^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of format_poly; also accepts things like "3v^-2 + 1"."""
    out = {}
    pos = 0
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        elif m.group("coeff"):
            exp = 0
        else:
            raise ValueError(f"empty term near {text[pos:]!r}")
        out[exp] = out.get(exp, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(out)
