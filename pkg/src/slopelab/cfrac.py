"""Continued-fraction expansions of rationals, in two flavors.

The "positive" flavor is r = b0 + 1/(b1 + 1/(... + 1/bl)), produced by
truncation toward zero, so every partial quotient after b0 carries the
sign of the fractional part.  The "negative" flavor evaluates
r = b0 - 1/(b1 - 1/(...)).

Several consumers need the expansion of the tail to have even length
(an even number of entries after b0); ``even_length_cfe`` pads with a
final +/-1 when necessary.
"""
from __future__ import annotations

from fractions import Fraction


def positive_cfe(r) -> list[int]:
    """Partial quotients [b0, b1, ..., bl] with truncation toward zero.

    The final quotient has magnitude >= 2 except for integer input,
    which yields the single-entry expansion [r].
    """
    r = Fraction(r)
    b0 = int(r)  # truncates toward zero
    out = [b0]
    rem = r - b0
    while rem:
        x = 1 / rem
        b = int(x)
        out.append(b)
        rem = x - b
    return out


def even_length_cfe(r) -> list[int]:
    """Expansion [b0, a1, ..., al] with l even (for non-integer input).

    Rewrites a final quotient b as (b -/+ 1, +/-1) when the tail length
    is odd.  Integers come back as [n] unchanged.
    """
    cf = positive_cfe(r)
    if len(cf) % 2 == 1:  # tail length is even
        return cf
    if len(cf) == 1:
        return cf
    last = cf[-1]
    if last > 0:
        return cf[:-1] + [last - 1, 1]
    return cf[:-1] + [last + 1, -1]


def eval_cfe(entries, flavor: str = "positive") -> Fraction:
    """Evaluate a continued fraction.

    flavor "positive": b0 + 1/(b1 + 1/(...));
    flavor "negative": b0 - 1/(b1 - 1/(...)).
    """
    num, den = _continuants(entries, flavor)[-1]
    if den == 0:
        raise ZeroDivisionError(f"continued fraction {entries} diverges")
    return Fraction(num, den)


def partial_evaluations(entries, flavor: str = "negative") -> list[Fraction]:
    """Values of every prefix [b0..bk], shortest first."""
    out = []
    for num, den in _continuants(entries, flavor):
        if den == 0:
            raise ZeroDivisionError(f"prefix of {entries} diverges")
        out.append(Fraction(num, den))
    return out


def _continuants(entries, flavor):
    if not entries:
        raise ValueError("empty continued fraction")
    if flavor == "positive":
        sign = 1
    elif flavor == "negative":
        sign = -1
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    p_prev, q_prev = 1, 0
    p, q = entries[0], 1
    pairs = [(p, q)]
    for b in entries[1:]:
        p, p_prev = b * p + sign * p_prev, p
        q, q_prev = b * q + sign * q_prev, q
        pairs.append((p, q))
    return pairs


def bracket_sums(r) -> tuple[int, int, int]:
    """Tail sums of the even-length expansion of r.

    Returns (even_sum, odd_sum, total): writing the expansion as
    [r[0], r[1], ..., r[l]], even_sum adds the r[j] with j even and
    j >= 4, odd_sum those with j odd and j >= 3.  Expansions shorter
    than four entries give (0, 0, 0).
    """
    cf = even_length_cfe(r) if not isinstance(r, list) else list(r)
    even_sum = sum(cf[j] for j in range(4, len(cf), 2))
    odd_sum = sum(cf[j] for j in range(3, len(cf), 2))
    return even_sum, odd_sum, even_sum + odd_sum
