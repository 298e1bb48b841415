"""
Gallery of canonical test orders.

    finite(n)              0 < 1 < ... < n-1
    omega_plus_one         w + 1, coded 0 -> least, 1 -> w, m >= 2 -> m - 1
    omega_plus_omega_star  evens ascending then odds descending:
                           0 < 2 < 4 < ... < 5 < 3 < 1
    dense_unbounded        the rationals, coded 0 -> 0, 2k+1 -> +q_k,
                           2k+2 -> -q_k with q_k the k-th Calkin-Wilf rational

The two incomplete orders carry gap certificates: the parity cut of
w + w*, and the cut at sqrt(2) of the rationals.
"""
from __future__ import annotations
import logging
import re
from fractions import Fraction
from orderspace.order import Cut, GapCertificate, OrderPresentation, finite_order
from orderspace.util import InputError


# list of available gallery orders (finite takes a size argument)
GALLERY_ORDERS = [
    "finite(n)",
    "omega_plus_one",
    "omega_plus_omega_star",
    "dense_unbounded",
]

_FINITE_NAME = re.compile(r"^finite[_(]?(\d+)\)?$")


def gallery(name: str) -> OrderPresentation:
    """Return gallery order by name."""
    s = name.strip().lower()
    match = _FINITE_NAME.match(s)
    if match is not None:
        return finite_order(int(match.group(1)))
    elif s == "omega_plus_one":
        return omega_plus_one()
    elif s == "omega_plus_omega_star":
        return omega_plus_omega_star()
    elif s == "dense_unbounded":
        return dense_unbounded()
    else:
        logging.error(f"Unknown gallery order: {name}")
        raise InputError(f"Unknown gallery order {name!r}, expected one of {GALLERY_ORDERS}")


def _is_natural(x) -> bool:
    return isinstance(x, int) and x >= 0


def omega_plus_one() -> OrderPresentation:
    """w + 1. Complete, so no gap certificate."""
    def rank(x):
        # None stands for w
        if x == 0:
            return 0
        elif x == 1:
            return None
        return x - 1

    def member_of_rank(r):
        return 0 if r == 0 else r + 1

    def less(a, b):
        ra, rb = rank(a), rank(b)
        if rb is None:
            return ra is not None
        if ra is None:
            return False
        return ra < rb

    def between(a, b):
        if not less(a, b):
            return None
        ra, rb = rank(a), rank(b)
        if rb is None or rb - ra >= 2:
            return member_of_rank(ra + 1)
        return None

    def above(a):
        ra = rank(a)
        return None if ra is None else member_of_rank(ra + 1)

    def below(a):
        ra = rank(a)
        if ra is None:
            return 0
        return None if ra == 0 else member_of_rank(ra - 1)

    return OrderPresentation(
        name="omega_plus_one",
        enumerate=lambda i: i,
        contains=_is_natural,
        less=less,
        between=between,
        above=above,
        below=below,
    )


def omega_plus_omega_star() -> OrderPresentation:
    """w + w*: evens ascending, then odds descending. Minimum 0, maximum 1,
    and a gap between the evens and the odds."""
    def less(a, b):
        ea, eb = a % 2 == 0, b % 2 == 0
        if ea and eb:
            return a < b
        elif not ea and not eb:
            return a > b
        return ea

    def between(a, b):
        if not less(a, b):
            return None
        if a % 2 == 0:
            # any even above a is below an odd b
            if b % 2 == 1 or b - a >= 4:
                return a + 2
            return None
        # both odd, a numerically larger
        return a - 2 if a - b >= 4 else None

    def above(a):
        if a % 2 == 0:
            return a + 2
        return a - 2 if a >= 3 else None

    def below(a):
        if a % 2 == 1:
            return a + 2
        return a - 2 if a >= 2 else None

    gap = GapCertificate(
        cut=Cut.from_lower(lambda x: x % 2 == 0),
        no_max_witness=lambda a: a + 2,
        no_min_witness=lambda b: b + 2,
    )

    return OrderPresentation(
        name="omega_plus_omega_star",
        enumerate=lambda i: i,
        contains=_is_natural,
        less=less,
        between=between,
        above=above,
        below=below,
        gap_certificate=gap,
    )


def fusc(n: int) -> int:
    """Stern's diatomic sequence: fusc(1)=1, fusc(2n)=fusc(n),
    fusc(2n+1)=fusc(n)+fusc(n+1)."""
    a, b = 1, 0
    while n:
        if n & 1:
            b += a
        else:
            a += b
        n >>= 1
    return b

def _calkin_wilf_index(q: Fraction) -> int:
    """1-based position n of positive q in the Calkin-Wilf sequence,
    where q = fusc(n)/fusc(n+1). Walks up the tree in runs."""
    p, r = q.numerator, q.denominator
    bits = []
    while not (p == 1 and r == 1):
        if p < r:
            k = (r - 1) // p
            bits.extend([0] * k)
            r -= k * p
        else:
            k = (p - 1) // r
            bits.extend([1] * k)
            p -= k * r
    n = 1
    for bit in reversed(bits):
        n = 2 * n + bit
    return n

def rational_of(code: int) -> Fraction:
    """Value coded by a member of dense_unbounded."""
    if code == 0:
        return Fraction(0)
    k = (code - 1) // 2
    q = Fraction(fusc(k + 1), fusc(k + 2))
    return q if code % 2 == 1 else -q

def code_of(q: Fraction) -> int:
    """Member of dense_unbounded coding q."""
    q = Fraction(q)
    if q == 0:
        return 0
    k = _calkin_wilf_index(abs(q)) - 1
    return 2 * k + 1 if q > 0 else 2 * k + 2


def _sqrt2_step(q: Fraction) -> Fraction:
    """q -> (2q + 2)/(q + 2). For q > 0 this moves strictly towards sqrt(2)
    without crossing it."""
    return (2 * q + 2) / (q + 2)


def dense_unbounded() -> OrderPresentation:
    """Countable dense order without endpoints (the rationals)."""
    def less(a, b):
        return rational_of(a) < rational_of(b)

    def between(a, b):
        qa, qb = rational_of(a), rational_of(b)
        if not qa < qb:
            return None
        return code_of((qa + qb) / 2)

    def in_lower(x):
        q = rational_of(x)
        return q < 0 or q * q < 2

    def no_max_witness(a):
        q = rational_of(a)
        return code_of(Fraction(1) if q < 1 else _sqrt2_step(q))

    def no_min_witness(b):
        return code_of(_sqrt2_step(rational_of(b)))

    return OrderPresentation(
        name="dense_unbounded",
        enumerate=lambda i: i,
        contains=_is_natural,
        less=less,
        between=between,
        above=lambda a: code_of(rational_of(a) + 1),
        below=lambda a: code_of(rational_of(a) - 1),
        gap_certificate=GapCertificate(
            cut=Cut.from_lower(in_lower),
            no_max_witness=no_max_witness,
            no_min_witness=no_min_witness,
        ),
    )
