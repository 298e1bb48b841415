"""
Presentations of countable linear orders.

A countable linear order is presented to a program as oracles over naturals:
an enumeration of its carrier, a decidable membership test and a decidable
strict comparison. Optional oracles find elements strictly between two
members or strictly above/below one member; they are what make cover
questions decidable on infinite orders.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from enum import Enum, auto
from itertools import count, islice
from functools import cmp_to_key
from typing import Callable, Iterator, Optional
import numpy as np
from orderspace.util import InputError, InvalidCertificateError, pair


class Comparison(Enum):
    """Result of a three-way comparison."""
    LT = auto()
    EQ = auto()
    GT = auto()

    def flip(self) -> Comparison:
        if self == Comparison.LT:
            return Comparison.GT
        elif self == Comparison.GT:
            return Comparison.LT
        return self


class ExtKind(Enum):
    NEG_INF = auto()
    POINT = auto()
    POS_INF = auto()

@dataclass(frozen=True)
class ExtPoint:
    """Carrier member or one of the two fresh symbols -inf, +inf."""
    kind: ExtKind
    value: Optional[int] = None

    @staticmethod
    def point(x: int) -> ExtPoint:
        return ExtPoint(ExtKind.POINT, x)

    @property
    def is_point(self) -> bool:
        return self.kind == ExtKind.POINT

    @property
    def code(self) -> int:
        """Natural code: -inf -> 0, +inf -> 1, point(x) -> x + 2."""
        if self.kind == ExtKind.NEG_INF:
            return 0
        elif self.kind == ExtKind.POS_INF:
            return 1
        return self.value + 2

    @staticmethod
    def from_code(c: int) -> ExtPoint:
        if c == 0:
            return NEG_INF
        elif c == 1:
            return POS_INF
        return ExtPoint.point(c - 2)

    def __repr__(self) -> str:
        if self.kind == ExtKind.NEG_INF:
            return "-inf"
        elif self.kind == ExtKind.POS_INF:
            return "+inf"
        return f"point({self.value})"

NEG_INF = ExtPoint(ExtKind.NEG_INF)
POS_INF = ExtPoint(ExtKind.POS_INF)


@dataclass(frozen=True)
class Interval:
    """Basic open set (lo, hi). hi <= lo is legal and denotes the empty set."""
    lo: ExtPoint
    hi: ExtPoint

    @staticmethod
    def of(lo, hi) -> Interval:
        """Build from ExtPoints or plain carrier members."""
        lo = lo if isinstance(lo, ExtPoint) else ExtPoint.point(lo)
        hi = hi if isinstance(hi, ExtPoint) else ExtPoint.point(hi)
        return Interval(lo, hi)

    @property
    def code(self) -> int:
        return pair(self.lo.code, self.hi.code)

    def __repr__(self) -> str:
        return f"({self.lo!r}, {self.hi!r})"

WHOLE = Interval(NEG_INF, POS_INF)


@dataclass(frozen=True)
class Cut:
    """Partition (A-, A+) of a carrier given by membership predicates.
    `upper` is normally the complement of `lower`; `check_cut` verifies it."""
    lower: Callable[[int], bool]
    upper: Callable[[int], bool]

    @staticmethod
    def from_lower(lower: Callable[[int], bool]) -> Cut:
        return Cut(lower=lower, upper=lambda x: not lower(x))

    @staticmethod
    def from_sets(lower, upper) -> Cut:
        lower = frozenset(lower)
        upper = frozenset(upper)
        return Cut(lower=lower.__contains__, upper=upper.__contains__)


@dataclass(frozen=True)
class GapCertificate:
    """Evidence that a cut is a gap: A- has no maximum and A+ no minimum."""
    cut: Cut
    no_max_witness: Callable[[int], int]
    no_min_witness: Callable[[int], int]

    def next_lower(self, a: int, ord: OrderPresentation) -> int:
        """Checked no_max_witness(a)."""
        b = self.no_max_witness(a)
        if not (ord.contains(b) and self.cut.lower(b) and ord.less(a, b)):
            raise InvalidCertificateError(f"no_max_witness({ord.label(a)}) = {b} is not a larger member of A-")
        return b

    def next_upper(self, b: int, ord: OrderPresentation) -> int:
        """Checked no_min_witness(b)."""
        a = self.no_min_witness(b)
        if not (ord.contains(a) and self.cut.upper(a) and ord.less(a, b)):
            raise InvalidCertificateError(f"no_min_witness({ord.label(b)}) = {a} is not a smaller member of A+")
        return a

    def verify(self, ord: OrderPresentation, sample: int) -> bool:
        """Check the witnesses on the first `sample` carrier members.
        Raises InvalidCertificateError on the first failure."""
        for x in ord.sample(sample):
            if self.cut.lower(x):
                self.next_lower(x, ord)
            else:
                self.next_upper(x, ord)
        return True


@dataclass(frozen=True)
class OrderPresentation:
    """Countable linear order presented by oracles over naturals.

    - enumerate: index -> carrier member, injective on range(size)
    - size: number of members, None when the carrier is infinite
    - contains / less: decidable membership and strict comparison
    - between(a, b): member strictly between, or None
    - above(a) / below(a): member strictly above/below, or None when a is
      the maximum/minimum
    """
    name: str
    enumerate: Callable[[int], int]
    contains: Callable[[int], bool]
    less: Callable[[int, int], bool]
    size: Optional[int] = None
    between: Optional[Callable[[int, int], Optional[int]]] = None
    above: Optional[Callable[[int], Optional[int]]] = None
    below: Optional[Callable[[int], Optional[int]]] = None
    gap_certificate: Optional[GapCertificate] = None
    labels: Optional[tuple[str, ...]] = None
    formatter: Optional[Callable[[int], str]] = None
    parser: Optional[Callable[[str], int]] = None

    def __repr__(self) -> str:
        return f"OrderPresentation({self.name})"

    def __str__(self) -> str:
        return self.__repr__()

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    @property
    def has_oracles(self) -> bool:
        return self.between is not None and self.above is not None and self.below is not None

    def carrier(self) -> Iterator[int]:
        """Iterate carrier members in enumeration order."""
        indices = range(self.size) if self.is_finite else count()
        for i in indices:
            yield self.enumerate(i)

    def sample(self, n: int) -> list[int]:
        """First n carrier members (fewer if the carrier is smaller)."""
        return list(islice(self.carrier(), n))

    def require(self, x: int):
        if not self.contains(x):
            raise InputError(f"{x} is not a member of {self.name}")

    def label(self, x: int) -> str:
        if self.formatter is not None:
            return self.formatter(x)
        if self.labels is not None and 0 <= x < len(self.labels):
            return self.labels[x]
        return str(x)

    def parse_label(self, token: str) -> int:
        """Map a text label back to its carrier member."""
        if self.parser is not None:
            x = self.parser(token)
            self.require(x)
            return x
        if self.labels is not None:
            try:
                return self.labels.index(token)
            except ValueError:
                raise InputError(f"Unknown label {token!r} in {self.name}")
        try:
            x = int(token)
        except ValueError:
            raise InputError(f"Label {token!r} is not a natural number")
        self.require(x)
        return x

    def format_point(self, p: ExtPoint) -> str:
        if p.is_point:
            return self.label(p.value)
        return repr(p)

    def parse_point(self, token: str) -> ExtPoint:
        if token == "-inf":
            return NEG_INF
        elif token in ("+inf", "inf"):
            return POS_INF
        return ExtPoint.point(self.parse_label(token))

    def format_interval(self, iv: Interval) -> str:
        return f"({self.format_point(iv.lo)}, {self.format_point(iv.hi)})"

    def sort(self, xs) -> list[int]:
        """Sort members by the presented order."""
        return sorted(xs, key=cmp_to_key(lambda a, b: -1 if self.less(a, b) else (1 if self.less(b, a) else 0)))


def ext_compare(p: ExtPoint, q: ExtPoint, ord: OrderPresentation) -> Comparison:
    """Total order on L + {-inf, +inf} extending ord.less."""
    for e in (p, q):
        if e.is_point:
            ord.require(e.value)
    if p.kind != ExtKind.POINT or q.kind != ExtKind.POINT:
        rank = { ExtKind.NEG_INF: 0, ExtKind.POINT: 1, ExtKind.POS_INF: 2 }
        rp, rq = rank[p.kind], rank[q.kind]
        if rp < rq:
            return Comparison.LT
        elif rp > rq:
            return Comparison.GT
        return Comparison.EQ
    if p.value == q.value:
        return Comparison.EQ
    return Comparison.LT if ord.less(p.value, q.value) else Comparison.GT

def ext_less(p: ExtPoint, q: ExtPoint, ord: OrderPresentation) -> bool:
    return ext_compare(p, q, ord) == Comparison.LT

def ext_max(p: ExtPoint, q: ExtPoint, ord: OrderPresentation) -> ExtPoint:
    return q if ext_less(p, q, ord) else p

def ext_min(p: ExtPoint, q: ExtPoint, ord: OrderPresentation) -> ExtPoint:
    return p if ext_less(p, q, ord) else q


def interval_contains(iv: Interval, x: int, ord: OrderPresentation) -> bool:
    """x in (lo, hi), i.e. lo < x < hi."""
    ord.require(x)
    p = ExtPoint.point(x)
    return ext_less(iv.lo, p, ord) and ext_less(p, iv.hi, ord)


def check_cut(cut: Cut, ord: OrderPresentation, sample_size: int) -> bool:
    """Check the partition and ordering invariants of a cut on the first
    `sample_size` carrier members."""
    members = ord.sample(sample_size)
    lower, upper = [], []
    for x in members:
        in_lower, in_upper = cut.lower(x), cut.upper(x)
        if in_lower == in_upper:
            logging.debug(f"[check_cut] {ord.label(x)} is in {'both sides' if in_lower else 'neither side'}")
            return False
        (lower if in_lower else upper).append(x)
    for a in lower:
        for b in upper:
            if not ord.less(a, b):
                logging.debug(f"[check_cut] {ord.label(a)} in A- does not precede {ord.label(b)} in A+")
                return False
    return True


def finite_cuts(ord: OrderPresentation) -> Iterator[tuple[frozenset, frozenset]]:
    """Yield every valid cut (A-, A+) of a finite order. All 2^n subsets are
    candidates; rows of a bit matrix pick out A-."""
    if not ord.is_finite:
        raise InputError(f"{ord.name} is not finite")
    members = np.array(ord.sample(ord.size), dtype=np.int64)
    n = len(members)
    bits = (np.arange(2**n, dtype=np.int64)[:, None] >> np.arange(n, dtype=np.int64)) & 1
    for row in bits.astype(bool):
        lower = frozenset(members[row].tolist())
        upper = frozenset(members[~row].tolist())
        if all(ord.less(a, b) for a in lower for b in upper):
            yield (lower, upper)

def boundary_of(lower: frozenset, upper: frozenset, ord: OrderPresentation) -> Optional[int]:
    """Greatest element of A- if any, else least element of A+ if any."""
    if lower:
        return ord.sort(lower)[-1]
    if upper:
        return ord.sort(upper)[0]
    return None

def is_complete_finite(ord: OrderPresentation) -> bool:
    """Brute-force completeness of a non-empty finite order: every cut must
    have a greatest lower or least upper element."""
    if not ord.is_finite:
        raise InputError(f"{ord.name} is not finite")
    if ord.size == 0:
        raise InputError("Spaces are non-empty: the empty order is not allowed")
    num_cuts = 0
    for lower, upper in finite_cuts(ord):
        num_cuts += 1
        if boundary_of(lower, upper, ord) is None:
            logging.info(f"[is_complete_finite] {ord.name}: cut without boundary")
            return False
    logging.debug(f"[is_complete_finite] {ord.name}: {num_cuts} cuts checked")
    return True


def finite_order(n: int, labels=None, name=None) -> OrderPresentation:
    """Finite order 0 < 1 < ... < n-1, optionally labelled."""
    if n < 0:
        raise InputError(f"Order size must be a natural: {n}")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise InputError(f"Expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InputError(f"Duplicate labels in {labels}")

    def enumerate_(i):
        return i

    def contains(x):
        return isinstance(x, int) and 0 <= x < n

    def less(a, b):
        return a < b

    def between(a, b):
        return a + 1 if a + 1 < b else None

    def above(a):
        return a + 1 if a + 1 < n else None

    def below(a):
        return a - 1 if a > 0 else None

    return OrderPresentation(
        name=name if name is not None else f"finite({n})",
        enumerate=enumerate_,
        contains=contains,
        less=less,
        size=n,
        between=between,
        above=above,
        below=below,
        labels=labels,
    )
