"""
Order topologies as countable second-countable spaces.

The ordered space of (L, <) has index set (L + {-inf, +inf})^2, basic opens
U_<a,b> = (a, b) and refinement

    k(x, <a0, b0>, <a1, b1>) = <max(a0, a1), min(b0, b1)>

which never looks at x. Covers of an ordered space by basic opens are
`CoverStream`s: finite lists or infinite functions m -> Interval.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional
from orderspace.order import (
    NEG_INF,
    POS_INF,
    ExtPoint,
    GapCertificate,
    Interval,
    OrderPresentation,
    ext_max,
    ext_min,
    interval_contains,
)
from orderspace.space import CSCSpace, FiniteCoverRelation, StrongBase
from orderspace.util import InputError, UndecidableError, unpair


class OrderBase(StrongBase):
    """Open intervals of an order with the max/min refinement."""

    def __init__(self, ord: OrderPresentation):
        self.ord = ord
        self.name = f"intervals({ord.name})"

    def _ext(self, k: int) -> Optional[ExtPoint]:
        """k-th extended point: -inf, +inf, then the carrier in enumeration order."""
        if k == 0:
            return NEG_INF
        elif k == 1:
            return POS_INF
        if self.ord.is_finite and k - 2 >= self.ord.size:
            return None
        return ExtPoint.point(self.ord.enumerate(k - 2))

    def index_domain(self, i) -> bool:
        if not isinstance(i, Interval):
            return False
        return all(not p.is_point or self.ord.contains(p.value) for p in (i.lo, i.hi))

    def basic_member(self, i, x: int) -> bool:
        return interval_contains(i, x, self.ord)

    def refine(self, x: int, i, j):
        return Interval(ext_max(i.lo, j.lo, self.ord), ext_min(i.hi, j.hi, self.ord))

    def point_cover(self, x: int):
        return Interval(NEG_INF, POS_INF)

    def indices(self) -> Iterator:
        """All intervals, by Cantor pairing of extended-point positions."""
        total = None if not self.ord.is_finite else (self.ord.size + 2) ** 2
        emitted = 0
        z = 0
        while total is None or emitted < total:
            a, b = unpair(z)
            z += 1
            lo, hi = self._ext(a), self._ext(b)
            if lo is None or hi is None:
                continue
            emitted += 1
            yield Interval(lo, hi)


@dataclass(frozen=True)
class OrderedSpace:
    """Order together with its order topology."""
    ord: OrderPresentation
    space: CSCSpace

    def __repr__(self) -> str:
        return f"OrderedSpace({self.ord.name})"

    def k(self, x: int, i: Interval, j: Interval) -> Interval:
        return self.space.base.refine(x, i, j)

    def members(self, iv: Interval, sample: int) -> list[int]:
        """Points of U_iv among the first `sample` carrier members."""
        return [ x for x in self.ord.sample(sample) if interval_contains(iv, x, self.ord) ]


def ordered_space(ord: OrderPresentation) -> OrderedSpace:
    """Ordered space of a non-empty order."""
    if len(ord.sample(1)) == 0:
        raise InputError(f"{ord.name} is empty: spaces are non-empty")
    space = CSCSpace(
        name=f"ordered({ord.name})",
        enumerate=ord.enumerate,
        contains=ord.contains,
        base=OrderBase(ord),
        size=ord.size,
    )
    return OrderedSpace(ord=ord, space=space)


@dataclass(frozen=True)
class CoverStream:
    """Indexed stream of intervals. `length` is None for infinite streams."""
    name: str
    at: Callable[[int], Interval]
    length: Optional[int] = None

    def __repr__(self) -> str:
        return f"CoverStream({self.name})"

    def __getitem__(self, m: int) -> Interval:
        if not self.has(m):
            raise IndexError(f"{self.name} has no interval {m}")
        return self.at(m)

    def has(self, m: int) -> bool:
        return m >= 0 and (self.length is None or m < self.length)

    def available(self, scan: int) -> int:
        """Number of indices below `scan` the stream actually has."""
        return scan if self.length is None else min(scan, self.length)

    def prefix(self, k: int) -> list[Interval]:
        return [ self.at(m) for m in range(self.available(k)) ]

    @staticmethod
    def from_intervals(intervals: Iterable[Interval], name: str = "cover") -> CoverStream:
        intervals = tuple(intervals)
        return CoverStream(name=name, at=intervals.__getitem__, length=len(intervals))


def uncovered_witness(os: OrderedSpace, F: Iterable[Interval]) -> Optional[int]:
    """A carrier member outside every interval of F, or None if F covers.

    Finite orders are checked by exhaustion. Infinite orders need the
    between/above/below oracles: between consecutive point endpoints of F
    no interval starts or stops, so one member per region decides it."""
    ord = os.ord
    F = list(F)
    for iv in F:
        if not os.space.base.index_domain(iv):
            raise InputError(f"{iv!r} has an endpoint outside {ord.name}")

    def covered(x):
        return any(interval_contains(iv, x, ord) for iv in F)

    if ord.is_finite:
        for x in ord.carrier():
            if not covered(x):
                return x
        return None

    if not ord.has_oracles:
        raise UndecidableError(f"Finite cover check on {ord.name} is undecidable without between/above/below oracles")

    endpoints = ord.sort({ p.value for iv in F for p in (iv.lo, iv.hi) if p.is_point })
    if not endpoints:
        candidates = [ ord.enumerate(0) ]
    else:
        candidates = [ ord.below(endpoints[0]) ]
        for e, e_next in zip(endpoints, endpoints[1:]):
            candidates.append(e)
            candidates.append(ord.between(e, e_next))
        candidates.append(endpoints[-1])
        candidates.append(ord.above(endpoints[-1]))

    for x in candidates:
        if x is not None and not covered(x):
            logging.debug(f"[uncovered_witness] {ord.label(x)} is not covered")
            return x
    return None

def finite_cover_check(os: OrderedSpace, F: Iterable[Interval]) -> bool:
    """True iff every carrier member lies in some interval of F."""
    return uncovered_witness(os, F) is None

def finite_cover_relation(os: OrderedSpace) -> FiniteCoverRelation:
    """The finite cover relation of an ordered space."""
    return FiniteCoverRelation(covers=lambda F: finite_cover_check(os, F))


def cover_from_gap(ord: OrderPresentation, cert: GapCertificate) -> CoverStream:
    """Cover with no finite subcover built from a gap: the m-th interval is
    (-inf, c) when the m-th carrier member c is in A-, and (c, +inf) when it
    is in A+. Every x in A- sits below its no_max witness, which appears
    later in the stream, and symmetrically for A+. Witnesses are checked as
    the stream is read."""
    def at(m: int) -> Interval:
        c = ord.enumerate(m)
        if cert.cut.lower(c):
            cert.next_lower(c, ord)
            return Interval(NEG_INF, ExtPoint.point(c))
        cert.next_upper(c, ord)
        return Interval(ExtPoint.point(c), POS_INF)

    return CoverStream(name=f"gap({ord.name})", at=at, length=ord.size)
