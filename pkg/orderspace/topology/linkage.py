"""
Linkages and the subcover/gap dichotomy.

A linkage is a finite chain of cover intervals (a_i, b_i) with

    a_{i+1} < b_i < b_{i+1}

for consecutive members. Its union is an interval. Starting from the
intervals that contain the minimum and following that chaining condition,
either some chain reaches the maximum (and is a finite subcover) or the
reachable region is the lower side of a cut. The first case is exact on
finite orders; on infinite ones the search is staged by a budget.
"""
from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Optional, Sequence
from orderspace.order import (
    Cut,
    GapCertificate,
    Interval,
    OrderPresentation,
    ext_less,
    interval_contains,
)
from orderspace.topology import CoverStream, OrderedSpace
from orderspace.util import (
    DEFAULT_BUDGET,
    DEFAULT_FALLBACK_SCAN,
    BudgetExhaustedError,
    InputError,
    seq_decode,
)


@dataclass(frozen=True)
class Linkage:
    """Chain of (cover index, interval) pairs."""
    intervals: tuple[tuple[int, Interval], ...]

    @staticmethod
    def from_cover(cover: CoverStream, indices: Sequence[int]) -> Linkage:
        return Linkage(tuple((m, cover[m]) for m in indices))

    def indices(self) -> list[int]:
        return [ m for m, _ in self.intervals ]


def links(first: Interval, second: Interval, ord: OrderPresentation) -> bool:
    """a_second < b_first < b_second."""
    return ext_less(second.lo, first.hi, ord) and ext_less(first.hi, second.hi, ord)

def is_linkage(chain, ord: OrderPresentation) -> bool:
    """Chaining condition on every consecutive pair of a chain of
    (index, Interval) pairs, or of a `Linkage`."""
    if isinstance(chain, Linkage):
        chain = chain.intervals
    chain = list(chain)
    return all(links(chain[i][1], chain[i + 1][1], ord) for i in range(len(chain) - 1))

def linkage_member(chain, x: int, ord: OrderPresentation) -> bool:
    """x is in some interval of the chain."""
    if isinstance(chain, Linkage):
        chain = chain.intervals
    return any(interval_contains(iv, x, ord) for _, iv in chain)


@dataclass(frozen=True)
class LinkageTreeParams:
    """Order with designated minimum and maximum, and a cover."""
    ord: OrderPresentation
    cover: CoverStream
    minimum: Optional[int] = 0
    maximum: Optional[int] = 1

    @staticmethod
    def for_order(ord: OrderPresentation, cover: CoverStream, budget: int = DEFAULT_BUDGET) -> LinkageTreeParams:
        """Locate minimum and maximum: by exhaustion on finite orders, else
        as the first of `budget` carrier members on which the below/above
        oracle answers none. Missing ones are left as None."""
        if ord.is_finite:
            members = ord.sort(ord.carrier())
            if not members:
                raise InputError(f"{ord.name} is empty")
            return LinkageTreeParams(ord, cover, members[0], members[-1])
        if ord.below is None or ord.above is None:
            raise InputError(f"{ord.name}: locating endpoints needs above/below oracles")
        sample = ord.sample(budget)
        minimum = next((x for x in sample if ord.below(x) is None), None)
        maximum = next((x for x in sample if ord.above(x) is None), None)
        if minimum is None or maximum is None:
            logging.info(f"[LinkageTreeParams] {ord.name}: min={minimum} max={maximum} within {budget} members")
        return LinkageTreeParams(ord, cover, minimum, maximum)

    def check_endpoints(self, sample: int) -> bool:
        """minimum precedes and maximum follows every sampled member."""
        for x in self.ord.sample(sample):
            if x != self.minimum and not self.ord.less(self.minimum, x):
                return False
            if x != self.maximum and not self.ord.less(x, self.maximum):
                return False
        return True


@dataclass
class Reachability:
    """Breadth-first closure of the cover from the intervals containing the
    minimum. `parent` maps each reached index to its predecessor."""
    scan: int
    reached: list[int] = field(default_factory=list)
    parent: dict[int, Optional[int]] = field(default_factory=dict)
    hit_maximum: Optional[int] = None

    def chain_to(self, m: int) -> list[int]:
        chain = []
        node = m
        while node is not None:
            chain.append(node)
            node = self.parent[node]
        return list(reversed(chain))


def reachability(params: LinkageTreeParams, scan: int) -> Reachability:
    """Search linkages over cover indices < scan, in stream order. Stops at
    the first interval that contains the maximum."""
    ord, cover = params.ord, params.cover
    result = Reachability(scan=scan)
    if params.minimum is None:
        return result
    available = cover.available(scan)
    intervals = [ cover[m] for m in range(available) ]

    queue = deque()
    for m, iv in enumerate(intervals):
        if interval_contains(iv, params.minimum, ord):
            result.parent[m] = None
            result.reached.append(m)
            queue.append(m)

    while queue:
        i = queue.popleft()
        if params.maximum is not None and interval_contains(intervals[i], params.maximum, ord):
            result.hit_maximum = i
            break
        for j in range(available):
            if j not in result.parent and links(intervals[i], intervals[j], ord):
                result.parent[j] = i
                result.reached.append(j)
                queue.append(j)

    logging.debug(f"[reachability] scan={scan} reached={result.reached} max_hit={result.hit_maximum}")
    return result


def linkage_reachable(params: LinkageTreeParams, n: int, scan: Optional[int] = None) -> frozenset[int]:
    """D: carrier members x < n joined to the minimum by a linkage of cover
    intervals with indices < scan (default n)."""
    scan = n if scan is None else scan
    ord = params.ord
    reach = reachability(params, scan)
    intervals = [ params.cover[m] for m in reach.reached ]
    return frozenset(
        x for x in range(n)
        if ord.contains(x) and any(interval_contains(iv, x, ord) for iv in intervals)
    )


def find_finite_subcover(os: OrderedSpace, cover: CoverStream, scan: int) -> Optional[list[int]]:
    """Indices of a linkage from the minimum to the maximum, among cover
    indices < scan. Such a linkage covers the whole order; when it does not
    exist no finite subcover of the scanned intervals does either."""
    if not os.ord.is_finite:
        raise InputError(f"{os.ord.name} is not finite")
    params = LinkageTreeParams.for_order(os.ord, cover)
    reach = reachability(params, scan)
    if reach.hit_maximum is None:
        return None
    return sorted(reach.chain_to(reach.hit_maximum))


def linkage_tree_member(params: LinkageTreeParams, sigma: Sequence[int]) -> bool:
    """Membership of a binary sequence in the linkage tree T: sigma looks like
    the characteristic function of a set that holds the minimum, misses the
    maximum, contains only carrier members, is downward closed, and is closed
    under linkages whose index sequences are coded below |sigma|."""
    ord, cover = params.ord, params.cover
    n = len(sigma)
    if any(v not in (0, 1) for v in sigma):
        return False
    if params.minimum is not None and params.minimum < n and sigma[params.minimum] != 1:
        return False
    if params.maximum is not None and params.maximum < n and sigma[params.maximum] != 0:
        return False

    members = []
    for x in range(n):
        if ord.contains(x):
            members.append(x)
        elif sigma[x] != 0:
            return False

    for x in members:
        for y in members:
            if sigma[y] == 1 and sigma[x] == 0 and ord.less(x, y):
                return False

    for code in range(n):
        indices = seq_decode(code)
        if not all(cover.has(m) for m in indices):
            continue
        chain = [ (m, cover[m]) for m in indices ]
        if not chain or not is_linkage(chain, ord):
            continue
        inside = [ x for x in members if linkage_member(chain, x, ord) ]
        if any(sigma[y] == 1 for y in inside) and any(sigma[x] == 0 for x in inside):
            return False
    return True


class Outcome(Enum):
    SUBCOVER = auto()
    STAGED_CUT = auto()


@dataclass
class DichotomyResult:
    """Either a finite subcover or a cut of the first `stage` naturals."""
    outcome: Outcome
    stage: int
    scan: int
    subcover: Optional[list[int]] = None
    lower: tuple[int, ...] = ()
    upper: tuple[int, ...] = ()
    cut: Optional[Cut] = None
    certificate: Optional[GapCertificate] = None
    reason: str = ""

    @property
    def is_subcover(self) -> bool:
        return self.outcome == Outcome.SUBCOVER


def certificate_from_cover(params: LinkageTreeParams, cut: Cut, scan_limit: int = DEFAULT_FALLBACK_SCAN) -> GapCertificate:
    """Witnesses that a linkage-closed cut is a gap: for l in A- the right
    endpoint of the first cover interval holding l is a larger member of A-,
    and for l in A+ the left endpoint is a smaller member of A+."""
    ord, cover = params.ord, params.cover

    def first_holding(l: int) -> Interval:
        for m in range(cover.available(scan_limit)):
            if interval_contains(cover[m], l, ord):
                return cover[m]
        raise BudgetExhaustedError(f"No cover interval holds {ord.label(l)} below index {scan_limit}")

    def no_max_witness(l: int) -> int:
        hi = first_holding(l).hi
        if not hi.is_point:
            raise InputError(f"{ord.label(l)} lies in a tail reaching +inf")
        return hi.value

    def no_min_witness(l: int) -> int:
        lo = first_holding(l).lo
        if not lo.is_point:
            raise InputError(f"{ord.label(l)} lies in a tail reaching -inf")
        return lo.value

    return GapCertificate(cut=cut, no_max_witness=no_max_witness, no_min_witness=no_min_witness)


def _scan_to_cover(params: LinkageTreeParams, members: list[int], budget: int, scan_limit: int) -> int:
    """Least scan >= budget under which every member is in a scanned interval."""
    ord, cover = params.ord, params.cover
    pending = set(members)
    scan = 0
    while pending and cover.has(scan) and scan < scan_limit:
        iv = cover[scan]
        pending = { x for x in pending if not interval_contains(iv, x, ord) }
        scan += 1
    if pending:
        labels = " ".join(ord.label(x) for x in sorted(pending))
        logging.warning(f"[gap_finder] members not covered within scan {scan}: {labels}")
    return max(scan, budget) if cover.length is None else min(max(scan, budget), cover.length)


def gap_finder(params: LinkageTreeParams, cover: Optional[CoverStream] = None, budget: int = DEFAULT_BUDGET, scan_limit: int = DEFAULT_FALLBACK_SCAN) -> DichotomyResult:
    """Staged dichotomy: a finite subcover, or a cut of the naturals < budget
    whose lower side is everything linked to the minimum."""
    if cover is not None and cover is not params.cover:
        params = LinkageTreeParams(params.ord, cover, params.minimum, params.maximum)
    ord = params.ord
    members = [ x for x in range(budget) if ord.contains(x) ]

    if params.minimum is None:
        logging.info(f"[gap_finder] {ord.name} has no minimum within budget {budget}")
        return DichotomyResult(
            outcome=Outcome.STAGED_CUT, stage=budget, scan=0,
            lower=(), upper=tuple(ord.sort(members)),
            cut=Cut.from_lower(lambda x: False), reason="no minimum",
        )
    if params.maximum is None:
        logging.info(f"[gap_finder] {ord.name} has no maximum within budget {budget}")
        return DichotomyResult(
            outcome=Outcome.STAGED_CUT, stage=budget, scan=0,
            lower=tuple(ord.sort(members)), upper=(),
            cut=Cut.from_lower(lambda x: True), reason="no maximum",
        )

    scan = _scan_to_cover(params, members, budget, scan_limit)
    reach = reachability(params, scan)
    if reach.hit_maximum is not None:
        chain = sorted(reach.chain_to(reach.hit_maximum))
        logging.info(f"[gap_finder] subcover {chain} at scan {scan}")
        return DichotomyResult(outcome=Outcome.SUBCOVER, stage=budget, scan=scan, subcover=chain)

    region = [ params.cover[m] for m in reach.reached ]

    def in_lower(x: int) -> bool:
        return any(interval_contains(iv, x, ord) for iv in region)

    cut = Cut.from_lower(in_lower)
    lower = tuple(ord.sort(x for x in members if in_lower(x)))
    upper = tuple(ord.sort(x for x in members if not in_lower(x)))
    logging.info(f"[gap_finder] staged cut at budget {budget}, scan {scan}: {len(lower)} lower, {len(upper)} upper")
    return DichotomyResult(
        outcome=Outcome.STAGED_CUT, stage=budget, scan=scan,
        lower=lower, upper=upper, cut=cut,
        certificate=certificate_from_cover(params, cut, scan_limit),
        reason="no linkage reaches the maximum",
    )
