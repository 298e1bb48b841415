"""
Strong countable second-countable spaces.

A space is a set of naturals X together with a strong base: an indexed family
of basic opens U_i (i in I) with decidable membership and a refinement
function k such that x in U_i and x in U_j implies

    x in U_{k(x,i,j)} and U_{k(x,i,j)} is a subset of U_i and U_j.

Open sets are coded by functions h: n -> finite set of indices, meaning the
union of every U_i with i in some h(n). Membership in such a union is only
semi-decidable, so every search here takes a budget.
"""
from __future__ import annotations
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import count, islice
from typing import Callable, Hashable, Iterable, Iterator, Optional
from orderspace.util import (
    DEFAULT_FALLBACK_SCAN,
    BudgetExhaustedError,
    InputError,
    ViolationReport,
    pair,
    triple,
    unpair,
    untriple,
)

Index = Hashable


def index_code(i) -> int:
    """Natural-number code of a base index. Naturals code themselves, tuples
    pair their components recursively, and intervals and extended points use
    their own `code`."""
    if isinstance(i, bool):
        raise InputError(f"Not a base index: {i!r}")
    if isinstance(i, int):
        if i < 0:
            raise InputError(f"Not a base index: {i!r}")
        return i
    if isinstance(i, tuple) and len(i) == 2:
        return pair(index_code(i[0]), index_code(i[1]))
    code = getattr(i, "code", None)
    if isinstance(code, int):
        return code
    raise InputError(f"Not a base index: {i!r}")


class StrongBase(ABC):
    """Indexed family of basic opens with a refinement function."""

    # short name shown in reports
    name = None

    @abstractmethod
    def index_domain(self, i) -> bool:
        """Decide i in I."""
        pass

    @abstractmethod
    def basic_member(self, i, x: int) -> bool:
        """Decide x in U_i."""
        pass

    @abstractmethod
    def refine(self, x: int, i, j):
        """k(x, i, j)."""
        pass

    @abstractmethod
    def point_cover(self, x: int):
        """Some index i with x in U_i."""
        pass

    @abstractmethod
    def indices(self) -> Iterator:
        """Enumerate I (possibly infinitely)."""
        pass

    def sample_indices(self, n: int) -> list:
        return list(islice(self.indices(), n))

    def with_refine(self, refine: Callable) -> StrongBase:
        """Same base with k replaced, for exercising the axiom checker."""
        return _RefineOverride(self, refine)


class _RefineOverride(StrongBase):
    def __init__(self, base: StrongBase, refine: Callable):
        self.base = base
        self._refine = refine
        self.name = f"{base.name}+refine"

    def index_domain(self, i) -> bool:
        return self.base.index_domain(i)

    def basic_member(self, i, x: int) -> bool:
        return self.base.basic_member(i, x)

    def refine(self, x: int, i, j):
        return self._refine(x, i, j)

    def point_cover(self, x: int):
        return self.base.point_cover(x)

    def indices(self) -> Iterator:
        return self.base.indices()


class TableBase(StrongBase):
    """Finite base given by an explicit table index -> set of points. Used for
    small fabricated spaces. Refinement picks the smallest tabled open that
    contains x and sits inside both arguments."""

    def __init__(self, opens: dict, name: str = "table"):
        self.name = name
        self.opens = { i: frozenset(pts) for i, pts in opens.items() }
        self.order = sorted(self.opens.keys(), key=index_code)

    def index_domain(self, i) -> bool:
        return i in self.opens

    def basic_member(self, i, x: int) -> bool:
        return i in self.opens and x in self.opens[i]

    def refine(self, x: int, i, j):
        target = self.opens.get(i, frozenset()) & self.opens.get(j, frozenset())
        candidates = [ k for k in self.order if x in self.opens[k] and self.opens[k] <= target ]
        if not candidates:
            # no valid refinement exists; hand back i and let the checker see it
            return i
        return min(candidates, key=lambda k: len(self.opens[k]))

    def point_cover(self, x: int):
        for i in self.order:
            if x in self.opens[i]:
                return i
        raise InputError(f"{x} is not in any basic open of {self.name}")

    def indices(self) -> Iterator:
        return iter(self.order)


@dataclass(frozen=True)
class CSCSpace:
    """Countable second-countable space (X, U, k). `size` is None when X
    is infinite."""
    name: str
    enumerate: Callable[[int], int]
    contains: Callable[[int], bool]
    base: StrongBase
    size: Optional[int] = None

    def __repr__(self) -> str:
        return f"CSCSpace({self.name})"

    def points(self) -> Iterator[int]:
        indices = range(self.size) if self.size is not None else count()
        for i in indices:
            yield self.enumerate(i)

    def sample(self, n: int) -> list[int]:
        return list(islice(self.points(), n))

    def require(self, x: int):
        if not self.contains(x):
            raise InputError(f"{x} is not a point of {self.name}")


def table_space(opens: dict, name: str = "table") -> CSCSpace:
    """Finite space whose points are the union of the tabled opens."""
    points = sorted(set().union(*[ set(v) for v in opens.values() ])) if opens else []
    if not points:
        raise InputError("Spaces are non-empty: table has no points")
    members = frozenset(points)
    return CSCSpace(
        name=name,
        enumerate=points.__getitem__,
        contains=members.__contains__,
        base=TableBase(opens, name=name),
        size=len(points),
    )


@dataclass(frozen=True)
class OpenSetCode:
    """G_h: the union over n of the basic opens indexed by h(n)."""
    h: Callable[[int], Iterable]

    def stage(self, n: int) -> list:
        return sorted(self.h(n), key=index_code)

@dataclass(frozen=True)
class HonestSequence:
    """Sequence of open sets, the m-th being G_{h2(m, .)}."""
    h2: Callable[[int, int], Iterable]

    def row(self, m: int) -> OpenSetCode:
        return OpenSetCode(lambda n: self.h2(m, n))

    def cell(self, m: int, n: int) -> list:
        return sorted(self.h2(m, n), key=index_code)

@dataclass(frozen=True)
class EnumerableCover:
    """Sequence of uniformly enumerable point sets: the m-th set is the union
    over n of membership_stream(m, n). Openness of each set is assumed."""
    membership_stream: Callable[[int, int], Iterable[int]]

@dataclass(frozen=True)
class FiniteCoverRelation:
    """covers(F) holds iff the basic opens indexed by F cover X."""
    covers: Callable[[Iterable], bool]


def check_base_axioms(space: CSCSpace, point_sample: int, index_sample: int) -> ViolationReport:
    """Check both strong-base axioms on every sampled (x, i, j). Subset claims
    are checked on the point sample."""
    base = space.base
    points = space.sample(point_sample)
    indices = base.sample_indices(index_sample)
    report = ViolationReport(title=f"base axioms on {space.name}")

    for i in indices:
        if not base.index_domain(i):
            report.add("index_domain", repr(i), "enumerated index is not in I")

    for x in points:
        i = base.point_cover(x)
        report.checked += 1
        if not base.index_domain(i):
            report.add("point_cover", f"x={x}", f"{i!r} is not in I")
        elif not base.basic_member(i, x):
            report.add("point_cover", f"x={x}", f"x not in U_{i!r}")

    for x in points:
        members = [ i for i in indices if base.basic_member(i, x) ]
        for i in members:
            for j in members:
                report.checked += 1
                k = base.refine(x, i, j)
                where = f"k({x}, {i!r}, {j!r}) = {k!r}"
                if not base.index_domain(k):
                    report.add("refine_domain", where, "result is not in I")
                    continue
                if not base.basic_member(k, x):
                    report.add("refine_point", where, "x not in result")
                    continue
                for y in points:
                    if base.basic_member(k, y) and not (base.basic_member(i, y) and base.basic_member(j, y)):
                        report.add("refine_subset", where, f"{y} in result but not in both")
                        break

    logging.debug(f"[check_base_axioms] {report}")
    return report


@dataclass(frozen=True)
class MemberVerdict:
    """Outcome of a budgeted membership search. `found` is False for unknown."""
    found: bool
    stage: Optional[int] = None
    index: Optional[Index] = None

    def __repr__(self) -> str:
        if self.found:
            return f"yes({self.stage}, {self.index!r})"
        return "unknown"

UNKNOWN = MemberVerdict(found=False)


def open_member(code: OpenSetCode, x: int, budget: int, space: CSCSpace) -> MemberVerdict:
    """Search stages n < budget for the first i in h(n) with x in U_i."""
    space.require(x)
    for n in range(budget):
        for i in code.stage(n):
            if not space.base.index_domain(i):
                raise InputError(f"h({n}) emitted {i!r}, which is not in I")
            if space.base.basic_member(i, x):
                return MemberVerdict(found=True, stage=n, index=i)
    return UNKNOWN


class FlattenedCover:
    """The flattening g of an honest sequence: g(<m,n,s>) is the (s+1)-th
    smallest member of h2(m,n) (by index code), or the fallback i0 when the
    cell is too small. `origin(p)` names the cell that contributes g(p)."""

    def __init__(self, hs: HonestSequence, fallback, fallback_origin: tuple[int, int]):
        self.hs = hs
        self.fallback = fallback
        self.fallback_origin = fallback_origin

    def __call__(self, p: int):
        m, n, s = untriple(p)
        cell = self.hs.cell(m, n)
        return cell[s] if s < len(cell) else self.fallback

    def origin(self, p: int) -> tuple[int, int]:
        m, n, s = untriple(p)
        return (m, n) if s < len(self.hs.cell(m, n)) else self.fallback_origin

    @staticmethod
    def pairing_bound(rows: int, cols: int, width: int) -> int:
        """Least P with <m,n,s> < P for all m < rows, n < cols, s < width.
        Pairing is monotone in each argument so the corner decides."""
        if rows <= 0 or cols <= 0 or width <= 0:
            return 0
        return triple(rows - 1, cols - 1, width - 1) + 1


def honest_flatten(hs: HonestSequence, fallback_scan: int = DEFAULT_FALLBACK_SCAN) -> FlattenedCover:
    """Flatten an honest sequence into a single stream of basic indices whose
    union is the union of the whole sequence. The fallback i0 is the least
    member of the first non-empty cell h2(m0, n0), scanning <m0, n0> upward."""
    for z in range(fallback_scan):
        m, n = unpair(z)
        cell = hs.cell(m, n)
        if cell:
            logging.debug(f"[honest_flatten] fallback index {cell[0]!r} from h2({m}, {n})")
            return FlattenedCover(hs, cell[0], (m, n))
    raise BudgetExhaustedError(f"No fallback index: h2(m, n) is empty for all <m, n> < {fallback_scan}")


def subcover_stage_bound(P: int, g_origin: Callable[[int], tuple[int, int]], hs: HonestSequence, g: Optional[Callable] = None) -> int:
    """M = 1 + max m over the provenance of g(0..P-1): the first M honest sets
    absorb those P basic opens. When g is given, provenance is checked."""
    if P <= 0:
        return 0
    M = 0
    for p in range(P):
        m, n = g_origin(p)
        if g is not None and g(p) not in hs.cell(m, n):
            raise InputError(f"Provenance of g({p}) = {g(p)!r} is not in h2({m}, {n})")
        M = max(M, m + 1)
    return M


def enumerable_from_honest(hs: HonestSequence, space: CSCSpace, point_budget: int) -> EnumerableCover:
    """View an honest sequence as uniformly enumerable point sets: stage n of
    set m lists the first `point_budget` points lying in some U_i, i in h2(m,n)."""
    points = space.sample(point_budget)

    def membership_stream(m: int, n: int) -> list[int]:
        cell = hs.cell(m, n)
        return [ x for x in points if any(space.base.basic_member(i, x) for i in cell) ]

    return EnumerableCover(membership_stream)

def enumerable_member(cover: EnumerableCover, x: int, m: int, budget: int) -> Optional[int]:
    """First stage n < budget at which x shows up in the m-th set, else None."""
    for n in range(budget):
        if x in cover.membership_stream(m, n):
            return n
    return None


def is_discrete_witness(space: CSCSpace, d: Callable[[int], Index], sample: int) -> bool:
    """Check U_{d(x)} = {x} relative to the first `sample` points."""
    points = space.sample(sample)
    for x in points:
        i = d(x)
        if not space.base.index_domain(i):
            logging.debug(f"[is_discrete_witness] d({x}) = {i!r} is not in I")
            return False
        if not space.base.basic_member(i, x):
            logging.debug(f"[is_discrete_witness] {x} not in U_d({x})")
            return False
        for y in points:
            if y != x and space.base.basic_member(i, y):
                logging.debug(f"[is_discrete_witness] U_d({x}) also contains {y}")
                return False
    return True
