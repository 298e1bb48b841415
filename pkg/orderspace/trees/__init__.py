"""
Trees of finite sequences and the Kleene-Brouwer order.

    sigma <_KB tau  iff  sigma properly extends tau, or sigma is to the left
                         of tau at their first disagreement

On a bounded tree (entries on level n stay below g(n)) children can be
listed, which makes the immediate KB predecessor and successor computable
whenever the subtrees involved have leftmost leaves. Sequences are plain
tuples of naturals.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import count, islice
from typing import Callable, Iterable, Optional, Union
from orderspace.order import (
    NEG_INF,
    POS_INF,
    Comparison,
    ExtPoint,
    Interval,
    OrderPresentation,
)
from orderspace.util import (
    DEFAULT_DEPTH_CAP,
    DEFAULT_FALLBACK_SCAN,
    DepthCapExceededError,
    InputError,
    ViolationReport,
    seq_code,
    seq_decode,
)

FinSeq = tuple


def format_seq(sigma: FinSeq) -> str:
    """Comma separated entries, `-` for the empty sequence."""
    return "-" if len(sigma) == 0 else ",".join(str(v) for v in sigma)

def parse_seq(text: str) -> FinSeq:
    s = text.strip()
    if s in ("-", ""):
        return ()
    try:
        sigma = tuple(int(v) for v in s.split(","))
    except ValueError:
        raise InputError(f"Not a comma separated sequence of naturals: {text!r}")
    if any(v < 0 for v in sigma):
        raise InputError(f"Sequence entries must be naturals: {text!r}")
    return sigma

def is_prefix(sigma: FinSeq, tau: FinSeq) -> bool:
    """sigma is an initial segment of tau."""
    return len(sigma) <= len(tau) and tau[:len(sigma)] == tuple(sigma)


@dataclass(frozen=True)
class TreePresentation:
    """Prefix-closed set of finite sequences.

    - member: decidable membership
    - bound: level -> g(level) with sigma(n) < g(n) for members
    - finite_extent: explicit listing of every member of a finite tree
    - branching: node -> bound on its children, for finitely branching
      trees without a level-wise bound
    """
    name: str
    member: Callable[[FinSeq], bool]
    bound: Optional[Callable[[int], int]] = None
    finite_extent: Optional[tuple[FinSeq, ...]] = None
    branching: Optional[Callable[[FinSeq], int]] = None

    def __repr__(self) -> str:
        return f"TreePresentation({self.name})"

    @staticmethod
    def from_sequences(seqs: Iterable, bound: Optional[Callable[[int], int]] = None, name: str = "tree") -> TreePresentation:
        extent = tuple(sorted({ tuple(s) for s in seqs }, key=lambda s: (len(s), s)))
        members = frozenset(extent)
        return TreePresentation(name=name, member=members.__contains__, bound=bound, finite_extent=extent)

    @property
    def is_finite(self) -> bool:
        return self.finite_extent is not None

    def child_limit(self, sigma: FinSeq) -> int:
        """Every child sigma^m of sigma has m below this."""
        if self.bound is not None:
            return self.bound(len(sigma))
        if self.branching is not None:
            return self.branching(sigma)
        if self.finite_extent is not None:
            n = len(sigma)
            entries = [ tau[n] for tau in self.finite_extent if len(tau) == n + 1 and tau[:n] == sigma ]
            return max(entries) + 1 if entries else 0
        raise InputError(f"{self.name} has no bound, branching oracle or finite extent: children cannot be listed")

    def children(self, sigma: FinSeq) -> list[FinSeq]:
        return [ sigma + (m,) for m in range(self.child_limit(sigma)) if self.member(sigma + (m,)) ]

    def first_child(self, sigma: FinSeq) -> Optional[FinSeq]:
        for m in range(self.child_limit(sigma)):
            if self.member(sigma + (m,)):
                return sigma + (m,)
        return None

    def is_leaf(self, sigma: FinSeq) -> bool:
        return self.first_child(sigma) is None

    def require(self, sigma: FinSeq):
        if not self.member(tuple(sigma)):
            raise InputError(f"{format_seq(sigma)} is not in {self.name}")


def kb_compare(sigma: FinSeq, tau: FinSeq) -> Comparison:
    """Three-way Kleene-Brouwer comparison."""
    for a, b in zip(sigma, tau):
        if a < b:
            return Comparison.LT
        elif a > b:
            return Comparison.GT
    if len(sigma) == len(tau):
        return Comparison.EQ
    # one extends the other; the longer is smaller
    return Comparison.LT if len(sigma) > len(tau) else Comparison.GT

def kb_less(sigma: FinSeq, tau: FinSeq) -> bool:
    return kb_compare(sigma, tau) == Comparison.LT

_KB_KEY = cmp_to_key(lambda a, b: { Comparison.LT: -1, Comparison.EQ: 0, Comparison.GT: 1 }[kb_compare(a, b)])

def kb_sorted(t: Union[TreePresentation, Iterable[FinSeq]]) -> list[FinSeq]:
    """Nodes of a finite tree, <_KB ascending."""
    nodes = t.finite_extent if isinstance(t, TreePresentation) else t
    if nodes is None:
        raise InputError(f"{t.name} is not finite")
    return sorted((tuple(s) for s in nodes), key=_KB_KEY)


def check_tree(t: TreePresentation, depth: int, slack: int = 1, max_queries: int = DEFAULT_FALLBACK_SCAN) -> ViolationReport:
    """Check prefix closure and bound compliance up to `depth`. Finite trees
    are checked on their listing; oracle trees are queried level by level with
    entries up to `slack` past the child limit."""
    report = ViolationReport(title=f"tree {t.name}")

    def check(sigma):
        report.checked += 1
        for n, v in enumerate(sigma):
            if not isinstance(v, int) or v < 0:
                report.add("entry", format_seq(sigma), f"entry {v!r} is not a natural")
                return
            if t.bound is not None and v >= t.bound(n):
                report.add("bound", format_seq(sigma), f"sigma({n}) = {v} >= g({n}) = {t.bound(n)}")
        for n in range(len(sigma)):
            if not t.member(sigma[:n]):
                report.add("prefix", format_seq(sigma), f"missing prefix {format_seq(sigma[:n])}")
                break

    if t.is_finite:
        for sigma in t.finite_extent:
            if len(sigma) <= depth:
                check(sigma)
        return report

    if t.bound is None and t.branching is None:
        raise InputError(f"{t.name} has no bound or branching oracle to enumerate")
    if not t.member(()):
        report.add("prefix", "-", "empty sequence is not a member")
    level = [ () ]
    queries = 0
    for _ in range(depth):
        next_level = []
        for sigma in level:
            # without a level bound only members can be expanded
            if t.bound is None and not t.member(sigma):
                continue
            for m in range(t.child_limit(sigma) + slack):
                tau = sigma + (m,)
                queries += 1
                if t.member(tau):
                    check(tau)
                next_level.append(tau)
        if queries > max_queries:
            logging.warning(f"[check_tree] {t.name}: stopped after {queries} membership queries")
            break
        level = next_level
    return report


def leftmost_leaf(t: TreePresentation, eta: FinSeq, depth_cap: int = DEFAULT_DEPTH_CAP) -> FinSeq:
    """Follow least children from eta down to a leaf: the <_KB-least node
    of the subtree above eta."""
    eta = tuple(eta)
    t.require(eta)
    sigma = eta
    for _ in range(depth_cap + 1):
        child = t.first_child(sigma)
        if child is None:
            return sigma
        sigma = child
    raise DepthCapExceededError(f"Leftmost descent from {format_seq(eta)} in {t.name} exceeds depth cap {depth_cap}")


def kb_predecessor(t: TreePresentation, sigma: FinSeq) -> Union[FinSeq, ExtPoint]:
    """Immediate <_KB predecessor, or NEG_INF when sigma is <_KB-least."""
    sigma = tuple(sigma)
    t.require(sigma)
    kids = t.children(sigma)
    if kids:
        return kids[-1]
    # leaf: greatest i, then greatest m < sigma(i), with (sigma|i)^m in t
    for i in reversed(range(len(sigma))):
        for m in reversed(range(sigma[i])):
            tau = sigma[:i] + (m,)
            if t.member(tau):
                return tau
    return NEG_INF


def kb_successor(t: TreePresentation, sigma: FinSeq, depth_cap: int = DEFAULT_DEPTH_CAP) -> Union[FinSeq, ExtPoint]:
    """Immediate <_KB successor, or POS_INF for the empty sequence."""
    sigma = tuple(sigma)
    t.require(sigma)
    if len(sigma) == 0:
        return POS_INF
    parent = sigma[:-1]
    for m in range(sigma[-1] + 1, t.child_limit(parent)):
        if t.member(parent + (m,)):
            return leftmost_leaf(t, parent + (m,), depth_cap)
    return parent


def _ext_of(neighbour) -> ExtPoint:
    """Sequence or infinity as an extended point of the KB view."""
    if isinstance(neighbour, ExtPoint):
        return neighbour
    return ExtPoint.point(seq_code(neighbour))

def kb_discrete_witness(t: TreePresentation, depth_cap: int = DEFAULT_DEPTH_CAP) -> Callable[[FinSeq], Interval]:
    """d(sigma) = (pred(sigma), succ(sigma)) as an interval of `kb_view(t)`;
    it contains sigma and nothing else."""
    def d(sigma: FinSeq) -> Interval:
        return Interval(_ext_of(kb_predecessor(t, sigma)), _ext_of(kb_successor(t, sigma, depth_cap)))
    return d


def kb_view(t: TreePresentation, depth_cap: int = DEFAULT_DEPTH_CAP) -> OrderPresentation:
    """(t, <_KB) as an order on sequence codes, with between/above/below
    oracles from the immediate neighbours."""
    def contains(c) -> bool:
        return isinstance(c, int) and c >= 0 and t.member(seq_decode(c))

    if t.is_finite:
        codes = sorted(seq_code(s) for s in t.finite_extent)
        enumerate_ = codes.__getitem__
        size = len(codes)
    else:
        def enumerate_(i: int) -> int:
            return next(islice(filter(contains, count()), i, None))
        size = None

    def less(a, b) -> bool:
        return kb_less(seq_decode(a), seq_decode(b))

    def above(a):
        succ = kb_successor(t, seq_decode(a), depth_cap)
        return None if isinstance(succ, ExtPoint) else seq_code(succ)

    def below(a):
        pred = kb_predecessor(t, seq_decode(a))
        return None if isinstance(pred, ExtPoint) else seq_code(pred)

    def between(a, b):
        if not less(a, b):
            return None
        c = above(a)
        return None if c is None or c == b else c

    return OrderPresentation(
        name=f"kb({t.name})",
        enumerate=enumerate_,
        contains=contains,
        less=less,
        size=size,
        between=between,
        above=above,
        below=below,
        formatter=lambda c: format_seq(seq_decode(c)),
        parser=lambda token: seq_code(parse_seq(token)),
    )
