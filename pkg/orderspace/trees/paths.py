"""
Paths from incomplete Kleene-Brouwer cuts.

If A+ is the upper side of a cut of (T, <_KB) with no least element, the
sequences

    sigma in A+ and no (sigma|i)^n with n < sigma(i) is in A+

form a path: exactly one per length, each extending the previous one by
the least m with sigma^m in A+. `reversal_pipeline` looks for a subtree
without a leftmost leaf to feed this, and otherwise returns the
discreteness witness of the KB order.
"""
from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Callable, Optional
from orderspace.order import Interval
from orderspace.trees import FinSeq, TreePresentation, format_seq, is_prefix, kb_discrete_witness, leftmost_leaf
from orderspace.util import (
    DEFAULT_FALLBACK_SCAN,
    BudgetExhaustedError,
    DepthCapExceededError,
    OraclePremiseError,
)


@dataclass(frozen=True)
class UpperSetOracle:
    """Membership in A+, the upper side of a KB cut of the subtree at root."""
    in_upper: Callable[[FinSeq], bool]
    root: FinSeq = ()

    def __call__(self, sigma: FinSeq) -> bool:
        return self.in_upper(tuple(sigma))


def in_leftmost_set(upper: UpperSetOracle, sigma: FinSeq) -> bool:
    """sigma is in A+ and no sequence branching off to its left below it is."""
    sigma = tuple(sigma)
    if not upper(sigma):
        return False
    for i in range(len(upper.root), len(sigma)):
        for n in range(sigma[i]):
            if upper(sigma[:i] + (n,)):
                return False
    return True


def extract_path(t: TreePresentation, upper: UpperSetOracle, steps: int) -> list[FinSeq]:
    """sigma_0 = root, sigma_{n+1} = sigma_n^m for the least m with
    sigma_n^m in A+. Returns steps + 1 sequences."""
    sigma = tuple(upper.root)
    t.require(sigma)
    if not upper(sigma):
        raise OraclePremiseError(f"A+ does not contain its root {format_seq(sigma)}")
    path = [ sigma ]
    for _ in range(steps):
        m = next((m for m in range(t.child_limit(sigma)) if t.member(sigma + (m,)) and upper(sigma + (m,))), None)
        if m is None:
            raise OraclePremiseError(f"Oracle violates no-least-element premise at {format_seq(sigma)}: no child in A+")
        sigma = sigma + (m,)
        path.append(sigma)
    logging.debug(f"[extract_path] {t.name}: reached {format_seq(sigma)}")
    return path


def subtree_upper_set(t: TreePresentation, sigma: FinSeq) -> UpperSetOracle:
    """A+ = T_sigma, the nodes extending sigma (with A- empty)."""
    sigma = tuple(sigma)
    t.require(sigma)
    return UpperSetOracle(in_upper=lambda tau: is_prefix(sigma, tau) and t.member(tau), root=sigma)


class PipelineOutcome(Enum):
    PATH = auto()
    DISCRETE = auto()


@dataclass
class PipelineResult:
    """Either a path prefix through a subtree whose leftmost descent did not
    end, or the KB discreteness witness over the explored nodes."""
    outcome: PipelineOutcome
    root: Optional[FinSeq] = None
    path: list[FinSeq] = field(default_factory=list)
    explored: list[FinSeq] = field(default_factory=list)
    complete: bool = True
    witness: Optional[Callable[[FinSeq], Interval]] = None

    @property
    def found_path(self) -> bool:
        return self.outcome == PipelineOutcome.PATH


def reversal_pipeline(t: TreePresentation, budget: int, depth_cap: Optional[int] = None, max_nodes: int = DEFAULT_FALLBACK_SCAN) -> PipelineResult:
    """Explore t breadth first down to depth `budget`. The first node whose
    leftmost descent exceeds the cap (default: budget) is taken to have no
    KB-least extension, and a path of `budget` steps is extracted above it.
    If every explored node has a leftmost leaf, the KB order is reported
    discrete on the explored region; `complete` is False when the tree
    continues below depth `budget`."""
    cap = budget if depth_cap is None else depth_cap
    explored = []
    complete = True
    queue = deque([ () ])
    while queue:
        sigma = queue.popleft()
        if not t.member(sigma):
            continue
        if len(explored) >= max_nodes:
            raise BudgetExhaustedError(f"{t.name}: explored {max_nodes} nodes without a verdict")
        explored.append(sigma)
        try:
            leftmost_leaf(t, sigma, cap)
        except DepthCapExceededError:
            logging.info(f"[reversal_pipeline] {t.name}: no leftmost leaf above {format_seq(sigma)} within {cap}")
            path = extract_path(t, subtree_upper_set(t, sigma), budget)
            return PipelineResult(outcome=PipelineOutcome.PATH, root=sigma, path=path, explored=explored)
        if len(sigma) < budget:
            queue.extend(t.children(sigma))
        elif complete and t.children(sigma):
            complete = False
            logging.info(f"[reversal_pipeline] {t.name}: continues past depth {budget}, stopping at {format_seq(sigma)}")

    logging.info(f"[reversal_pipeline] {t.name}: KB order discrete on {len(explored)} explored nodes")
    return PipelineResult(
        outcome=PipelineOutcome.DISCRETE,
        explored=explored,
        complete=complete,
        witness=kb_discrete_witness(t, cap),
    )
