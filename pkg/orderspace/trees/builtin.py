"""
Named infinite trees for tests and the command line.

    zeros        {0^n} + {<1>}, bound 2
    zeros_noise  {0^n} + every sequence of length <= 2 over {0,1,2}, bound 3
    alternating  prefixes of 1,0,1,0,... + every binary sequence of length <= 3
    binary       all binary sequences
    comb         1^n and 1^n 0, bound 2: infinite, every subtree has a leftmost leaf
    staircase    sigma(0) <= 1 and sigma(i+1) <= sigma(i) + 1; no level bound,
                 children come from a per-node branching oracle
"""
from __future__ import annotations
import logging
from orderspace.trees import FinSeq, TreePresentation, kb_less
from orderspace.trees.paths import UpperSetOracle
from orderspace.util import InputError


# list of available builtin trees
BUILTIN_TREES = [
    "zeros",
    "zeros_noise",
    "alternating",
    "binary",
    "comb",
    "staircase",
]


def _all_zero(sigma: FinSeq) -> bool:
    return all(v == 0 for v in sigma)

def _alternating_entry(i: int) -> int:
    return 1 if i % 2 == 0 else 0

def alternating_path(n: int) -> FinSeq:
    """The first n entries of 1,0,1,0,..."""
    return tuple(_alternating_entry(i) for i in range(n))


def zeros() -> TreePresentation:
    return TreePresentation(
        name="zeros",
        member=lambda s: _all_zero(s) or s == (1,),
        bound=lambda n: 2,
    )

def zeros_noise() -> TreePresentation:
    return TreePresentation(
        name="zeros_noise",
        member=lambda s: _all_zero(s) or (len(s) <= 2 and all(0 <= v < 3 for v in s)),
        bound=lambda n: 3,
    )

def alternating() -> TreePresentation:
    def member(s):
        if not all(v in (0, 1) for v in s):
            return False
        return len(s) <= 3 or s == alternating_path(len(s))

    return TreePresentation(name="alternating", member=member, bound=lambda n: 2)

def binary() -> TreePresentation:
    return TreePresentation(
        name="binary",
        member=lambda s: all(v in (0, 1) for v in s),
        bound=lambda n: 2,
    )

def comb() -> TreePresentation:
    def member(s):
        body = s[:-1] if s and s[-1] == 0 else s
        return all(v == 1 for v in body)

    return TreePresentation(name="comb", member=member, bound=lambda n: 2)

def staircase() -> TreePresentation:
    def member(s):
        if len(s) == 0:
            return True
        if s[0] > 1:
            return False
        return all(0 <= s[i + 1] <= s[i] + 1 for i in range(len(s) - 1))

    return TreePresentation(
        name="staircase",
        member=member,
        branching=lambda s: 2 if len(s) == 0 else s[-1] + 2,
    )


def alternating_upper() -> UpperSetOracle:
    """A+ for `alternating`: prefixes of the infinite path and everything to
    their right. It is closed upward under <_KB and has no least element."""
    def in_upper(s):
        if not alternating().member(s):
            return False
        path = alternating_path(len(s))
        return s == path or kb_less(path, s)

    return UpperSetOracle(in_upper=in_upper)


def get_tree(name: str) -> TreePresentation:
    """Return builtin tree by name."""
    s = name.strip().lower()
    if s == "zeros":
        return zeros()
    elif s == "zeros_noise":
        return zeros_noise()
    elif s == "alternating":
        return alternating()
    elif s == "binary":
        return binary()
    elif s == "comb":
        return comb()
    elif s == "staircase":
        return staircase()
    else:
        logging.error(f"Unknown builtin tree: {name}")
        raise InputError(f"Unknown builtin tree {name!r}, expected one of {BUILTIN_TREES}")
