"""
The discrete space built from an injection f on the naturals.

    X = N,  I = {0, 1, 2} x N

    U_(0, n)      = {n} + {t : some s <= t has f(s) = n}
    U_(1, (n, s)) = {n} if f(s) = n else empty
    U_(2, s)      = {t : t >= s}

Indices are tuples `(0, n)`, `(1, (n, s))`, `(2, s)`. The space is discrete
but not compact, and a cover of it by finite basic opens decides the range
of f, which is the point of the construction.
"""
from __future__ import annotations
import logging
import re
from dataclasses import dataclass
from enum import Enum, auto
from functools import lru_cache
from typing import Callable, Iterator, Optional
import numpy as np
from orderspace.space import CSCSpace, StrongBase
from orderspace.util import InputError, NotFiniteBasicCoverError, NotInjectiveError, UndecidableError, unpair


# list of builtin injections for the CLI
INJECTIONS = [
    "double",
    "random:<seed>",
]

# block width of the random injection: block b of arguments maps into
# [2*K*b, 2*K*(b+1)), so half of the values are never hit
RANDOM_BLOCK = 8


@dataclass(frozen=True)
class Injection:
    """Injection f with an optional preimage oracle n -> s or None."""
    name: str
    f: Callable[[int], int]
    preimage: Optional[Callable[[int], Optional[int]]] = None

    def __call__(self, s: int) -> int:
        return self.f(s)

    def __repr__(self) -> str:
        return f"Injection({self.name})"

    def find_preimage(self, n: int, up_to: int) -> Optional[int]:
        """Some s <= up_to with f(s) = n, else None. Without an oracle this
        scans f(0..up_to) and raises NotInjectiveError on a repeated value."""
        if self.preimage is not None:
            s = self.preimage(n)
            return s if s is not None and s <= up_to else None
        seen = {}
        found = None
        for s in range(up_to + 1):
            v = self.f(s)
            if v in seen:
                raise NotInjectiveError(f"{self.name}: f({seen[v]}) = f({s}) = {v}")
            seen[v] = s
            if v == n and found is None:
                found = s
        return found

    def check_injective(self, up_to: int):
        """Raise NotInjectiveError if f repeats a value on 0..up_to."""
        values = np.array([ self.f(s) for s in range(up_to + 1) ], dtype=np.int64)
        unique, counts = np.unique(values, return_counts=True)
        if np.any(counts > 1):
            v = int(unique[np.argmax(counts > 1)])
            raise NotInjectiveError(f"{self.name}: value {v} is hit more than once below {up_to + 1}")

    def range_below(self, up_to: int) -> set[int]:
        """{f(s) : s < up_to}."""
        return { self.f(s) for s in range(up_to) }


def double_injection() -> Injection:
    """f(s) = 2s."""
    return Injection(
        name="double",
        f=lambda s: 2 * s,
        preimage=lambda n: n // 2 if n % 2 == 0 else None,
    )


def random_injection(seed: int, block: int = RANDOM_BLOCK) -> Injection:
    """Blockwise random injection: arguments b*K .. b*K + K - 1 map to K
    distinct values drawn from [2Kb, 2K(b+1)) by a generator seeded with
    (seed, b). Deterministic for a fixed seed."""
    width = 2 * block

    @lru_cache(maxsize=256)
    def choice(b: int) -> tuple[int, ...]:
        rng = np.random.default_rng([seed, b])
        return tuple(int(v) for v in rng.choice(width, size=block, replace=False))

    def f(s: int) -> int:
        b, r = divmod(s, block)
        return width * b + choice(b)[r]

    def preimage(n: int) -> Optional[int]:
        b, r = divmod(n, width)
        values = choice(b)
        if r in values:
            return block * b + values.index(r)
        return None

    return Injection(name=f"random:{seed}", f=f, preimage=preimage)


def get_injection(name: str) -> Injection:
    """Return builtin injection by name: `double` or `random:<seed>`."""
    s = name.strip().lower()
    match = re.match(r"^random:(\d+)$", s)
    if s == "double":
        return double_injection()
    elif match is not None:
        return random_injection(int(match.group(1)))
    else:
        logging.error(f"Unknown injection: {name}")
        raise InputError(f"Unknown injection {name!r}, expected one of {INJECTIONS}")


def _is_nat(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0

def is_injection_index(i) -> bool:
    if not (isinstance(i, tuple) and len(i) == 2):
        return False
    tag, payload = i
    if tag in (0, 2):
        return _is_nat(payload)
    elif tag == 1:
        return isinstance(payload, tuple) and len(payload) == 2 and all(_is_nat(v) for v in payload)
    return False


class InjectionBase(StrongBase):
    """Basic opens of the injection space, evaluated by formula."""

    def __init__(self, inj: Injection):
        self.inj = inj
        self.name = f"injection({inj.name})"

    def _require(self, i):
        if not is_injection_index(i):
            raise InputError(f"Not an injection-space index: {i!r}")

    def index_domain(self, i) -> bool:
        return is_injection_index(i)

    def hit_by(self, n: int, t: int) -> bool:
        """Some s <= t has f(s) = n."""
        return self.inj.find_preimage(n, t) is not None

    def basic_member(self, i, x: int) -> bool:
        self._require(i)
        tag, payload = i
        if tag == 0:
            return x == payload or self.hit_by(payload, x)
        elif tag == 1:
            n, s = payload
            return x == n and self.inj(s) == n
        return x >= payload

    def refine(self, x: int, i, j):
        self._require(i)
        self._require(j)
        (ti, pi), (tj, pj) = i, j

        if ti == 0 and tj == 0:
            m, n = pi, pj
            if m == n:
                return (0, m)
            if x == m or x == n:
                return (2, x) if self.hit_by(x, x) else (0, x)
            return (2, x)

        if ti == 1:
            return i
        if tj == 1:
            return j

        if ti == 0 or tj == 0:
            # one basic open of each of the tags 0 and 2
            m = pi if ti == 0 else pj
            if x == m:
                return (2, x) if self.hit_by(x, x) else (0, x)
            return (2, x)

        return (2, max(pi, pj))

    def point_cover(self, x: int):
        return (0, x)

    def indices(self) -> Iterator:
        """(0, 0), (1, (0, 0)), (2, 0), (0, 1), (1, unpair(1)), (2, 1), ..."""
        z = 0
        while True:
            tag, rest = z % 3, z // 3
            yield (1, unpair(rest)) if tag == 1 else (tag, rest)
            z += 1


def injection_space(f: Injection) -> CSCSpace:
    """X = N with the three families of basic opens of `InjectionBase`."""
    return CSCSpace(
        name=f"injection({f.name})",
        enumerate=lambda i: i,
        contains=_is_nat,
        base=InjectionBase(f),
    )


def canonical_cover(inj: Injection) -> Callable[[int], tuple]:
    """Cover by finite basic opens: h(m) = (1, (m, s)) when f(s) = m, else
    (0, m). Needs the range, i.e. a preimage oracle."""
    if inj.preimage is None:
        raise UndecidableError(f"{inj.name}: canonical cover needs a preimage oracle")

    def h(m: int) -> tuple:
        s = inj.preimage(m)
        return (1, (m, s)) if s is not None else (0, m)

    return h

def canonical_discreteness(inj: Injection) -> Callable[[int], tuple]:
    """Witness d with U_d(n) = {n}. It is the canonical cover itself."""
    return canonical_cover(inj)


class RangeStatus(Enum):
    IN_RANGE = auto()
    NOT_IN_RANGE = auto()
    UNKNOWN = auto()

@dataclass(frozen=True)
class RangeVerdict:
    status: RangeStatus
    preimage: Optional[int] = None
    stage: Optional[int] = None

    def __repr__(self) -> str:
        if self.status == RangeStatus.IN_RANGE:
            return f"in_range({self.preimage})"
        elif self.status == RangeStatus.NOT_IN_RANGE:
            return "not_in_range"
        return "unknown"


def range_decode(f: Injection, cover_indices: Callable[[int], tuple], n: int, budget: int) -> RangeVerdict:
    """Decide n in range(f) from a cover by finite basic opens. The only
    finite basic opens holding n are U_(1,(n,s)) with f(s) = n and U_(0,n)
    when n is not hit, so the first of these in the stream answers."""
    for m in range(budget):
        i = cover_indices(m)
        if not is_injection_index(i):
            raise InputError(f"Cover emitted {i!r} at {m}, not an injection-space index")
        tag, payload = i
        if tag == 2:
            raise NotFiniteBasicCoverError(f"Cover emitted tail {i!r} at {m}: not a cover by finite basic opens")
        if tag == 1 and payload[0] == n and f(payload[1]) == n:
            return RangeVerdict(RangeStatus.IN_RANGE, preimage=payload[1], stage=m)
        if tag == 0 and payload == n:
            return RangeVerdict(RangeStatus.NOT_IN_RANGE, stage=m)
    return RangeVerdict(RangeStatus.UNKNOWN)
