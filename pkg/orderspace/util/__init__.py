"""
Miscellaneous utils here: codings of pairs and finite sequences as naturals,
error types, violation reports and library-wide budget defaults.
"""
import datetime
from dataclasses import dataclass, field
from math import isqrt
from tabulate import tabulate


# default search budgets (CLI echoes whichever is used)
DEFAULT_BUDGET = 64
DEFAULT_DEPTH_CAP = 64
DEFAULT_SAMPLE = 16
DEFAULT_FALLBACK_SCAN = 4096


class InputError(ValueError):
    """Invalid presentation, label, file or argument."""

class NotInjectiveError(InputError):
    """Two arguments of a supposed injection share a value."""

class NotFiniteBasicCoverError(InputError):
    """A cover that must consist of finite basic opens contains a tail."""

class UndecidableError(InputError):
    """Question cannot be answered for this presentation without oracles."""

class InvalidCertificateError(InputError):
    """A gap certificate witness failed its order relation."""

class BudgetExhaustedError(RuntimeError):
    """A bounded search ran out of budget without a verdict."""

class DepthCapExceededError(BudgetExhaustedError):
    """Leftmost descent went deeper than the allowed cap."""

class OraclePremiseError(RuntimeError):
    """An oracle answered in a way its stated premise rules out."""


def timestamp_date(format="%Y_%m_%d"):
    """Return coarse date timestamp string"""
    return datetime.datetime.now(datetime.timezone.utc).strftime(format)


def pair(x: int, y: int) -> int:
    """Cantor pairing <x, y> = (x + y)(x + y + 1)/2 + y. Bijective N^2 -> N."""
    s = x + y
    return s * (s + 1) // 2 + y

def unpair(z: int) -> tuple[int, int]:
    """Inverse of `pair`."""
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return (w - y, y)

def triple(m: int, n: int, s: int) -> int:
    """Triple code <m, n, s> = <m, <n, s>>."""
    return pair(m, pair(n, s))

def untriple(p: int) -> tuple[int, int, int]:
    """Inverse of `triple`."""
    m, ns = unpair(p)
    n, s = unpair(ns)
    return (m, n, s)


def seq_code(seq) -> int:
    """Code a finite sequence of naturals as a natural. The sequence
    <a0, a1, ...> becomes the binary word 1 0^a0 1 0^a1 ..., read in base 2:
        <>     -> 0
        <0>    -> 0b1    = 1
        <1>    -> 0b10   = 2
        <0, 0> -> 0b11   = 3
        <0, 1> -> 0b110  = 6
    Every positive integer splits uniquely into blocks "1 0^a" so this is
    a bijection. Codes are ordered by word length (|s| + sum s), then
    lexicographically on the word.
    """
    code = 0
    for a in seq:
        if a < 0:
            raise InputError(f"Sequence entries must be naturals: {seq}")
        code = ((code << 1) | 1) << a
    return code

def seq_decode(code: int) -> tuple:
    """Inverse of `seq_code`."""
    if code < 0:
        raise InputError(f"Sequence code must be a natural: {code}")
    if code == 0:
        return ()
    blocks = bin(code)[2:].split("1")[1:]
    return tuple(len(b) for b in blocks)


@dataclass(frozen=True)
class Violation:
    """One failed check in a `ViolationReport`."""
    kind: str
    where: str
    detail: str = ""

@dataclass
class ViolationReport:
    """Outcome of an exhaustive check. Violations are data, not errors."""
    title: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    def __repr__(self) -> str:
        return f"ViolationReport({self.title}, checked={self.checked}, violations={len(self.violations)})"

    def __str__(self) -> str:
        return self.__repr__()

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def add(self, kind: str, where: str, detail: str = ""):
        self.violations.append(Violation(kind, where, detail))

    def kinds(self) -> set[str]:
        return { v.kind for v in self.violations }

    def table(self, max_rows: int = 20) -> str:
        """Plain-text table of the first `max_rows` violations."""
        rows = [ (v.kind, v.where, v.detail) for v in self.violations[:max_rows] ]
        return tabulate(rows, headers=["kind", "where", "detail"], tablefmt="plain")
