"""
Text formats for orders, cuts, covers, injection index streams, honest
tables and trees. All formats are UTF-8, line oriented, `#` comments.

    order    finite 4            cut     lower: a b
             a b c d                     upper: c d
             | gallery NAME              | gallery-gap NAME

    cover    -inf b              stream  0 5
             a +inf                      1 4 2
             | gallery-gap NAME          2 7

    honest   0 0: -inf b, a +inf  tree   bound: 2 2 3
             1 0:                        -
                                         0
                                         0,1
                                         | builtin NAME

On the command line `gallery:NAME`, `builtin:NAME` and
`gallery-gap:NAME` stand in for the file.
"""
from __future__ import annotations
import logging
from orderspace.order import Cut, Interval, OrderPresentation, finite_order
from orderspace.order.gallery import gallery
from orderspace.space import HonestSequence
from orderspace.topology import CoverStream, cover_from_gap
from orderspace.trees import TreePresentation, check_tree, parse_seq
from orderspace.trees.builtin import get_tree
from orderspace.util import InputError
from orderspace.util.string import content_lines, split_prefixed


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as err:
        raise InputError(f"Cannot read {path}: {err}")


def _parse_int(token: str, what: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise InputError(f"Expected a natural for {what}, got {token!r}")
    if v < 0:
        raise InputError(f"Expected a natural for {what}, got {v}")
    return v


def parse_order(text: str) -> OrderPresentation:
    lines = content_lines(text)
    if not lines:
        raise InputError("Empty order file")
    head = lines[0].split()
    if head[0] == "gallery" and len(head) == 2:
        return gallery(head[1])
    if head[0] != "finite" or len(head) != 2:
        raise InputError(f"Order header must be `finite n` or `gallery NAME`, got {lines[0]!r}")
    n = _parse_int(head[1], "order size")
    labels = [ tok for line in lines[1:] for tok in line.split() ]
    if not labels:
        return finite_order(n)
    return finite_order(n, labels=labels)

def load_order(spec: str) -> OrderPresentation:
    """`gallery:NAME` or a path to an order file."""
    name = split_prefixed(spec, "gallery")
    if name is not None:
        return gallery(name)
    return parse_order(read_text(spec))


def _gallery_gap(name: str):
    cert = gallery(name).gap_certificate
    if cert is None:
        raise InputError(f"Gallery order {name} has no gap certificate")
    return cert


def parse_cut(text: str, ord: OrderPresentation) -> Cut:
    lines = content_lines(text)
    if len(lines) == 1 and lines[0].startswith("gallery-gap"):
        return _gallery_gap(lines[0].split()[-1]).cut
    sides = {}
    for line in lines:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("lower", "upper"):
            raise InputError(f"Cut lines must start with `lower:` or `upper:`, got {line!r}")
        sides[key] = [ ord.parse_label(tok) for tok in rest.split() ]
    if set(sides) != { "lower", "upper" }:
        raise InputError("Cut needs both a `lower:` and an `upper:` line")
    return Cut.from_sets(sides["lower"], sides["upper"])


def parse_interval(line: str, ord: OrderPresentation) -> Interval:
    tokens = line.split()
    if len(tokens) != 2:
        raise InputError(f"Interval needs two endpoints, got {line!r}")
    return Interval(ord.parse_point(tokens[0]), ord.parse_point(tokens[1]))

def parse_cover(text: str, ord: OrderPresentation, name: str = "cover") -> CoverStream:
    """Finite list of intervals, or `gallery-gap NAME` for the infinite
    cover built from that gap."""
    lines = content_lines(text)
    if len(lines) == 1 and lines[0].startswith("gallery-gap"):
        return cover_from_gap(ord, _gallery_gap(lines[0].split()[-1]))
    return CoverStream.from_intervals([ parse_interval(line, ord) for line in lines ], name=name)

def load_cover(spec: str, ord: OrderPresentation) -> CoverStream:
    """`gallery-gap:NAME` for the cover built from that gap, or a cover file."""
    name = split_prefixed(spec, "gallery-gap")
    if name is not None:
        return cover_from_gap(ord, _gallery_gap(name))
    return parse_cover(read_text(spec), ord, name=spec)


def parse_index_stream(text: str) -> list[tuple]:
    """Injection-space indices `0 n`, `1 n s`, `2 s`."""
    indices = []
    for line in content_lines(text):
        values = [ _parse_int(tok, "index") for tok in line.split() ]
        if len(values) == 2 and values[0] in (0, 2):
            indices.append((values[0], values[1]))
        elif len(values) == 3 and values[0] == 1:
            indices.append((1, (values[1], values[2])))
        else:
            raise InputError(f"Index must be `0 n`, `1 n s` or `2 s`, got {line!r}")
    return indices

def load_index_stream(path: str) -> list[tuple]:
    return parse_index_stream(read_text(path))


def parse_honest(text: str, ord: OrderPresentation) -> HonestSequence:
    """Table of cells `m n: a b, a b`; unlisted cells are empty."""
    cells = {}
    for line in content_lines(text):
        key, sep, rest = line.partition(":")
        coords = key.split()
        if not sep or len(coords) != 2:
            raise InputError(f"Honest table lines look like `m n: a b, ...`, got {line!r}")
        m, n = (_parse_int(tok, "cell coordinate") for tok in coords)
        intervals = [ parse_interval(part, ord) for part in rest.split(",") if part.strip() ]
        cells.setdefault((m, n), set()).update(intervals)
    frozen = { k: frozenset(v) for k, v in cells.items() }
    logging.debug(f"[parse_honest] {len(frozen)} non-empty cells")
    return HonestSequence(h2=lambda m, n: frozen.get((m, n), frozenset()))

def load_honest(path: str, ord: OrderPresentation) -> HonestSequence:
    return parse_honest(read_text(path), ord)


def parse_tree(text: str, name: str = "tree") -> TreePresentation:
    lines = content_lines(text)
    if len(lines) == 1 and lines[0].startswith("builtin"):
        return get_tree(lines[0].split()[-1])
    bound = None
    seqs = []
    for line in lines:
        if line.startswith("bound:"):
            values = [ _parse_int(tok, "bound") for tok in line[len("bound:"):].split() ]
            if not values:
                raise InputError("Empty `bound:` header")
            # last value repeats on deeper levels
            bound = lambda n, values=tuple(values): values[min(n, len(values) - 1)]
        else:
            seqs.append(parse_seq(line))
    if not seqs:
        raise InputError("Tree file lists no sequences")
    t = TreePresentation.from_sequences(seqs, bound=bound, name=name)
    report = check_tree(t, max(len(s) for s in seqs))
    if not report.ok:
        raise InputError(f"Malformed tree {name}: {report!r}\n{report.table()}")
    return t

def load_tree(spec: str) -> TreePresentation:
    """`builtin:NAME` or a path to a tree file."""
    name = split_prefixed(spec, "builtin")
    if name is not None:
        return get_tree(name)
    return parse_tree(read_text(spec), name=spec)
