"""
String utils.
"""
from typing import Optional


def strip_leading_whitespace(s: str) -> str:
    """Strip leading whitespace of every line and drop blank lines at the
    start and end. Use on indented multi-line TOML config strings."""
    lines = [ line.strip() for line in s.splitlines() ]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    return "\n".join(lines)

def strip_comment(line: str) -> str:
    """Drop a `#` comment and surrounding whitespace."""
    return line.split("#", 1)[0].strip()

def content_lines(text: str) -> list[str]:
    """Non-empty lines of a text format, comments removed."""
    return [ s for s in (strip_comment(line) for line in text.splitlines()) if s ]

def split_prefixed(spec: str, prefix: str) -> Optional[str]:
    """`gallery:NAME` -> `NAME` for prefix `gallery`, else None."""
    head, sep, tail = spec.partition(":")
    if sep and head.strip().lower() == prefix:
        return tail.strip()
    return None
