"""
Define interface for command line verbs.
"""
from __future__ import annotations
import logging
import tomli
from abc import ABC, abstractmethod
from enum import Enum, auto
from orderspace.util.string import strip_leading_whitespace


# list of available command verbs (hardcoded)
COMMANDS = [
    "check-cover",
    "subcover",
    "gap-find",
    "kb-sort",
    "kb-neighbors",
    "extract-path",
    "injection-demo",
    "flatten",
    "verify-base",
]

class Status(Enum):
    OK = auto()
    FOUND = auto()
    NONE = auto()
    STAGED = auto()
    ERROR = auto()

    @property
    def exit_code(self) -> int:
        if self in (Status.OK, Status.FOUND):
            return 0
        elif self in (Status.NONE, Status.STAGED):
            return 1
        return 2

class Report():
    """Status plus deterministic text lines printed to stdout."""
    def __init__(
        self,
        status: Status,
        lines=None,
    ):
        self.status = status
        self.lines = list(lines) if lines is not None else []

    def __repr__(self) -> str:
        return f"Report({self.status.name.lower()}, {len(self.lines)} lines)"

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def add(self, line: str):
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines)

    @staticmethod
    def error(message: str) -> Report:
        return Report(Status.ERROR, [ f"error: {message}" ])


class Command(ABC):
    """Interface for command line verbs."""

    # verb name, must match name in `get(name)`
    name = None

    @staticmethod
    @abstractmethod
    def default_config_string() -> str:
        """Return default `run` arguments config as a toml string."""
        return ""

    @classmethod
    def default_config(cls) -> dict:
        """Return default `run` arguments config as a dict. Parses this
        class's default config string as toml."""
        return tomli.loads(strip_leading_whitespace(cls.default_config_string()))

    @staticmethod
    @abstractmethod
    def run(**kwargs) -> Report:
        """Run the verb and return its Report. Keyword arguments are the
        merged config plus the input specs given on the command line
        (`order`, `cover`, `tree`, `sigma`, `honest`, `injection`)."""
        pass

    @staticmethod
    def get(name):
        """Return command class by verb name."""
        s = name.lower()
        if s == "check-cover":
            from orderspace.commands.cover import CommandCheckCover
            return CommandCheckCover
        elif s == "subcover":
            from orderspace.commands.cover import CommandSubcover
            return CommandSubcover
        elif s == "gap-find":
            from orderspace.commands.cover import CommandGapFind
            return CommandGapFind
        elif s == "verify-base":
            from orderspace.commands.cover import CommandVerifyBase
            return CommandVerifyBase
        elif s == "flatten":
            from orderspace.commands.cover import CommandFlatten
            return CommandFlatten
        elif s == "kb-sort":
            from orderspace.commands.trees import CommandKbSort
            return CommandKbSort
        elif s == "kb-neighbors":
            from orderspace.commands.trees import CommandKbNeighbors
            return CommandKbNeighbors
        elif s == "extract-path":
            from orderspace.commands.trees import CommandExtractPath
            return CommandExtractPath
        elif s == "injection-demo":
            from orderspace.commands.injection import CommandInjectionDemo
            return CommandInjectionDemo
        else:
            logging.error(f"Unknown command: {name}")
            return None
