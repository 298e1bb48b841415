"""
Verbs on trees under the Kleene-Brouwer order.
"""
from tabulate import tabulate
from orderspace.commands import Command, Report, Status
from orderspace.commands.cover import require_input
from orderspace.order import ExtPoint
from orderspace.trees import format_seq, kb_predecessor, kb_sorted, kb_successor, parse_seq
from orderspace.trees.builtin import alternating_upper
from orderspace.trees.paths import extract_path, reversal_pipeline, subtree_upper_set
from orderspace.util import DEFAULT_BUDGET, DEFAULT_DEPTH_CAP, InputError, seq_code, seq_decode
from orderspace.util.io import load_tree


def format_neighbour(v) -> str:
    return repr(v) if isinstance(v, ExtPoint) else format_seq(v)

def format_code_point(p: ExtPoint) -> str:
    """Extended point of a KB view (sequence codes) as text."""
    return format_seq(seq_decode(p.value)) if p.is_point else repr(p)


class CommandKbSort(Command):
    """List the nodes of a finite tree in KB order."""

    name = "kb-sort"

    def default_config_string() -> str:
        return ""

    def run(
        tree=None,
        **kwargs,
    ) -> Report:
        t = load_tree(require_input(tree, "--tree"))
        nodes = kb_sorted(t)
        rows = [ (rank, format_seq(s), seq_code(s)) for rank, s in enumerate(nodes) ]
        table = tabulate(rows, headers=["rank", "sequence", "code"], tablefmt="plain")
        return Report(Status.OK, [ table, f"nodes: {len(nodes)}" ])


class CommandKbNeighbors(Command):
    """Immediate KB predecessor and successor of one node."""

    name = "kb-neighbors"

    def default_config_string() -> str:
        return """
            depth = 64
        """

    def run(
        tree=None,
        sigma=None,
        depth=DEFAULT_DEPTH_CAP,
        **kwargs,
    ) -> Report:
        t = load_tree(require_input(tree, "--tree"))
        s = parse_seq(require_input(sigma, "--sigma"))
        pred = kb_predecessor(t, s)
        succ = kb_successor(t, s, depth)
        return Report(Status.OK, [ f"pred: {format_neighbour(pred)}", f"succ: {format_neighbour(succ)}" ])


class CommandExtractPath(Command):
    """Path prefix from an upper-set oracle. Without --sigma the whole
    reversal pipeline runs: it either finds a subtree with no leftmost leaf
    or reports the KB order discrete."""

    name = "extract-path"

    def default_config_string() -> str:
        return """
            budget = 64
            depth = 64
            upper = "subtree"
        """

    def run(
        tree=None,
        sigma=None,
        budget=DEFAULT_BUDGET,
        depth=DEFAULT_DEPTH_CAP,
        upper="subtree",
        **kwargs,
    ) -> Report:
        t = load_tree(require_input(tree, "--tree"))

        if upper == "alternating":
            path = extract_path(t, alternating_upper(), budget)
        elif upper != "subtree":
            raise InputError(f"Unknown upper set {upper!r}, expected `subtree` or `alternating`")
        elif sigma is not None:
            path = extract_path(t, subtree_upper_set(t, parse_seq(sigma)), budget)
        else:
            result = reversal_pipeline(t, budget, depth)
            if not result.found_path:
                report = Report(Status.NONE, [ f"discrete: {len(result.explored)} nodes explored" ])
                for s in result.explored:
                    d = result.witness(s)
                    report.add(f"{format_seq(s)}: ({format_code_point(d.lo)}, {format_code_point(d.hi)})")
                if not result.complete:
                    report.add(f"truncated: depth {budget}")
                report.add(f"budget: {budget}")
                return report
            path = result.path

        report = Report(Status.FOUND, [ format_seq(s) for s in path ])
        report.add(f"steps: {budget}")
        return report
