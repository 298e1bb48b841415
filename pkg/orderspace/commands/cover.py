"""
Verbs on ordered spaces and their covers.
"""
import logging
from tabulate import tabulate
from orderspace.commands import Command, Report, Status
from orderspace.space import check_base_axioms, honest_flatten, subcover_stage_bound
from orderspace.space.injection import get_injection, injection_space
from orderspace.topology import ordered_space, uncovered_witness
from orderspace.topology.linkage import LinkageTreeParams, find_finite_subcover, gap_finder
from orderspace.util import DEFAULT_BUDGET, DEFAULT_FALLBACK_SCAN, InputError, untriple
from orderspace.util.io import load_cover, load_honest, load_order


def require_input(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


class CommandCheckCover(Command):
    """Decide whether a finite set of intervals covers the order."""

    name = "check-cover"

    def default_config_string() -> str:
        return """
            scan = 64
        """

    def run(
        order=None,
        cover=None,
        scan=DEFAULT_BUDGET,
        **kwargs,
    ) -> Report:
        ord = load_order(require_input(order, "--order"))
        os = ordered_space(ord)
        stream = load_cover(require_input(cover, "--cover"), ord)
        infinite = stream.length is None
        F = stream.prefix(scan if infinite else stream.length)
        witness = uncovered_witness(os, F)
        if witness is None:
            report = Report(Status.OK, [ "ok: covers" ])
        else:
            report = Report(Status.NONE, [ f"none: uncovered {ord.label(witness)}" ])
        if infinite:
            report.add(f"scan: {scan}")
        return report


class CommandSubcover(Command):
    """Search a finite subcover of a finite order through linkages."""

    name = "subcover"

    def default_config_string() -> str:
        return """
            scan = 64
        """

    def run(
        order=None,
        cover=None,
        scan=DEFAULT_BUDGET,
        **kwargs,
    ) -> Report:
        ord = load_order(require_input(order, "--order"))
        stream = load_cover(require_input(cover, "--cover"), ord)
        found = find_finite_subcover(ordered_space(ord), stream, scan)
        if found is None:
            return Report(Status.NONE, [ "none", f"scan: {scan}" ])
        return Report(Status.FOUND, [ "found: " + " ".join(str(m) for m in found), f"scan: {scan}" ])


class CommandGapFind(Command):
    """Staged subcover/gap dichotomy."""

    name = "gap-find"

    def default_config_string() -> str:
        return """
            budget = 64
            scan_limit = 4096
        """

    def run(
        order=None,
        cover=None,
        budget=DEFAULT_BUDGET,
        scan_limit=DEFAULT_FALLBACK_SCAN,
        **kwargs,
    ) -> Report:
        ord = load_order(require_input(order, "--order"))
        stream = load_cover(require_input(cover, "--cover"), ord)
        params = LinkageTreeParams.for_order(ord, stream, budget)
        result = gap_finder(params, budget=budget, scan_limit=scan_limit)

        if result.is_subcover:
            report = Report(Status.FOUND, [ "subcover: " + " ".join(str(m) for m in result.subcover) ])
        else:
            report = Report(Status.STAGED, [
                f"staged: {result.reason}",
                ("lower: " + " ".join(ord.label(x) for x in result.lower)).rstrip(),
                ("upper: " + " ".join(ord.label(x) for x in result.upper)).rstrip(),
            ])
        report.add(f"budget: {budget}")
        report.add(f"scan: {result.scan}")
        return report


class CommandVerifyBase(Command):
    """Check the strong-base axioms of an ordered or injection space."""

    name = "verify-base"

    def default_config_string() -> str:
        return """
            sample = 8
            indices = 12
            max_rows = 20
        """

    def run(
        order=None,
        injection=None,
        sample=8,
        indices=12,
        max_rows=20,
        **kwargs,
    ) -> Report:
        if injection is not None:
            space = injection_space(get_injection(injection))
        elif order is not None:
            space = ordered_space(load_order(order)).space
        else:
            raise InputError("verify-base needs --order or --injection")

        result = check_base_axioms(space, sample, indices)
        logging.info(f"[verify-base] {result}")
        if result.ok:
            report = Report(Status.OK, [ "ok: no violations" ])
        else:
            report = Report(Status.NONE, [ f"none: {len(result.violations)} violations", result.table(max_rows) ])
        report.add(f"checked: {result.checked}")
        report.add(f"sample: {sample}")
        report.add(f"indices: {indices}")
        return report


class CommandFlatten(Command):
    """Flatten an honest table into one stream of basic intervals."""

    name = "flatten"

    def default_config_string() -> str:
        return """
            budget = 64
            fallback_scan = 4096
        """

    def run(
        order=None,
        honest=None,
        budget=DEFAULT_BUDGET,
        fallback_scan=DEFAULT_FALLBACK_SCAN,
        **kwargs,
    ) -> Report:
        ord = load_order(require_input(order, "--order"))
        hs = load_honest(require_input(honest, "--honest"), ord)
        g = honest_flatten(hs, fallback_scan)

        rows = []
        for p in range(budget):
            m, n, s = untriple(p)
            origin_m, origin_n = g.origin(p)
            rows.append((p, f"{m} {n} {s}", ord.format_interval(g(p)), f"{origin_m} {origin_n}"))
        table = tabulate(rows, headers=["p", "m n s", "g(p)", "origin"], tablefmt="plain")
        M = subcover_stage_bound(budget, g.origin, hs, g)
        return Report(Status.OK, [ table, f"stage bound: {M}", f"budget: {budget}" ])
