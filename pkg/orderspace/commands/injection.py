"""
Verb deciding the range of an injection from a finite-basic cover.
"""
from orderspace.commands import Command, Report, Status
from orderspace.space.injection import canonical_cover, get_injection, range_decode
from orderspace.util import DEFAULT_BUDGET, DEFAULT_SAMPLE
from orderspace.util.io import load_index_stream


class CommandInjectionDemo(Command):
    """Decode `n in range(f)` for n < sample. The cover is an index stream
    file, or the canonical cover when none is given."""

    name = "injection-demo"

    def default_config_string() -> str:
        return """
            injection = "double"
            sample = 16
            budget = 64
        """

    def run(
        injection="double",
        cover=None,
        sample=DEFAULT_SAMPLE,
        budget=DEFAULT_BUDGET,
        **kwargs,
    ) -> Report:
        inj = get_injection(injection)
        if cover is not None:
            stream = load_index_stream(cover)
            indices = stream.__getitem__
            budget = min(budget, len(stream))
        else:
            indices = canonical_cover(inj)

        report = Report(Status.OK)
        for n in range(sample):
            report.add(f"{n}: {range_decode(inj, indices, n, budget)!r}")
        report.add(f"injection: {inj.name}")
        report.add(f"budget: {budget}")
        return report
