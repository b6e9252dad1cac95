"""Exception hierarchy.

``AoaError`` subclasses split into two families: input problems (bad tables,
invalid graphs) and ``InvariantViolation``, which means the library produced
something it should not have.  The CLI maps the first family to exit code 1
and the second to exit code 2.
"""


class AoaError(Exception):
    """Base class for every error raised by aoaforge."""


class InputError(AoaError, ValueError):
    """The user-supplied table or graph is unusable."""


class ScheduleError(InputError):
    """A schedule table could not be parsed or is inconsistent.

    ``line`` is the 1-based line number in the source text (``None`` when the
    table was built in memory) and ``code`` the activity the problem concerns.
    """

    def __init__(self, message, line=None, code=None):
        self.line = line
        self.code = code
        where = []
        if line is not None:
            where.append(f"line {line}")
        if code is not None:
            where.append(f"code {code!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class GraphValidationError(InputError):
    """Raised by :func:`aoaforge.graph.require_valid`; carries the report."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


class CycleError(GraphValidationError):
    pass


class UnknownNodeError(InputError, KeyError):
    def __init__(self, code):
        self.code = code
        super().__init__(f"unknown activity {code!r}")

    def __str__(self):
        return self.args[0]


class NotALineGraphError(InputError):
    """A Z-free graph was required; ``witness`` is one offending Z."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph contains a Z configuration: {witness}")


class InvariantViolation(AoaError, AssertionError):
    """Internal consistency check failed (e.g. the equivalence oracle)."""
