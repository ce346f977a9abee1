"""Exception hierarchy shared by all workbench modules.

The CLI maps these onto its exit-code table: input/config problems exit 2,
gate failures exit 1, anything unexpected exits 3.
"""


class WorkbenchError(Exception):
    """Base class for every error raised by this package."""


class InputError(WorkbenchError):
    """Invalid input data, paths, or configuration supplied by the caller."""


class ParameterError(InputError):
    """A model or analysis parameter is outside its valid range."""


class DomainError(InputError):
    """A value lies outside the mathematical domain of an operation."""


class UnsupportedDirectionError(DomainError):
    """Cost/target evaluation was asked to model a quality decline."""


class EmptyDistributionError(InputError):
    """A benchmark filter matched no entries; percentiles are undefined."""


class StoreVersionError(InputError):
    """A persisted file carries a schema version this build cannot read."""
