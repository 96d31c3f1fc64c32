"""Shared exception types."""


class PipelineError(Exception):
    """Base class for expected pipeline failures.

    The CLI maps these to exit code 1 with a one-line diagnostic on stderr.
    """
