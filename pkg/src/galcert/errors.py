"""Shared exception types.

Input problems raise plain ValueError.  BudgetExceeded marks the other
failure mode: the question was well posed but the configured bound or
search budget ran out before it was settled.  The CLI maps ValueError
to exit code 1 and BudgetExceeded to exit code 2.
"""


class BudgetExceeded(Exception):
    """A bound or budget ran out; the answer is unknown, not wrong."""

    def __init__(self, what: str, needed, limit):
        self.what = what
        self.needed = needed
        self.limit = limit
        super().__init__(f"{what}: needs {needed}, limit is {limit}")
