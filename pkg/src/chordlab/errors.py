"""Shared exception types."""


class InvariantViolation(RuntimeError):
    """A step whose success is guaranteed by the verified statements
    failed; names the step so traces stay readable."""

    def __init__(self, step: str, detail: str = ""):
        self.step = step
        super().__init__(f"{step}: {detail}" if detail else step)
