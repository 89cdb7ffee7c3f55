from __future__ import annotations

DEFAULT_BUDGET = 10**7


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran past its work cap; the answer is unknown."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what}: work budget of {limit} exceeded")
        self.what = what
        self.limit = limit


class VerificationError(AssertionError):
    """A checked property failed. ``stage`` names where."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class Budget:
    """Counter shared by the exhaustive searches of one command.

    ``limit=None`` means unlimited.
    """

    def __init__(self, limit: int | None = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0
        self.by_task: dict[str, int] = {}

    def tick(self, what: str, n: int = 1) -> None:
        self.used += n
        self.by_task[what] = self.by_task.get(what, 0) + n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(what, self.limit)

    def counters(self) -> dict:
        return {"limit": self.limit, "used": self.used, "by_task": dict(sorted(self.by_task.items()))}


def ensure_budget(budget: Budget | None) -> Budget:
    return Budget() if budget is None else budget
