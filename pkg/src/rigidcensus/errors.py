"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed input file (point set, configuration tuple, or graph)."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured tuple budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} tuples but the budget is {budget}; "
            f"rerun with a budget of at least {required}"
        )
