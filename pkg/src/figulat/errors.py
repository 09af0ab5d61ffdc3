"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured resource budget."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(f"{message}: needs {required}, budget is {budget}")
        self.required = required
        self.budget = budget


class ExactnessError(ArithmeticError):
    """An internal division that must be exact left a remainder."""
