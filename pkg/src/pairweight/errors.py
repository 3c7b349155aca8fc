"""Exception types shared across the package.

The CLI maps these onto exit codes: ParameterError -> 2, BudgetError -> 3.
NotApplicableError signals that a checker's hypotheses do not hold; callers
must not confuse it with a failed check.
"""


class ParameterError(ValueError):
    """Invalid or inconsistent input parameters.

    ``violations`` lists every violated precondition by name so callers can
    report all problems at once.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class BudgetError(RuntimeError):
    """A computation would exceed its work or memory budget.

    Carries the required amount so callers can rerun with an explicit
    override.
    """

    def __init__(self, message, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"{message} (required {required}, budget {budget})")


class NotApplicableError(Exception):
    """The hypotheses of a closed-form check do not hold for these inputs."""
