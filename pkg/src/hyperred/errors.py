"""Versioned error taxonomy.

Every domain failure raises :class:`DomainError` carrying one of the string
codes below.  The codes are part of the public contract: tests and downstream
tooling match on them verbatim, so changing one is a breaking change.
"""

ERROR_TAXONOMY_VERSION = 1

E_NOT_SQUAREFREE = "not squarefree"
E_NOT_SEMISTABLE = "not semistable over base (or flag wrong)"
E_ADD_SAMPLES = "add samples"
E_CLEARING = "clearing power or weight wrong"
E_BAD_PROFILE = "input not a valid curve valuation profile"
E_RAMIFICATION = "mismatched ramification"
E_DIV_ZERO = "division by zero"
E_INFINITE_ROOT = "root at infinity present: apply a Moebius map moving it to a finite point first"
E_ODD_DEGREE = "odd number of roots: use an even-degree model"
E_SINGLETON = "singleton cluster has no depth-based distance"
E_BAD_INPUT = "invalid input"
E_INFEASIBLE_ORDERING = "ordering admits no positive length assignment"
E_INCONSISTENT_LENGTHS = "inconsistent system"
E_SINGULAR_CURVE = "singular curve"


class DomainError(Exception):
    """A domain-level failure with a stable, machine-readable code."""

    def __init__(self, code, detail=""):
        self.code = code
        self.detail = detail
        super().__init__(code if not detail else f"{code}: {detail}")
