"""Exception types shared across the toolkit."""


class PadekitError(Exception):
    """Base class for all toolkit errors."""


class NonFiniteInputError(PadekitError):
    """A NaN or Inf reached a public operation."""


class CenterMismatchError(PadekitError):
    """Polynomial arithmetic on operands with different centers."""


class InsufficientOrderError(PadekitError):
    """A coefficient beyond the truncation order was demanded."""

    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"series order {available} is insufficient: order {required} required"
        )


class NearPoleError(PadekitError):
    """Denominator vanishes (within tolerance) at the expansion center."""


class NotInExistenceClassError(PadekitError):
    """Hankel determinant below tolerance: the [p/q] approximant does not exist."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"[{report.p}/{report.q}] not in existence class: "
            f"|det|={abs(report.det):.3e}, scale={report.scale:.3e}"
        )


class SingularSystemError(PadekitError):
    """Denominator linear system is singular under the tolerance policy."""

    def __init__(self, p: int, q: int, det: complex, scale: float):
        self.p, self.q, self.det, self.scale = p, q, det, scale
        super().__init__(
            f"[{p}/{q}] denominator system singular: |det|={abs(det):.3e}, scale={scale:.3e}"
        )


class EmptyRegionError(PadekitError):
    """A sampled compact set with no points was supplied."""


class RegionSpecError(PadekitError):
    """Malformed region generator description."""


class RegionsOverlapError(PadekitError):
    """Regions required to be disjoint are not (within the margin)."""


class BudgetUnreachableError(PadekitError):
    """Degree escalation hit max_degree before reaching the error budget."""

    def __init__(self, best_error: float, at_degree: int):
        self.best_error = best_error
        self.at_degree = at_degree
        super().__init__(
            f"fit budget unreachable: best error {best_error:.3e} at degree {at_degree}"
        )


class FamilyExhaustedError(PadekitError):
    """No index in the family witness has p beyond the required degree."""

    def __init__(self, min_p_exclusive: int):
        self.min_p_exclusive = min_p_exclusive
        super().__init__(f"family witness has no index with p > {min_p_exclusive}")


class CertificationFailedError(PadekitError):
    """A universality stage missed its thresholds; carries the full certificate."""

    def __init__(self, certificate, message: str = ""):
        self.certificate = certificate
        super().__init__(message or "stage certification failed")


class ScheduleError(PadekitError):
    """Malformed demand schedule (empty, bad epsilons, ...)."""


class InputError(PadekitError):
    """Bad CLI input: unreadable file, malformed JSON, inconsistent flags."""
