"""Exception types shared across the package.

The command-line layer maps these onto exit codes: domain errors (bad inputs,
singular positions, parameter sets without the requested feature) exit 2,
numerical failures (refinement divergence, scan anomalies, integration
breakdown) exit 3.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class SingularPointError(DomainError):
    """Position coincides with (or is numerically on top of) a primary."""

    def __init__(self, primary: str, distance: float):
        self.primary = primary
        self.distance = distance
        super().__init__(
            f"position is within {distance:.3e} of the {primary}; "
            "the potential is singular there"
        )


class NoTriangularPointsError(DomainError):
    """The two circles r1, r2 do not intersect off the axis."""


class NoResonanceError(DomainError):
    """No resonance crossing exists in (0, 1/2] for these parameters."""


class NumericalError(RuntimeError):
    """A solver failed to produce a trustworthy result."""


class ConvergenceError(NumericalError):
    """Newton refinement diverged or hit a degenerate Hessian.

    Carries the iteration trace (list of (x, y, residual) triples) so the
    caller can see where the iteration went.
    """

    def __init__(self, message: str, trace=None):
        self.trace = list(trace) if trace is not None else []
        if self.trace:
            tail = "; ".join(
                f"({x:.6g}, {y:.6g}) |grad|={r:.3e}" for x, y, r in self.trace[-3:]
            )
            message = f"{message} [last iterates: {tail}]"
        super().__init__(message)


class ScanError(NumericalError):
    """Root scan produced an inconsistent bracket structure."""


class IntegrationError(NumericalError):
    """Integration produced a non-finite state.

    ``last_state`` and ``last_time`` hold the final accepted sample.
    """

    def __init__(self, message: str, last_state=None, last_time: float = 0.0):
        self.last_state = last_state
        self.last_time = last_time
        super().__init__(f"{message} (last good state at t={last_time:.6g})")
