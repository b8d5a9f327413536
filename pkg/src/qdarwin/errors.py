"""Exception types shared across the package."""


class PhysicalityError(RuntimeError):
    """A covariance matrix violates the uncertainty bound.

    Raised when a symplectic eigenvalue falls below 1 by more than the
    round-off clamp window.  This always indicates a bug (bad propagator,
    bad discretization), never admissible noise.
    """


class ModelInstabilityError(RuntimeError):
    """The quadratic Hamiltonian is not positive definite."""


class IntegrationError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class InternalConsistencyError(RuntimeError):
    """A quantity reached a value that is impossible for a valid state."""
