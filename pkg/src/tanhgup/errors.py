"""Exception types raised across the package."""


class InconsistentAlgebra(ValueError):
    """Deformation parameters admit no state obeying the algebra's own uncertainty relation."""


class NoRealWindow(ValueError):
    """The sharp momentum window is empty (negative discriminant)."""


class ChainTerminated(ValueError):
    """A ladder step was requested from parameters with eta <= 0."""


class ConvergenceFailure(RuntimeError):
    """The tridiagonal eigensolver did not converge."""
