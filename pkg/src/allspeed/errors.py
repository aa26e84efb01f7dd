"""Exception types signalling numerical failure of a step or bad configuration."""


class ConfigError(ValueError):
    """Invalid run configuration (CLI exit code 2)."""


class NumericalFailure(RuntimeError):
    """Base class for run-aborting numerical errors (CLI exit code 3)."""


class NonPositiveDensity(NumericalFailure):
    pass


class NonPositivePressure(NumericalFailure):
    pass


class NonFiniteState(NumericalFailure):
    pass


class NonPositiveL(NumericalFailure):
    """Compression denominator L = 1 + dt*div(u*,v*) dropped to <= 0."""


class NonPositiveIntermediateDensity(NumericalFailure):
    """Denominator of the relaxation intermediate density dropped to <= 0."""


class DenominatorNonPositive(NumericalFailure):
    """Edge-divergence denominator of the sequential-explicit flux <= 0."""
