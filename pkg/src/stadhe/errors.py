"""Exception types shared across the package."""


class StadheError(Exception):
    """Base class for all package-specific errors."""


class NonScalarSquare(StadheError):
    """exp closed form requested for an element whose square is not a scalar."""


class NotEven(StadheError):
    """An even multivector was required but odd-grade coefficients are present."""


class SingularSpinor(StadheError):
    """phi*reverse(phi) has magnitude below rho_min; inversion/polar split undefined."""


class BoundaryPoint(StadheError):
    """Lattice derivative requested inside the excluded boundary margin."""


class CflViolation(StadheError):
    """Time step exceeds the spatial step of the lattice evolver."""


class NonEvenInitial(StadheError):
    """Evolver initial data contains odd-grade coefficients."""


class NotASolution(StadheError):
    """A balance law was evaluated at a point where the field equation residual
    exceeds the gating threshold."""


class NotPureGauge(StadheError):
    """The Bohm-Aharonov check requires a potential with vanishing field strength."""


class DegenerateDenominator(StadheError):
    """The classical spinor normalizer has a non-positive denominator."""


class NonzeroBeta(StadheError):
    """An operation restricted to vanishing duality angle hit |beta| above tolerance."""


class BetaDomain(StadheError):
    """The literal log-angle term is undefined (beta <= 0 with nonvanishing gradient)."""


class ConfigError(StadheError):
    """Scenario configuration is malformed; message names the offending key."""
