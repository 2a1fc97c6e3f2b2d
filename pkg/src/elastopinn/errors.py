"""Exception hierarchy shared across the package.

The base classes map onto the CLI exit codes: ConfigError -> 2,
StateMismatchError -> 3, NumericalError -> 4.
"""


class ElastopinnError(Exception):
    """Base class for all package errors."""


class ConfigError(ElastopinnError):
    """Invalid run configuration or schema violation."""


class StateMismatchError(ElastopinnError):
    """Persisted state is incompatible with the requested operation."""


class NumericalError(ElastopinnError):
    """A numerical procedure failed or produced an invalid state."""


# --- tensor / material laws ---------------------------------------------

class NonPositiveModulus(NumericalError):
    """Bulk or shear modulus is not strictly positive."""


class DamageSaturated(NumericalError):
    """Damage variable reached 1: no load-carrying area left."""


class DegenerateStressState(NumericalError):
    """Deviatoric kinematic stress vanishes; flow direction undefined."""


class NonPositiveDenominator(NumericalError):
    """Consistency denominator not positive; rate form invalid here."""


# --- loading programs -----------------------------------------------------

class EmptyProgram(ConfigError):
    """Loading program has no segments."""


class OutOfRange(ElastopinnError):
    """Query time outside the program duration."""


# --- forward integration / datasets --------------------------------------

class InvalidStressState(NumericalError):
    """Yield function exceeded tolerance after an integration step."""


class ControlSolveFailure(NumericalError):
    """Newton solve for stress-held channel strain rates did not converge."""


class StepUnderflow(NumericalError):
    """Adaptive integrator step size shrank below the usable minimum."""


class DegenerateData(NumericalError):
    """All-zero stress or strain history cannot be nondimensionalized."""


class TooFewPoints(ElastopinnError):
    """Not enough samples for the requested finite-difference stencil."""


class ParseError(ElastopinnError):
    """Dataset file is malformed or misses a required column."""


class SchemaVersionMismatch(StateMismatchError):
    """File schema version differs from what this build writes."""


# --- autodiff --------------------------------------------------------------

class DomainError(NumericalError):
    """Primitive evaluated outside its differentiable domain."""


class StaleExpr(ElastopinnError):
    """Expression used after its tape generation was reset."""


class TapeOverflow(ElastopinnError):
    """Recorded node count exceeded the configured tape budget."""


class LengthMismatch(ElastopinnError):
    """Residual and target lengths differ."""


class IncompleteContext(ElastopinnError):
    """Residual context misses a quantity required by the model kind."""


# --- checkpoints / training ------------------------------------------------

class SpecMismatch(StateMismatchError):
    """Checkpoint network layout differs from the requested one."""


class CorruptCheckpoint(StateMismatchError):
    """Checkpoint payload cannot be decoded."""


class NonFiniteGradient(NumericalError):
    """NaN or inf gradient encountered during training."""


class Diverged(NumericalError):
    """Total loss grew far beyond its initial value."""


class MissingRun(ElastopinnError):
    """Report requested over a directory with no completed runs."""
