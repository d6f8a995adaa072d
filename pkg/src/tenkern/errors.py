"""Exception types raised by the kernel library and the benchmark harness."""


class TenkernError(Exception):
    """Base class for all tenkern errors."""


class DimensionError(TenkernError, ValueError):
    """Operand lengths or shapes are incompatible."""


class ModeError(TenkernError, ValueError):
    """Requested contraction mode is out of range for the tensor."""


class OrderError(TenkernError, ValueError):
    """Tensor order (number of dimensions) unsupported for the operation."""


class SizeCapError(TenkernError, ValueError):
    """A size guard (densify cap, benchmark memory cap) was exceeded."""


class GenerationError(TenkernError, ValueError):
    """A data-generation spec is degenerate or inconsistent."""


class ConfigError(TenkernError, ValueError):
    """A benchmark configuration cannot be run as requested."""


class AggregationError(TenkernError, ValueError):
    """Benchmark records cannot be summarized (e.g. no measured trials)."""


class IntegrityError(TenkernError, ValueError):
    """A raw sparse-result triple violates its canonical-form contract."""
