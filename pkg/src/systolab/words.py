"""One-vertex polygon surfaces and exact loop-class counting.

The standard genus-g polygon complex has a single vertex, 2g loop edges and
one 4g-gon face glued along the commutator relator.  Based loops are words
in the loop letters, so homotopy classes are group elements and the class
count N(T) is exactly the ball size of the surface group -- computable for
g >= 2 by the small-cancellation kernels and in closed form for the torus,
whose group is Z^2.

The kernels exist twice: a compiled extension and a pure-Python fallback,
selected here at import.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError

try:  # pragma: no cover - which branch runs depends on the build
    from . import _wordkernel as _kernel
except ImportError:  # pragma: no cover
    from . import _wordkernel_py as _kernel

BACKEND = _kernel.BACKEND_NAME

# Words past this many letters make the exact ball enumeration explode.
DEFAULT_WORD_CAP = 8


@dataclass(frozen=True)
class PolygonComplex:
    """One-vertex genus-g polygon surface with a uniform edge length."""

    genus: int
    edge_length: float = 1.0

    def __post_init__(self):
        if int(self.genus) != self.genus or self.genus < 1:
            raise DomainError(f"genus must be an integer >= 1, got {self.genus!r}")
        if not math.isfinite(self.edge_length) or self.edge_length <= 0.0:
            raise DomainError(f"edge length must be > 0, got {self.edge_length}")

    @property
    def n_edges(self) -> int:
        return 2 * self.genus

    @property
    def relator_length(self) -> int:
        return 4 * self.genus

    def scaled(self, factor: float) -> "PolygonComplex":
        return PolygonComplex(self.genus, self.edge_length * factor)


def torus_class_count(steps: int) -> int:
    """Elements of Z^2 with word norm |a| + |b| <= steps (closed form)."""
    if steps < 0:
        return 0
    return 2 * steps * steps + 2 * steps + 1


def max_word_steps(complex_: PolygonComplex, threshold: float) -> int:
    """Loop letters affordable within the length threshold."""
    if threshold < 0.0:
        raise DomainError(f"threshold must be >= 0, got {threshold}")
    # Forgive float dust so integer thresholds hit exact multiples.
    return int(math.floor(threshold / complex_.edge_length + 1e-9))


def count_polygon_classes(
    complex_: PolygonComplex, threshold: float, word_cap: int = DEFAULT_WORD_CAP
) -> int:
    """Number of homotopy classes of based loops of length <= threshold."""
    return polygon_growth_counts(complex_, [threshold], word_cap=word_cap)[0]


def polygon_growth_counts(
    complex_: PolygonComplex, thresholds, word_cap: int = DEFAULT_WORD_CAP
) -> list[int]:
    """Class counts for several thresholds, sharing one ball enumeration."""
    steps = [max_word_steps(complex_, t) for t in thresholds]
    deepest = max(steps, default=0)
    if complex_.genus == 1:
        return [torus_class_count(s) for s in steps]
    if deepest > word_cap:
        raise ResourceLimitError(
            f"threshold needs words of {deepest} letters, over the cap {word_cap}",
            partial=None,
        )
    profile = _kernel.ball_profile(complex_.genus, deepest)
    return [profile[s] for s in steps]


def kernel_functions():
    """Expose the selected kernel (for benchmarks and equivalence tests)."""
    return _kernel
