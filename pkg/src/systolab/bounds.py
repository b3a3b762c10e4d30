"""Closed-form evaluators for the systolic inequality chain.

Every function here is a pure evaluation of a published formula: entropy
upper bounds from area/systole data, Katok's entropy lower bound, lower
bounds for the area of small metric disks, and the genus bounds obtained by
chaining them.  Units are plain floats: lengths in L, areas in L**2,
entropies in 1/L.  Dimensional correctness is enforced behaviorally by the
scale-invariance tests, not by a unit system.

Feasibility constraints are strict inequalities and are checked with exact
comparisons -- boundary values raise ConstraintError by design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConstraintError, DegenerateBoundError, DomainError

# Threshold of the systolic ratio sys^2/Area below which a surface is Loewner.
LOEWNER_BOUND = 2.0 / math.sqrt(3.0)

# Constant of Croke's lower bound for the area of a small metric disk.
CROKE_CONSTANT = (8.0 - math.pi) / 2.0


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class BoundParams:
    """Free constants of the inequality chains.

    alpha, beta: disk-radius fractions of the systole used by the entropy
    upper bound.  delta: height/systole ratio of the conformally deformed
    metric.  eta: radius/injectivity-radius fraction used by the variant
    driven by the injectivity radius.  All dimensionless and >= 0.
    """

    alpha: float = 0.0
    beta: float = 0.0
    delta: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta", "delta", "eta"):
            value = _require_finite(name, getattr(self, name))
            if value < 0.0:
                raise DomainError(f"{name} must be >= 0, got {value}")

    def entropy_feasible(self) -> bool:
        """0 < 5*alpha < beta and beta + 4*alpha < 1/2 (entropy upper bound)."""
        return 0.0 < 5.0 * self.alpha < self.beta and self.beta + 4.0 * self.alpha < 0.5

    def genus_chain_feasible(self) -> bool:
        """2*delta < alpha < beta/5 and beta + 4*alpha < 1/2 (genus chain)."""
        return (
            2.0 * self.delta < self.alpha
            and 5.0 * self.alpha < self.beta
            and self.beta + 4.0 * self.alpha < 0.5
        )

    def inj_variant_feasible(self) -> bool:
        """0 < eta < 1/9 (injectivity-radius variant)."""
        return 0.0 < self.eta < 1.0 / 9.0

    # Aliases matching the CLI formula keys.
    prop22_feasible = entropy_feasible
    thm12_feasible = genus_chain_feasible
    cor24_feasible = inj_variant_feasible


@dataclass(frozen=True)
class SurfaceSummary:
    """Scalar invariants of a closed surface: genus, systole, area, inj radius."""

    genus: int
    systole: float
    area: float
    injectivity_radius: float | None = None

    def __post_init__(self):
        if int(self.genus) != self.genus or self.genus < 0:
            raise DomainError(f"genus must be a nonnegative integer, got {self.genus!r}")
        _require_finite("systole", self.systole)
        _require_finite("area", self.area)
        if self.systole <= 0.0:
            raise DomainError(f"systole must be > 0, got {self.systole}")
        if self.area <= 0.0:
            raise DomainError(f"area must be > 0, got {self.area}")
        if self.injectivity_radius is not None:
            inj = _require_finite("injectivity_radius", self.injectivity_radius)
            # sys >= 2*inj holds on every closed surface.
            if not 0.0 < inj <= self.systole / 2.0:
                raise DomainError(
                    f"injectivity_radius must satisfy 0 < inj <= systole/2, "
                    f"got inj={inj} with systole={self.systole}"
                )


class DiskAreaModel:
    """Strategy giving a lower bound for the area of small metric disks.

    Subclasses implement ``area_lower(R)`` returning a lower bound for the
    area of any metric disk of radius R in the regime the model covers.
    """

    name = "abstract"

    def area_lower(self, radius: float) -> float:
        raise NotImplementedError

    def _check_radius(self, radius: float) -> float:
        radius = _require_finite("radius", radius)
        if radius < 0.0:
            raise DomainError(f"disk radius must be >= 0, got {radius}")
        return radius


class CrokeDisk(DiskAreaModel):
    """Croke's bound for small disks: Area(B(x,R)) >= ((8-pi)/2) R^2."""

    name = "croke"

    def area_lower(self, radius: float) -> float:
        radius = self._check_radius(radius)
        return CROKE_CONSTANT * radius * radius

    def __repr__(self):
        return "CrokeDisk()"


class HeightDisk(DiskAreaModel):
    """Height-function bound: Area(B(x,R)) >= (2R - rho)^2 / 2 for R >= rho/2.

    rho is the height of the metric (an absolute length, not a ratio); after
    a conformal deformation it can be made arbitrarily small.  Radii below
    rho/2 are outside the validity range and raise rather than clamp.
    """

    name = "height"

    def __init__(self, rho: float):
        rho = _require_finite("rho", rho)
        if rho < 0.0:
            raise DomainError(f"height rho must be >= 0, got {rho}")
        self.rho = rho

    def area_lower(self, radius: float) -> float:
        radius = self._check_radius(radius)
        if radius < self.rho / 2.0:
            raise DomainError(
                f"height model is valid only for radius >= rho/2 "
                f"(radius={radius}, rho={self.rho}); refusing to clamp"
            )
        return 0.5 * (2.0 * radius - self.rho) ** 2

    def __repr__(self):
        return f"HeightDisk(rho={self.rho!r})"


class EuclideanDisk(DiskAreaModel):
    """Euclidean comparison bound for nonpositive curvature: Area >= pi R^2."""

    name = "euclidean"

    def area_lower(self, radius: float) -> float:
        radius = self._check_radius(radius)
        return math.pi * radius * radius

    def __repr__(self):
        return "EuclideanDisk()"


@dataclass(frozen=True)
class EntropyBoundResult:
    """An evaluated entropy upper bound: h_upper = prefactor * ln(log_argument)."""

    h_upper: float
    log_argument: float
    prefactor: float


def disk_area_lower(model: DiskAreaModel, radius: float) -> float:
    """Lower bound for the area of a metric disk of the given radius."""
    return model.area_lower(radius)


def katok_lower_bound(surface: SurfaceSummary) -> float:
    """Katok's entropy lower bound sqrt(2*pi*(2g-2)/Area); exactly 0 for genus 1."""
    if surface.genus < 1:
        raise DomainError(f"entropy lower bound needs genus >= 1, got {surface.genus}")
    if surface.genus == 1:
        return 0.0
    return math.sqrt(max(0.0, 2.0 * math.pi * (2.0 * surface.genus - 2.0) / surface.area))


def entropy_upper_bound(
    surface: SurfaceSummary, params: BoundParams, model: DiskAreaModel
) -> EntropyBoundResult:
    """Entropy upper bound from area, systole and a disk-area model.

    h <= (1 / (beta*sys)) * ln( (Area - D((beta-3a)*sys)) / D(a*sys) )
    where D is the model's disk-area lower bound, valid whenever
    0 < 5*alpha < beta and beta + 4*alpha < 1/2.
    """
    if not params.entropy_feasible():
        raise ConstraintError(_entropy_violation(params))
    sys_ = surface.systole
    denom = model.area_lower(params.alpha * sys_)
    if denom == 0.0:
        raise DomainError(
            f"disk-area model {model.name} vanishes at radius alpha*sys = "
            f"{params.alpha * sys_}; bound undefined"
        )
    removed = model.area_lower((params.beta - 3.0 * params.alpha) * sys_)
    log_argument = (surface.area - removed) / denom
    if log_argument <= 1.0:
        raise DegenerateBoundError(
            f"log argument {log_argument} <= 1: the bound degenerates for these inputs"
        )
    prefactor = 1.0 / (params.beta * sys_)
    return EntropyBoundResult(
        h_upper=prefactor * math.log(log_argument),
        log_argument=log_argument,
        prefactor=prefactor,
    )


def _entropy_violation(params: BoundParams) -> str:
    if not 0.0 < params.alpha:
        return f"constraint 0 < alpha violated: alpha={params.alpha}"
    if not 5.0 * params.alpha < params.beta:
        return f"constraint 5*alpha < beta violated: 5*alpha={5.0 * params.alpha}, beta={params.beta}"
    return (
        f"constraint beta + 4*alpha < 1/2 violated: "
        f"beta + 4*alpha = {params.beta + 4.0 * params.alpha}"
    )


def entropy_upper_from_inj(inj: float, area: float, eta: float) -> EntropyBoundResult:
    """Entropy upper bound driven by the injectivity radius, for 0 < eta < 1/9.

    h <= (1/((1-4*eta)*inj)) * ln( (2*Area/inj^2 - (8-pi)*min(1-7*eta, 1/2)^2)
                                   / ((8-pi)*eta^2) )
    """
    if not 0.0 < eta < 1.0 / 9.0:
        raise ConstraintError(f"constraint 0 < eta < 1/9 violated: eta={eta}")
    inj = _require_finite("inj", inj)
    area = _require_finite("area", area)
    if inj <= 0.0:
        raise DomainError(f"injectivity radius must be > 0, got {inj}")
    if area <= 0.0:
        raise DomainError(f"area must be > 0, got {area}")
    clipped = min(1.0 - 7.0 * eta, 0.5)
    numerator = 2.0 * area / (inj * inj) - (8.0 - math.pi) * clipped * clipped
    denominator = (8.0 - math.pi) * eta * eta
    log_argument = numerator / denominator
    if log_argument <= 1.0:
        raise DegenerateBoundError(
            f"log argument {log_argument} <= 1: the bound degenerates for these inputs"
        )
    prefactor = 1.0 / ((1.0 - 4.0 * eta) * inj)
    return EntropyBoundResult(
        h_upper=prefactor * math.log(log_argument),
        log_argument=log_argument,
        prefactor=prefactor,
    )


def genus_bound_general(params: BoundParams) -> float:
    """Upper bound on g-1 for a non-Loewner surface (general metric chain).

    (sqrt(3)/(8*pi)) * ln( (sqrt(3) - (2b-6a-d)^2) / (2a-d)^2 )^2 / b^2,
    valid whenever 2*delta < alpha < beta/5 and beta + 4*alpha < 1/2.
    The caller derives the integer conclusion as g <= floor(bound) + 1.
    """
    if not params.genus_chain_feasible():
        raise ConstraintError(_genus_chain_violation(params))
    a, b, d = params.alpha, params.beta, params.delta
    numerator = math.sqrt(3.0) - (2.0 * b - 6.0 * a - d) ** 2
    if numerator <= 0.0:
        raise DomainError(
            f"log numerator sqrt(3) - (2b-6a-d)^2 = {numerator} is not positive"
        )
    log_term = math.log(numerator / (2.0 * a - d) ** 2)
    return math.sqrt(3.0) / (8.0 * math.pi) * log_term * log_term / (b * b)


def _genus_chain_violation(params: BoundParams) -> str:
    if not 2.0 * params.delta < params.alpha:
        return (
            f"constraint 2*delta < alpha violated: "
            f"2*delta={2.0 * params.delta}, alpha={params.alpha}"
        )
    if not 5.0 * params.alpha < params.beta:
        return (
            f"constraint alpha < beta/5 violated: "
            f"alpha={params.alpha}, beta/5={params.beta / 5.0}"
        )
    return (
        f"constraint beta + 4*alpha < 1/2 violated: "
        f"beta + 4*alpha = {params.beta + 4.0 * params.alpha}"
    )


def genus_bound_half_inj(eta: float) -> float:
    """Upper bound on g-1 for non-Loewner surfaces with inj = sys/2.

    (sqrt(3)/(8*pi)) * ln( (4*sqrt(3) - (8-pi)*min(1-7e,1/2)^2)
                           / ((8-pi)*e^2) )^2 / (1/2 - 2e)^2
    for 0 < eta < 1/9.
    """
    if not 0.0 < eta < 1.0 / 9.0:
        raise ConstraintError(f"constraint 0 < eta < 1/9 violated: eta={eta}")
    clipped = min(1.0 - 7.0 * eta, 0.5)
    numerator = 4.0 * math.sqrt(3.0) - (8.0 - math.pi) * clipped * clipped
    denominator = (8.0 - math.pi) * eta * eta
    log_term = math.log(numerator / denominator)
    return math.sqrt(3.0) / (8.0 * math.pi) * log_term * log_term / (0.5 - 2.0 * eta) ** 2


def nonpositive_center_count(area: float, sys: float) -> float:
    """Real-valued cap (64/pi)*(Area/sys^2) - 9 on the disk-center count.

    The integer cap on the number of disjoint disk centers is its floor.
    """
    sys = _require_finite("sys", sys)
    area = _require_finite("area", area)
    if sys <= 0.0:
        raise DomainError(f"systole must be > 0, got {sys}")
    return 64.0 / math.pi * (area / (sys * sys)) - 9.0


def betti_genus_bound(n_centers: int) -> float:
    """Real bound (N-1)(N-2)/4 on the genus from an N-vertex loop graph."""
    if int(n_centers) != n_centers or n_centers < 2:
        raise DomainError(f"center count must be an integer >= 2, got {n_centers!r}")
    return (n_centers - 1) * (n_centers - 2) / 4.0


def inj_from_sys_nonpositive(sys: float) -> float:
    """Injectivity radius sys/2 of a nonpositively curved closed surface."""
    sys = _require_finite("sys", sys)
    if sys <= 0.0:
        raise DomainError(f"systole must be > 0, got {sys}")
    return sys / 2.0


def loewner_ratio(sys: float, area: float) -> float:
    """Systolic ratio sys^2 / Area."""
    sys = _require_finite("sys", sys)
    area = _require_finite("area", area)
    if sys <= 0.0:
        raise DomainError(f"systole must be > 0, got {sys}")
    if area <= 0.0:
        raise DomainError(f"area must be > 0, got {area}")
    return sys * sys / area


def is_loewner(sys: float, area: float) -> bool:
    """True iff sys^2/Area <= 2/sqrt(3) (inclusive)."""
    return loewner_ratio(sys, area) <= LOEWNER_BOUND


def gromov_ratio_bound(genus: int) -> float:
    """Gromov's large-genus systolic ratio bound 64 / (4*sqrt(g) + 27)."""
    if int(genus) != genus or genus < 1:
        raise DomainError(f"genus must be an integer >= 1, got {genus!r}")
    return 64.0 / (4.0 * math.sqrt(genus) + 27.0)


def genus_cap(bound_on_g_minus_1: float) -> int:
    """Integer conclusion g <= floor(bound) + 1 from a real bound on g-1."""
    if not math.isfinite(bound_on_g_minus_1) or bound_on_g_minus_1 < 0.0:
        raise DomainError(f"bound on g-1 must be finite and >= 0, got {bound_on_g_minus_1}")
    return math.floor(bound_on_g_minus_1) + 1
