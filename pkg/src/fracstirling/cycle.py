"""Four-corner Stirling cycle built from equilibrium states.

The cycle runs A -> B -> C -> D -> A: two isothermal branches (A-B at the
hot bath, C-D at the cold bath) along which the well width and the kinetic
exponent vary, and two isochoric branches (B-C, D-A) with frozen spectrum
exchanging heat with a regenerator.  Stage heats are state-function
differences of the corner equilibria; no path integration is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spectrum import WellSpec
from .thermo import DEFAULT_REL_TOL, EnsembleSummary, ThermalState, summarize

REGIME_ENGINE = "engine"
REGIME_NON_ENGINE = "non_engine"

_QH_ZERO = 1e-15


class DegenerateCycleError(RuntimeError):
    """Hot-bath heat is zero while the cycle still produces net work."""


@dataclass(frozen=True)
class CycleParams:
    """Geometry, exponents and bath temperatures of one Stirling cycle.

    Corners A and D share `width_a` and `alpha_2`; corners B and C share
    `width_b` and `alpha_1`.  The forward convention alpha_1 < alpha_2 is
    not enforced here; sweeps legitimately cover the whole square.
    """

    width_a: float
    width_b: float
    alpha_1: float
    alpha_2: float
    t_hot: float
    t_cold: float
    mass: float = 1.0

    def __post_init__(self) -> None:
        if not self.t_hot > self.t_cold > 0:
            raise ValueError(
                f"need t_hot > t_cold > 0, got t_hot={self.t_hot}, "
                f"t_cold={self.t_cold}"
            )
        for name in ("width_a", "width_b"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("alpha_1", "alpha_2"):
            if not 1.0 < getattr(self, name) <= 2.0:
                raise ValueError(
                    f"{name} must lie in (1, 2], got {getattr(self, name)}"
                )
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")


@dataclass(frozen=True)
class CycleReport:
    """Stage heats, work, regenerator balance and efficiency of one cycle.

    Sign convention: heats are positive when absorbed by the particle.
    `q_r` is the net regenerator exchange over the two isochores; `q_h`
    charges the hot bath with the regenerator deficit only when q_r > 0.
    `efficiency` is reported in every regime and is meaningful as an engine
    efficiency only when `regime` is "engine" (net work output).
    """

    q_ab: float
    q_bc: float
    q_cd: float
    q_da: float
    work: float
    q_r: float
    q_h: float
    efficiency: float
    carnot: float
    regime: str
    corner_entropies: tuple[float, float, float, float]
    corner_energies: tuple[float, float, float, float]


def corners(params: CycleParams) -> tuple[ThermalState, ThermalState, ThermalState, ThermalState]:
    """The four labelled equilibrium corners (A, B, C, D) of the cycle."""
    well_ad = WellSpec(params.width_a, params.alpha_2, params.mass)
    well_bc = WellSpec(params.width_b, params.alpha_1, params.mass)
    return (
        ThermalState(well_ad, params.t_hot),
        ThermalState(well_bc, params.t_hot),
        ThermalState(well_bc, params.t_cold),
        ThermalState(well_ad, params.t_cold),
    )


def evaluate(
    params: CycleParams,
    rel_tol: float = DEFAULT_REL_TOL,
    levels: int | None = None,
) -> CycleReport:
    """Evaluate all cycle quantities at the given parameters.

    A single `rel_tol` (and optional fixed level count) applies to all four
    corner ensembles so that q_r, a small difference of large numbers near
    the perfect-regeneration locus, carries a uniform error budget.
    """
    a, b, c, d = corners(params)
    sa: EnsembleSummary = summarize(a, rel_tol, levels)
    sb = summarize(b, rel_tol, levels)
    sc = summarize(c, rel_tol, levels)
    sd = summarize(d, rel_tol, levels)

    q_ab = params.t_hot * (sb.entropy - sa.entropy)
    q_bc = sc.internal_energy - sb.internal_energy
    q_cd = params.t_cold * (sd.entropy - sc.entropy)
    q_da = sa.internal_energy - sd.internal_energy

    work = q_ab + q_bc + q_cd + q_da
    q_r = q_bc + q_da
    q_h = q_ab + q_r if q_r > 0 else q_ab  # Heaviside gate with H(0) = 0

    if abs(q_h) < _QH_ZERO:
        # distinguish a genuinely workless cycle from a pathological one;
        # work below rounding noise at the corner-energy scale counts as zero
        scale = max(
            abs(v) for s in (sa, sb, sc, sd)
            for v in (s.internal_energy, params.t_hot * s.entropy)
        )
        if abs(work) > 1e-12 * max(scale, 1.0):
            raise DegenerateCycleError(
                f"hot-bath heat vanishes (q_h={q_h}) while work={work}; "
                f"efficiency is undefined for {params}"
            )
        effic = 0.0
    else:
        effic = work / q_h

    return CycleReport(
        q_ab=q_ab,
        q_bc=q_bc,
        q_cd=q_cd,
        q_da=q_da,
        work=work,
        q_r=q_r,
        q_h=q_h,
        efficiency=effic,
        carnot=carnot_efficiency(params),
        regime=REGIME_ENGINE if work > 0 else REGIME_NON_ENGINE,
        corner_entropies=(sa.entropy, sb.entropy, sc.entropy, sd.entropy),
        corner_energies=(
            sa.internal_energy,
            sb.internal_energy,
            sc.internal_energy,
            sd.internal_energy,
        ),
    )


def carnot_efficiency(params: CycleParams) -> float:
    """Reversible upper reference 1 - t_cold/t_hot for the bath pair."""
    return 1.0 - params.t_cold / params.t_hot
