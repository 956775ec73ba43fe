"""Problem parameters and the constants derived from (lambda, Lambda, N, p).

Everything downstream (operator inversion, phase-plane transform, weighted
energies) is driven by the dimension-like number

    Ntilde = (lambda/Lambda)*(N-1) + 1    for the maximal operator,
    Ntilde = (Lambda/lambda)*(N-1) + 1    for the minimal operator,

and by the exponent constants

    lambda2 = 2/(p-1),
    lambda1 = -(p*(Ntilde-2) - Ntilde)/(p-1) = lambda2 - (Ntilde - 2),
    gamma   = 2*(p+1)/(p-1) - N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "OpSign",
    "Params",
    "ExponentConstants",
    "DegenerateBracketError",
    "dimension_like",
    "laplacian_critical",
    "exponent_bracket",
    "exponent_constants",
]

# lambda == Lambda is detected with this relative tolerance; past it the
# strict exponent brackets collapse and the solver switches to analytic mode.
LAPLACIAN_RTOL = 1e-12


class OpSign(Enum):
    """Selects the maximal (PLUS) or minimal (MINUS) extremal operator."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class Params:
    """Ellipticity pair, spatial dimension and operator sign.

    Requires 0 < lam <= Lam, integer dim >= 3 and a dimension-like number
    strictly above 2 (the standing assumption of the whole radial theory).
    """

    lam: float
    Lam: float
    dim: int
    op: OpSign

    def __post_init__(self):
        if not (self.lam > 0 and self.Lam > 0):
            raise ValueError("ellipticity constants must be positive")
        if self.lam > self.Lam:
            raise ValueError(f"need lam <= Lam, got {self.lam} > {self.Lam}")
        if int(self.dim) != self.dim or self.dim < 3:
            raise ValueError(f"dim must be an integer >= 3, got {self.dim}")
        if not isinstance(self.op, OpSign):
            raise ValueError(f"op must be an OpSign, got {self.op!r}")
        nt = _dimension_like_raw(self.lam, self.Lam, self.dim, self.op)
        if nt <= 2.0:
            raise ValueError(
                f"dimension-like number {nt} <= 2 is outside the supported regime"
            )

    @property
    def n_tilde(self) -> float:
        return _dimension_like_raw(self.lam, self.Lam, self.dim, self.op)

    @property
    def is_laplacian(self) -> bool:
        return (self.Lam - self.lam) <= LAPLACIAN_RTOL * self.Lam

    @property
    def ell_inner(self) -> float:
        """Divisor of the nonlinearity in the concave (near-origin) regime."""
        return self.lam if self.op is OpSign.PLUS else self.Lam

    @property
    def ell_outer(self) -> float:
        """Divisor of the nonlinearity in the convex (far-field) regime."""
        return self.Lam if self.op is OpSign.PLUS else self.lam

    def with_op(self, op: OpSign) -> "Params":
        return Params(self.lam, self.Lam, self.dim, op)

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "Lambda": self.Lam,
            "dim": self.dim,
            "op": self.op.value,
        }


def _dimension_like_raw(lam: float, Lam: float, dim: int, op: OpSign) -> float:
    ratio = lam / Lam if op is OpSign.PLUS else Lam / lam
    return ratio * (dim - 1) + 1.0


def dimension_like(params: Params) -> float:
    """Dimension-like number governing the convex regime of radial solutions."""
    return params.n_tilde


def laplacian_critical(dim: int) -> float:
    """Critical power (N+2)/(N-2) of the Laplacian in dimension N."""
    return (dim + 2.0) / (dim - 2.0)


class DegenerateBracketError(ValueError):
    """Raised when lam == Lam: the strict bracket collapses to an exact value."""

    def __init__(self, p_star: float):
        self.p_star = p_star
        super().__init__(
            f"degenerate ellipticity: critical exponent is exactly {p_star}"
        )


def exponent_bracket(params: Params) -> tuple[float, float]:
    """Open interval guaranteed to contain the critical exponent.

    For the maximal operator the bracket is
    (max{Nt/(Nt-2), (N+2)/(N-2)}, (Nt+2)/(Nt-2)); for the minimal one it is
    ((Nt+2)/(Nt-2), (N+2)/(N-2)). Requires lam < Lam strictly; at equality a
    DegenerateBracketError carrying the exact exponent is raised.
    """
    if params.is_laplacian:
        raise DegenerateBracketError(laplacian_critical(params.dim))
    nt = params.n_tilde
    serrin = nt / (nt - 2.0)
    sobolev = laplacian_critical(params.dim)
    nt_sobolev = (nt + 2.0) / (nt - 2.0)
    if params.op is OpSign.PLUS:
        lo, hi = max(serrin, sobolev), nt_sobolev
    else:
        lo, hi = nt_sobolev, sobolev
    if not lo < hi:
        raise ValueError(f"empty exponent bracket ({lo}, {hi}) for {params}")
    return lo, hi


@dataclass(frozen=True)
class ExponentConstants:
    """Exponent-derived constants of the far-field autonomous system.

    Satisfies lambda2 - lambda1 = Ntilde - 2 exactly and lambda1 < 0
    whenever p > Ntilde/(Ntilde-2).
    """

    p: float
    lambda1: float
    lambda2: float
    gamma: float

    @property
    def spectral_gap(self) -> float:
        return self.lambda2 - self.lambda1


def exponent_constants(params: Params, p: float) -> ExponentConstants:
    """Constants (lambda1, lambda2, gamma) for exponent p > 1."""
    if p <= 1.0:
        raise ValueError(f"exponent must exceed 1, got {p}")
    nt = params.n_tilde
    lambda2 = 2.0 / (p - 1.0)
    lambda1 = -(p * (nt - 2.0) - nt) / (p - 1.0)
    gamma = 2.0 * (p + 1.0) / (p - 1.0) - params.dim
    return ExponentConstants(p=p, lambda1=lambda1, lambda2=lambda2, gamma=gamma)


def unit_sphere_area(dim: int) -> float:
    """Surface measure of the unit sphere in R^N."""
    return 2.0 * math.pi ** (dim / 2.0) / math.gamma(dim / 2.0)
