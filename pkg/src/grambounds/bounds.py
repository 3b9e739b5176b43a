"""Evaluators for every implemented inequality: each returns the bounded
quantity (lhs) together with its certified ceiling (value), so downstream
verification reports exact margins without recomputation.

Three left-hand sides appear:

    combination_norm_sq   ‖Σ α_i z_i‖²
    weighted_inner_sum_sq |Σ c_i (x, y_i)|²
    bessel_sum            Σ |(x, y_i)|²

and each bound family ceilings one of them using coefficient p-norms and
Gram-entry q-norms with conjugate (p, q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .core import Vector, VectorFamily, inner_each, norm
from .errors import DomainError, ShapeError
from .norms import (
    _normalize_exponent,
    conjugate_exponent,
    gram_entry_qnorm,
    max_row_abs_sum,
    power_mean_exponent,
    seq_pnorm,
)

__all__ = [
    "BoundId",
    "BoundResult",
    "ChainBounds",
    "PowerMeanGap",
    "ORTHONORMAL_TOL",
    "combination_norm_sq",
    "weighted_inner_sum_sq",
    "bessel_sum",
    "span_bound",
    "combo_bound",
    "refinement_chain",
    "bessel_sum_bound",
    "orthonormal_bessel_bound",
    "frobenius_bound",
    "power_mean_bound",
    "bombieri_bound",
    "power_mean_gap",
]

#: Max-entry deviation from the identity below which a family counts as
#: orthonormal for the specialized Bessel-sum bound.
ORTHONORMAL_TOL = 1e-10


class BoundId(str, Enum):
    """Stable identifiers for the bound families, used in reports and CSV output."""

    SPAN_GRAM = "span_gram"
    SPAN_NORMS = "span_norms"
    COMBO_GRAM = "combo_gram"
    COMBO_NORMS = "combo_norms"
    REFINEMENT_CHAIN = "cor22_chain"
    WEIGHTED_BESSEL = "thm27"
    FROBENIUS = "cor28"
    POWER_MEAN = "eq211"
    BOMBIERI = "bombieri"
    ORTHONORMAL_BESSEL = "orthonormal_27a"

    def __str__(self) -> str:  # CSV-friendly
        return self.value


@dataclass(frozen=True)
class BoundResult:
    """One evaluated inequality: lhs is the bounded quantity, value its ceiling."""

    bound_id: BoundId
    lhs: float
    value: float
    p: Optional[float] = None
    flavor: Optional[str] = None

    @property
    def rhs(self) -> float:
        return self.value

    @property
    def margin(self) -> float:
        return self.value - self.lhs

    def holds(self, rel_tol: float = 1e-10, abs_tol: float = 1e-12) -> bool:
        return self.lhs <= self.value * (1.0 + rel_tol) + abs_tol


class ChainBounds(NamedTuple):
    """The two ceilings of the Frobenius refinement chain: lhs ≤ middle ≤ outer."""

    middle: float
    outer: float


class PowerMeanGap(NamedTuple):
    """Both sides of the power-mean comparison (Σv^p)^(2/p) ≤ n^(2/p-1) Σv²."""

    lhs: float
    rhs: float


def _coeffs(c, n: int) -> np.ndarray:
    """Coerce a coefficient sequence to complex128 of length n (n may be 0)."""
    if isinstance(c, Vector):
        arr = c.coords
    else:
        arr = np.asarray(c)
    if arr.ndim != 1:
        raise ShapeError(f"coefficients must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.number):
        raise DomainError(f"coefficients must be numeric, got dtype {arr.dtype}")
    if arr.shape[0] != n:
        raise ShapeError(f"got {arr.shape[0]} coefficients for a family of size {n}")
    out = arr.astype(np.complex128, copy=True)
    if out.size and (not np.all(np.isfinite(out.real)) or not np.all(np.isfinite(out.imag))):
        raise DomainError("coefficients contain non-finite entries")
    return out


# ---------------------------------------------------------------------------
# Left-hand sides


def combination_norm_sq(alphas, family: VectorFamily) -> float:
    """‖Σ_i α_i z_i‖² — squared norm of a coefficient combination."""
    a = _coeffs(alphas, family.size)
    if family.size == 0:
        return 0.0
    w = a @ family.vectors
    return float(w.real @ w.real) + float(w.imag @ w.imag)


def weighted_inner_sum_sq(x, family: VectorFamily, c) -> float:
    """|Σ_i c_i (x, y_i)|² — squared modulus of a weighted inner-product sum."""
    cc = _coeffs(c, family.size)
    t = inner_each(x, family)
    s = complex(cc @ t) if family.size else 0j
    return s.real * s.real + s.imag * s.imag


def bessel_sum(x, family: VectorFamily) -> float:
    """Σ_i |(x, y_i)|² — the quantity every Bessel-type bound ceilings."""
    t = inner_each(x, family)
    return float(t.real @ t.real) + float(t.imag @ t.imag)


# ---------------------------------------------------------------------------
# Bounds on ‖Σ α_i z_i‖² and |Σ c_i (x, y_i)|²


def span_bound(alphas, family: VectorFamily, p, flavor: str = "gram") -> BoundResult:
    """Ceiling for ‖Σ α_i z_i‖²: seq_pnorm(α, p)² times a family factor.

    flavor="gram" uses the entrywise q-norm of the Gram matrix;
    flavor="norms" uses seq_pnorm of the member norms, squared.  The gram
    flavor is never larger (entrywise |g_ij| ≤ ‖z_i‖‖z_j‖).
    """
    if flavor not in ("gram", "norms"):
        raise ValueError(f"flavor must be 'gram' or 'norms', got {flavor!r}")
    a = _coeffs(alphas, family.size)
    lhs = combination_norm_sq(a, family)
    pf = _normalize_exponent(p)
    q = conjugate_exponent(pf)
    coef = seq_pnorm(a, pf)
    if flavor == "gram":
        fam_factor = gram_entry_qnorm(family.gram(), q)
        bound_id = BoundId.SPAN_GRAM
    else:
        member_factor = seq_pnorm(family.member_norms(), q)
        fam_factor = member_factor * member_factor
        bound_id = BoundId.SPAN_NORMS
    value = (coef * coef) * fam_factor
    return BoundResult(bound_id, lhs, value, p=pf, flavor=flavor)


def combo_bound(x, family: VectorFamily, c, p, flavor: str = "gram") -> BoundResult:
    """Ceiling for |Σ c_i (x, y_i)|²: ‖x‖² times the span ceiling at ᾱ = c̄.

    The value is literally norm(x)² * span_bound(conj(c), ...).value — the
    same arithmetic path — so the composition identity holds bitwise.
    """
    cc = _coeffs(c, family.size)
    lhs = weighted_inner_sum_sq(x, family, cc)
    sb = span_bound(np.conj(cc), family, p, flavor)
    nx = norm(x)
    value = (nx * nx) * sb.value
    bound_id = BoundId.COMBO_GRAM if flavor == "gram" else BoundId.COMBO_NORMS
    return BoundResult(bound_id, lhs, value, p=sb.p, flavor=flavor)


def refinement_chain(alphas, family: VectorFamily) -> ChainBounds:
    """Two nested ceilings for ‖Σ α_i z_i‖²: the Frobenius middle term
    Σ|α_i|² (Σ|g_ij|²)^(1/2) and the classical outer term Σ|α_i|² Σ‖z_i‖²."""
    a = _coeffs(alphas, family.size)
    asq = float(a.real @ a.real) + float(a.imag @ a.imag)
    middle = asq * gram_entry_qnorm(family.gram(), 2.0)
    v = family.vectors
    norms_sq_total = float((v.real * v.real).sum() + (v.imag * v.imag).sum())
    outer = asq * norms_sq_total
    return ChainBounds(middle, outer)


# ---------------------------------------------------------------------------
# Bounds on Σ |(x, y_i)|²


def bessel_sum_bound(x, family: VectorFamily, p) -> BoundResult:
    """Ceiling ‖x‖ · seq_pnorm(t, p) · gram_entry_qnorm(G, q)^(1/2) with
    t_i = |(x, y_i)| — the square root of the combo bound at c_i = conj(x, y_i)."""
    lhs = bessel_sum(x, family)
    pf = _normalize_exponent(p)
    q = conjugate_exponent(pf)
    t = np.abs(inner_each(x, family))
    value = norm(x) * seq_pnorm(t, pf) * math.sqrt(gram_entry_qnorm(family.gram(), q))
    return BoundResult(BoundId.WEIGHTED_BESSEL, lhs, value, p=pf)


def orthonormal_bessel_bound(x, family: VectorFamily, p, tol: float = ORTHONORMAL_TOL) -> BoundResult:
    """The bessel_sum_bound specialized to orthonormal families, where the
    Gram factor collapses to n^(1/(2q)) (read as 1 when q = ∞).

    Raises NotOrthonormalError when the family's Gram matrix is farther than
    ``tol`` from the identity in max-entry norm.
    """
    family.require_orthonormal(tol)
    lhs = bessel_sum(x, family)
    pf = _normalize_exponent(p)
    q = conjugate_exponent(pf)
    expo = 0.0 if math.isinf(q) else 1.0 / (2.0 * q)
    t = np.abs(inner_each(x, family))
    value = norm(x) * float(family.size) ** expo * seq_pnorm(t, pf)
    return BoundResult(BoundId.ORTHONORMAL_BESSEL, lhs, value, p=pf)


def _scaled_gram_qnorm(x, family: VectorFamily, scale: float, q: float) -> float:
    # Shared arithmetic path: the p=2 power-mean bound must reproduce the
    # Frobenius bound bitwise, so both are this exact expression.
    nx = norm(x)
    return scale * (nx * nx) * gram_entry_qnorm(family.gram(), q)


def frobenius_bound(x, family: VectorFamily) -> BoundResult:
    """Ceiling ‖x‖² (Σ|g_ij|²)^(1/2) for the Bessel sum."""
    lhs = bessel_sum(x, family)
    value = _scaled_gram_qnorm(x, family, 1.0, 2.0)
    return BoundResult(BoundId.FROBENIUS, lhs, value)


def power_mean_bound(x, family: VectorFamily, p) -> BoundResult:
    """Ceiling n^(2/p-1) ‖x‖² (Σ|g_ij|^q)^(1/q) for the Bessel sum, p ∈ (1, 2].

    At p = 2 the count factor is n^0 = 1 and q = 2, so this reproduces
    frobenius_bound exactly.  p outside (1, 2] raises ExponentRangeError:
    the power-mean step behind this ceiling needs 1 < p ≤ 2, and we do not
    extend it by limits.
    """
    lhs = bessel_sum(x, family)
    pf = power_mean_exponent(p)
    q = conjugate_exponent(pf)
    scale = float(family.size) ** (2.0 / pf - 1.0)
    value = _scaled_gram_qnorm(x, family, scale, q)
    return BoundResult(BoundId.POWER_MEAN, lhs, value, p=pf)


def bombieri_bound(x, family: VectorFamily) -> BoundResult:
    """The classical ceiling ‖x‖² max_i Σ_j |g_ij|; equals ‖x‖² itself on
    orthonormal families, recovering the plain Bessel inequality."""
    lhs = bessel_sum(x, family)
    nx = norm(x)
    value = (nx * nx) * max_row_abs_sum(family.gram())
    return BoundResult(BoundId.BOMBIERI, lhs, value)


def power_mean_gap(values, p) -> PowerMeanGap:
    """Evaluate (Σv^p)^(2/p) against n^(2/p-1) Σv² for nonnegative v, p ∈ (1, 2]."""
    pf = power_mean_exponent(p)
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ShapeError(f"values must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.number):
        raise DomainError(f"values must be numeric, got dtype {arr.dtype}")
    if np.issubdtype(arr.dtype, np.complexfloating):
        raise DomainError("values must be real and nonnegative")
    v = arr.astype(np.float64, copy=False)
    if v.size == 0:
        return PowerMeanGap(0.0, 0.0)
    if not np.all(np.isfinite(v)):
        raise DomainError("values contain non-finite entries")
    if float(v.min()) < 0.0:
        raise DomainError(f"values must be nonnegative, got {float(v.min())}")
    n = v.size
    m = float(v.max())
    if m == 0.0:
        lhs = 0.0
    else:
        s = float(((v / m) ** pf).sum())
        lhs = (m * m) * s ** (2.0 / pf)
    rhs = float(n) ** (2.0 / pf - 1.0) * float(v @ v)
    return PowerMeanGap(lhs, rhs)
