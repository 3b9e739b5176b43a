"""Hölder exponents and the scalar/matrix norm factors on bound right-hand sides.

The three branch families used throughout the package (max / Hölder / sum)
are a single parametric family here: an exponent p ∈ [1, ∞] selects the
branch, with p = ∞ giving the max, p = 1 the plain sum, and everything in
between the genuine Hölder case.  That keeps the branch logic in one place
and makes the limit behavior testable instead of assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GramMatrix, Vector
from .errors import DomainError, ExponentError, ExponentRangeError, ShapeError

__all__ = [
    "SNAP_TOL",
    "HolderExponent",
    "conjugate_exponent",
    "seq_pnorm",
    "gram_entry_qnorm",
    "max_row_abs_sum",
    "power_mean_exponent",
]

#: Exponents this close to 1 are treated as exactly 1.  The conjugate
#: q = p/(p-1) explodes as p -> 1, so a p that differs from 1 only by
#: representation noise would otherwise select an astronomically large
#: finite q with no numerical meaning.
SNAP_TOL = 1e-12


def _normalize_exponent(p) -> float:
    """Coerce p to float, snap near-1 values to 1, reject anything < 1 or NaN."""
    try:
        pf = float(p)
    except (TypeError, ValueError) as exc:
        raise ExponentError(f"exponent must be a real number in [1, inf], got {p!r}") from exc
    if math.isnan(pf):
        raise ExponentError("exponent must not be NaN")
    if abs(pf - 1.0) <= SNAP_TOL:
        return 1.0
    if pf < 1.0:
        raise ExponentError(f"exponent must be >= 1, got {pf}")
    return pf


def conjugate_exponent(p) -> float:
    """The q with 1/p + 1/q = 1, using the limit pairs (1, inf) and (inf, 1)."""
    pf = _normalize_exponent(p)
    if pf == 1.0:
        return math.inf
    if math.isinf(pf):
        return 1.0
    return pf / (pf - 1.0)


@dataclass(frozen=True)
class HolderExponent:
    """A conjugate exponent pair (p, q).

    ``of(p)`` computes q once; ``conjugate()`` swaps the stored pair, so
    round-tripping is exact by construction rather than by re-division.
    """

    p: float
    q: float

    def __post_init__(self):
        pf = _normalize_exponent(self.p)
        qf = _normalize_exponent(self.q)
        object.__setattr__(self, "p", pf)
        object.__setattr__(self, "q", qf)
        if pf == 1.0:
            ok = math.isinf(qf)
        elif math.isinf(pf):
            ok = qf == 1.0
        elif math.isinf(qf):
            ok = False  # finite p > 1 has a finite conjugate
        else:
            ok = abs(1.0 / pf + 1.0 / qf - 1.0) <= 1e-9
        if not ok:
            raise ExponentError(f"{pf} and {qf} are not Hölder conjugates")

    @classmethod
    def of(cls, p) -> "HolderExponent":
        pf = _normalize_exponent(p)
        return cls(pf, conjugate_exponent(pf))

    def conjugate(self) -> "HolderExponent":
        return HolderExponent(self.q, self.p)


def power_mean_exponent(p) -> float:
    """Validate an exponent required to lie strictly inside (1, 2].

    Values within SNAP_TOL of 1 count as 1 and are rejected: the operations
    gated by this check are not stated at p = 1 and are not extended there.
    """
    try:
        pf = float(p)
    except (TypeError, ValueError) as exc:
        raise ExponentRangeError(f"exponent must be a real number in (1, 2], got {p!r}") from exc
    if math.isnan(pf) or pf <= 1.0 + SNAP_TOL or pf > 2.0:
        raise ExponentRangeError(f"exponent must lie in (1, 2], got {pf}")
    return pf


def _abs_1d(values) -> np.ndarray:
    """|values| as a float64 array; accepts Vector, sequence, or ndarray."""
    if isinstance(values, Vector):
        arr = values.coords
    else:
        arr = np.asarray(values)
    if arr.ndim != 1:
        raise ShapeError(f"expected a one-dimensional sequence, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.number):
        raise DomainError(f"sequence must be numeric, got dtype {arr.dtype}")
    a = np.abs(arr.astype(np.complex128)).astype(np.float64)
    if a.size and not np.all(np.isfinite(a)):
        raise DomainError("sequence contains non-finite entries")
    return a


def _pnorm_nonneg(a: np.ndarray, pf: float) -> float:
    """p-norm of a flat nonnegative float array, overflow-safe for large p.

    The maximum is factored out before powering: q = p/(p-1) grows without
    bound as p -> 1 (q = 11 already at p = 1.1), and raising raw magnitudes
    to such powers overflows long before the norm itself does.
    """
    if a.size == 0:
        return 0.0
    if math.isinf(pf):
        return float(a.max())
    if pf == 1.0:
        return float(a.sum())
    m = float(a.max())
    if m == 0.0:
        return 0.0
    s = float(((a / m) ** pf).sum())
    return float(m * s ** (1.0 / pf))


def seq_pnorm(values, p) -> float:
    """(Σ|v_i|^p)^(1/p) for finite p; max|v_i| at p = ∞; 0 for an empty sequence."""
    pf = _normalize_exponent(p)
    return _pnorm_nonneg(_abs_1d(values), pf)


def _as_gram(gram) -> GramMatrix:
    return gram if isinstance(gram, GramMatrix) else GramMatrix(np.asarray(gram))


def gram_entry_qnorm(gram, q) -> float:
    """Entrywise q-norm over all n² magnitudes |g_ij|; max entry at q = ∞."""
    qf = _normalize_exponent(q)
    g = _as_gram(gram)
    return _pnorm_nonneg(g.abs_entries().ravel(), qf)


def max_row_abs_sum(gram) -> float:
    """max_i Σ_j |g_ij| — the row factor of the classical Bessel-sum bound."""
    g = _as_gram(gram)
    if g.size == 0:
        return 0.0
    return float(g.abs_entries().sum(axis=1).max())
