"""Finite indicator combinations and the gauges of the target spaces.

A simple function is a finite complex linear combination of indicators of
regions from one family.  On construction it is refined into canonical
atoms: pairwise disjoint maximal rectangles (or rings) carrying one complex
coefficient each, obtained by overlaying all term breakpoints, accumulating
coefficients per elementary cell in term order, dropping negligible values,
and merging adjacent cells with bitwise-equal coefficients.  Point values,
level-set masses and the gauges below then reduce to sums over atoms.

Why drop "negligible" coefficients at all: divided-difference arithmetic
cancels coefficients on shared atoms, and when the combination is formed in
one pass (Lagrange style) those cancellations leave float residue that is
many orders below the honest coefficients.  An atom is therefore dropped
when its modulus is <= zero_tol times the largest term coefficient modulus.

Gauges on a function f with atoms (c_i, A_i):

* gauge_in_measure(f, eps) = mu(|f| >= eps) = sum of mu(A_i) over |c_i| >= eps,
* wk_member(f, k): membership in the basic zero-neighbourhood of the
  convergence-in-measure topology, mu(|f| >= 1/k) < 1/k,
* l0_gauge(f) = integral of min(1, |f|) dmu, a single scalar that goes to 0
  exactly when the function enters every such neighbourhood,
* lp_gauge(f, p) = integral of |f|**p dmu for 1/2 < p < 1, the subadditive
  p-th-power functional of the quasi-normed space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .measure import (
    GRID,
    RADIAL,
    FamilyMismatchError,
    GridRegion,
    Interval,
    RadialRegion,
    Region,
    region_contains,
    region_measure,
    region_to_json,
)

__all__ = [
    "ZERO_TOL",
    "SimpleFunction",
    "SupportBound",
    "indicator",
    "linear_combine",
    "gauge_in_measure",
    "wk_member",
    "l0_gauge",
    "lp_gauge",
    "supported_in",
    "simple_function_to_json",
]

ZERO_TOL = 1e-9  # relative to the largest term coefficient modulus

_Term = tuple[complex, Region]


def _grid_atoms(terms: Sequence[_Term], tol: float) -> tuple[_Term, ...]:
    pieces = [(c, cell) for c, reg in terms for cell in reg.cells]
    if not pieces:
        return ()
    xs = sorted({p for _, (cx, _) in pieces for p in (cx.lo, cx.hi)})
    ys = sorted({p for _, (_, cy) in pieces for p in (cy.lo, cy.hi)})
    columns: list[list] = []  # [x_lo, x_hi, profile] with profile [[y_lo, y_hi, v], ...]
    for xlo, xhi in zip(xs, xs[1:]):
        profile: list[list] = []
        for ylo, yhi in zip(ys, ys[1:]):
            v = 0j
            for c, (cx, cy) in pieces:
                if cx.lo <= xlo and xhi <= cx.hi and cy.lo <= ylo and yhi <= cy.hi:
                    v += c
            if abs(v) <= tol:
                continue
            if profile and profile[-1][1] == ylo and profile[-1][2] == v:
                profile[-1][1] = yhi
            else:
                profile.append([ylo, yhi, v])
        if not profile:
            continue
        if columns and columns[-1][1] == xlo and columns[-1][2] == profile:
            columns[-1][1] = xhi
        else:
            columns.append([xlo, xhi, profile])
    return tuple(
        (v, GridRegion(((Interval(xlo, xhi), Interval(ylo, yhi)),)))
        for xlo, xhi, profile in columns
        for ylo, yhi, v in profile
    )


def _radial_atoms(terms: Sequence[_Term], tol: float) -> tuple[_Term, ...]:
    pieces = [(c, ring) for c, reg in terms for ring in reg.rings]
    if not pieces:
        return ()
    rs = sorted({p for _, ring in pieces for p in (ring.lo, ring.hi)})
    merged: list[list] = []
    for lo, hi in zip(rs, rs[1:]):
        v = 0j
        for c, ring in pieces:
            if ring.lo <= lo and hi <= ring.hi:
                v += c
        if abs(v) <= tol:
            continue
        if merged and merged[-1][1] == lo and merged[-1][2] == v:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi, v])
    return tuple(
        (v, RadialRegion((Interval(lo, hi),))) for lo, hi, v in merged
    )


@dataclass(frozen=True)
class SimpleFunction:
    """Canonicalised finite linear combination of region indicators.

    `terms` is kept exactly as given (the construction history); `atoms` is
    the canonical disjoint decomposition everything else is computed from.
    Immutable; the atom cache is built here, never lazily.
    """

    family: str
    terms: tuple[_Term, ...] = ()
    zero_tol: float = ZERO_TOL
    atoms: tuple[_Term, ...] = field(init=False, default=())

    def __post_init__(self) -> None:
        if self.family not in (GRID, RADIAL):
            raise ValueError(f"unknown function family {self.family!r}")
        terms = tuple((complex(c), reg) for c, reg in self.terms)
        for _, reg in terms:
            if reg.family != self.family:
                raise FamilyMismatchError(
                    f"term region family {reg.family!r} != function family {self.family!r}"
                )
        object.__setattr__(self, "terms", terms)
        cmax = max((abs(c) for c, _ in terms), default=0.0)
        tol = self.zero_tol * cmax
        build = _grid_atoms if self.family == GRID else _radial_atoms
        object.__setattr__(self, "atoms", build(terms, tol))

    @classmethod
    def zero(cls, family: str) -> "SimpleFunction":
        return cls(family)

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    def max_coeff(self) -> float:
        return max((abs(c) for c, _ in self.atoms), default=0.0)

    def value_at(self, w: complex) -> complex:
        for c, reg in self.atoms:
            if reg.contains_point(w):
                return c
        return 0j

    def value_from_terms(self, w: complex) -> complex:
        """Term-by-term evaluation; must agree with the atom value."""
        v = 0j
        for c, reg in self.terms:
            if reg.contains_point(w):
                v += c
        return v


def indicator(r: Region) -> SimpleFunction:
    return SimpleFunction(r.family, ((1.0 + 0j, r),))


def linear_combine(
    coeffs: Sequence[complex],
    fns: Sequence[SimpleFunction],
    zero_tol: float = ZERO_TOL,
) -> SimpleFunction:
    """Pointwise sum(coeffs[i] * fns[i]), refined over all breakpoints."""
    if len(coeffs) != len(fns):
        raise ValueError("coefficient and function counts differ")
    if not fns:
        raise ValueError("linear_combine needs at least one function")
    family = fns[0].family
    for f in fns[1:]:
        if f.family != family:
            raise FamilyMismatchError("cannot combine functions of different families")
    terms = tuple(
        (complex(k) * c, reg) for k, f in zip(coeffs, fns) for c, reg in f.atoms
    )
    return SimpleFunction(family, terms, zero_tol)


# ---------------------------------------------------------------------------
# gauges
# ---------------------------------------------------------------------------


def gauge_in_measure(f: SimpleFunction, eps: float) -> float:
    """mu({w : |f(w)| >= eps}), the level-set mass at height eps."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    return sum(region_measure(reg) for c, reg in f.atoms if abs(c) >= eps)


def wk_member(f: SimpleFunction, k: int) -> bool:
    """Membership in the k-th basic zero-neighbourhood: mu(|f| >= 1/k) < 1/k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return gauge_in_measure(f, 1.0 / k) < 1.0 / k


def l0_gauge(f: SimpleFunction) -> float:
    """integral of min(1, |f|) dmu; zero exactly for the zero function."""
    return sum(min(1.0, abs(c)) * region_measure(reg) for c, reg in f.atoms)


def lp_gauge(f: SimpleFunction, p: float) -> float:
    """integral of |f|**p dmu for an exponent 1/2 < p < 1."""
    if not 0.5 < p < 1.0:
        raise ValueError(f"exponent p={p} outside ]1/2, 1[")
    return sum(abs(c) ** p * region_measure(reg) for c, reg in f.atoms)


# ---------------------------------------------------------------------------
# support
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportBound:
    """A region that a function's support is claimed to lie inside."""

    region: Region

    @property
    def family(self) -> str:
        return self.region.family


def supported_in(f: SimpleFunction, bound: SupportBound) -> bool:
    """True iff every atom lies inside the bound region (exact inclusion).

    Atoms below the zero tolerance were already dropped at construction, so
    this is the thresholded support of the function.  The zero function has
    empty support and is contained in every bound.
    """
    if f.family != bound.family:
        raise FamilyMismatchError(
            f"function family {f.family!r} != bound family {bound.family!r}"
        )
    return all(region_contains(bound.region, reg) for _, reg in f.atoms)


def simple_function_to_json(f: SimpleFunction) -> dict:
    return {
        "family": f.family,
        "atoms": [
            {"re": c.real, "im": c.imag, "region": region_to_json(reg)}
            for c, reg in f.atoms
        ],
    }
