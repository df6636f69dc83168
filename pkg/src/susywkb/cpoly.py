"""Complex polynomials and rational functions.

Coefficients are stored ascending in degree, matching
``numpy.polynomial.polynomial`` conventions.  Degrees in this package stay
small (at most 12), so the simultaneous-iteration root finder below is both
fast and accurate enough for the 1e-10 relative tolerance required of
turning-point and branch-point computations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import ConvergenceError, DomainError

ROOT_TOL = 1e-10      # relative residual bound for accepted roots
GCD_TOL = 1e-9        # common-root tolerance when reducing rational functions


def _trim(coeffs):
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim == 0:
        c = c.reshape(1)
    nz = np.nonzero(np.abs(c) > 0)[0]
    if len(nz) == 0:
        return np.zeros(1, dtype=complex)
    return c[: nz[-1] + 1]


@dataclass(frozen=True)
class Polynomial:
    """Dense complex polynomial, coefficients ascending in degree."""

    coeffs: np.ndarray

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self):
        if self.is_zero:
            return 0
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, z):
        return npoly.polyval(z, self.coeffs)

    def __add__(self, other):
        return Polynomial(npoly.polyadd(self.coeffs, _as_coeffs(other)))

    def __sub__(self, other):
        return Polynomial(npoly.polysub(self.coeffs, _as_coeffs(other)))

    def __mul__(self, other):
        return Polynomial(npoly.polymul(self.coeffs, _as_coeffs(other)))

    __rmul__ = __mul__

    def deriv(self):
        return Polynomial(npoly.polyder(self.coeffs))

    def monic(self):
        return Polynomial(self.coeffs / self.coeffs[-1])


def _as_coeffs(p):
    if isinstance(p, Polynomial):
        return p.coeffs
    return np.atleast_1d(np.asarray(p, dtype=complex))


def find_roots(p: Polynomial, max_iter=200):
    """All complex roots of ``p``, repeated per multiplicity.

    Aberth-Ehrlich simultaneous iteration from a perturbed ring of starting
    points.  The returned roots satisfy |p(r)| <= ROOT_TOL * max|coeff| *
    scale; failing that a ConvergenceError carrying the residuals is raised.
    """
    if p.is_zero:
        raise DomainError("cannot take roots of the zero polynomial")
    c = p.monic().coeffs
    n = len(c) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    # Cauchy-style radius bound for initial ring
    radius = 1.0 + np.abs(c[:-1]).max()
    k = np.arange(n)
    z = radius * 0.6 * np.exp(2j * np.pi * (k + 0.35) / n + 0.41j)
    dc = npoly.polyder(c)
    for _ in range(max_iter):
        pv = npoly.polyval(z, c)
        dv = npoly.polyval(z, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dv != 0, pv / np.where(dv == 0, 1, dv), 0.0)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulse = np.sum(1.0 / diff, axis=1)
            denom = 1.0 - newton * repulse
            step = np.where(np.abs(denom) > 1e-300, newton / denom, newton)
        z = z - step
        if np.max(np.abs(step)) < 1e-14 * (1.0 + np.max(np.abs(z))):
            break
    scale = np.abs(p.coeffs).max()
    # polish with a few Newton steps on the original polynomial
    oc = p.coeffs
    od = npoly.polyder(oc)
    for _ in range(3):
        pv = npoly.polyval(z, oc)
        dv = npoly.polyval(z, od)
        good = np.abs(dv) > 1e-300
        z = np.where(good, z - pv / np.where(good, dv, 1), z)
    res = np.abs(npoly.polyval(z, oc))
    bound = ROOT_TOL * scale * np.maximum(1.0, np.abs(z)) ** n
    if np.any(res > bound):
        raise ConvergenceError(
            "root finder did not converge", residuals=res.tolist()
        )
    return z


@dataclass(frozen=True)
class RationalFunction:
    """Reduced ratio of two complex polynomials."""

    num: Polynomial
    den: Polynomial

    def __init__(self, num, den, reduce=True):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero:
            raise DomainError("rational function with zero denominator")
        if reduce and not num.is_zero:
            num, den = _cancel_common_roots(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def deriv(self):
        """Exact rational derivative (num' den - num den') / den^2."""
        n, d = self.num, self.den
        return RationalFunction(n.deriv() * d - n * d.deriv(), d * d,
                                reduce=False)

    def poles(self):
        if self.den.degree == 0:
            return np.zeros(0, dtype=complex)
        return find_roots(self.den)


def _cancel_common_roots(num, den):
    """Deflate roots shared by num and den within GCD_TOL."""
    if den.degree == 0 or num.degree == 0:
        return num, den
    den_roots = find_roots(den)
    scale_n = np.abs(num.coeffs).max()
    keep = []
    for r in den_roots:
        local = max(1.0, abs(r)) ** num.degree
        if abs(num(r)) < GCD_TOL * scale_n * local:
            num = _deflate(num, r)
        else:
            keep.append(r)
    if len(keep) == len(den_roots):
        return num, den
    lead = den.coeffs[-1]
    new_den = Polynomial([lead])
    for r in keep:
        new_den = new_den * Polynomial([-r, 1.0])
    return num, new_den


def _deflate(p, root):
    """Synthetic division of p by (z - root)."""
    c = p.coeffs
    n = len(c) - 1
    out = np.zeros(n, dtype=complex)
    acc = c[n]
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = c[k] + acc * root
    return Polynomial(out)
