"""Canonical potential catalog.

Nine superpotentials, each represented as a rational function omega(y) of a
mapped variable y together with the mapping back to the physical coordinate
x.  Six entries (eckart, scarf2, rosenmorse2, genpt, scarf1, rosenmorse1)
have closed-form spectra for which the lowest-order SWKB condition is exact;
the three nonexact entries have no such guarantee and are the interesting
test cases for the branch-cut defect machinery.

Conventions: 2m = 1, unbroken SUSY (the ground state of
H_- = -hbar^2 d^2/dx^2 + omega^2 - hbar*omega' sits at E_0 = 0).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .cpoly import Polynomial, RationalFunction
from .errors import DomainError

MAPPINGS = ("identity", "exp", "exp_i")


@dataclass(frozen=True)
class PotentialSpec:
    """One catalog entry."""

    id: str
    params: dict
    hbar: float
    domain: tuple                      # (lo, hi) in x; may be +-inf
    mapping: str                       # "identity" | "exp" | "exp_i"
    omega_y: RationalFunction
    threshold: float                   # sup of bound-state energies
    spectrum: Optional[Callable]       # n -> E_n, or None
    n_is_bound: Callable               # n -> bool
    fixed_poles: tuple = ()            # finite poles of the contour integrand
    partial: bool = False              # best-effort entry, excluded from
                                       # quantitative guarantees

    # -- mapping helpers ----------------------------------------------------

    @property
    def alpha(self):
        return self.params.get("alpha", 1.0)

    def y_of_x(self, x):
        if self.mapping == "identity":
            return np.asarray(x, dtype=complex)
        if self.mapping == "exp":
            return np.exp(self.alpha * np.asarray(x, dtype=complex))
        if self.mapping == "exp_i":
            return np.exp(1j * self.alpha * np.asarray(x, dtype=complex))
        raise DomainError(f"unknown mapping {self.mapping!r}")

    def x_of_y(self, y):
        """Inverse mapping for y in the image of the physical domain."""
        if self.mapping == "identity":
            return complex(y).real if abs(complex(y).imag) < 1e-9 else None
        if self.mapping == "exp":
            y = complex(y)
            if abs(y.imag) < 1e-9 * max(1.0, abs(y)) and y.real > 0:
                return math.log(y.real) / self.alpha
            return None
        y = complex(y)
        if abs(abs(y) - 1.0) < 1e-7:
            return float(np.angle(y)) / self.alpha
        return None

    def dydx(self, y):
        if self.mapping == "identity":
            return np.ones_like(np.asarray(y, dtype=complex))
        if self.mapping == "exp":
            return self.alpha * np.asarray(y, dtype=complex)
        return 1j * self.alpha * np.asarray(y, dtype=complex)

    def measure(self, y):
        """dx/dy as a function of y (the contour-integral measure)."""
        return 1.0 / self.dydx(y)

    # -- physical-space evaluation ------------------------------------------

    def _check_domain(self, x):
        lo, hi = self.domain
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(xs <= lo) or np.any(xs >= hi):
            raise DomainError(f"x outside open domain ({lo}, {hi}) of {self.id}")

    def omega_x(self, x):
        """Superpotential in the physical coordinate."""
        self._check_domain(x)
        val = self.omega_y(self.y_of_x(x))
        return np.real_if_close(val, tol=1e6).real if self.mapping == "exp_i" \
            else np.asarray(val).real

    def omega_prime_x(self, x):
        """Exact d omega/dx via the rational derivative and the chain rule."""
        self._check_domain(x)
        y = self.y_of_x(x)
        val = self.omega_y.deriv()(y) * self.dydx(y)
        return np.asarray(val).real

    def v_minus(self, x):
        """Partner potential omega^2 - hbar * omega'."""
        return self.omega_x(x) ** 2 - self.hbar * self.omega_prime_x(x)

    def v_plus(self, x):
        return self.omega_x(x) ** 2 + self.hbar * self.omega_prime_x(x)

    def is_y_symmetric(self):
        """True when omega^2(-y) = omega^2(y) in the mapped plane."""
        n, d = self.omega_y.num, self.omega_y.den
        nm = Polynomial(n.coeffs * (-1.0) ** np.arange(len(n.coeffs)))
        dm = Polynomial(d.coeffs * (-1.0) ** np.arange(len(d.coeffs)))
        lhs = (n * n * dm * dm).coeffs
        rhs = (nm * nm * d * d).coeffs
        m = max(len(lhs), len(rhs))
        lhs = np.pad(lhs, (0, m - len(lhs)))
        rhs = np.pad(rhs, (0, m - len(rhs)))
        scale = max(np.abs(lhs).max(), np.abs(rhs).max(), 1.0)
        return bool(np.all(np.abs(lhs - rhs) <= 1e-10 * scale))

    # -- serialization ------------------------------------------------------

    def to_json(self):
        def poly(p):
            return [[c.real, c.imag] for c in p.coeffs]
        return {
            "id": self.id,
            "params": dict(self.params),
            "hbar": self.hbar,
            "domain": [self.domain[0], self.domain[1]],
            "mapping": self.mapping,
            "omega": {"num": poly(self.omega_y.num),
                      "den": poly(self.omega_y.den)},
        }


def spec_from_json(doc):
    """Rebuild a catalog entry from its JSON document (see to_json)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    return get_spec(doc["id"], params=doc.get("params"),
                    hbar=doc.get("hbar", 1.0))


# ---------------------------------------------------------------------------
# entry builders
# ---------------------------------------------------------------------------

def _require(cond, msg):
    if not cond:
        raise DomainError(msg)


def _build_eckart(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0, "eckart requires A, B, alpha > 0")
    _require(B > A * A, "eckart requires B > A^2")
    omega = RationalFunction([-A - B / A, 0.0, -A + B / A], [-1.0, 0.0, 1.0])

    def spectrum(n):
        s = A + n * al * hbar
        return A * A + (B / A) ** 2 - (B / s) ** 2 - s * s

    return PotentialSpec(
        id="eckart", params=params, hbar=hbar, domain=(0.0, math.inf),
        mapping="exp", omega_y=omega, threshold=(B / A - A) ** 2,
        spectrum=spectrum,
        n_is_bound=lambda n: n >= 0 and (A + n * al * hbar) ** 2 < B,
        fixed_poles=(0.0 + 0j, 1.0 + 0j, -1.0 + 0j),
    )


def _build_scarf2(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0, "scarf2 requires A, B, alpha > 0")
    omega = RationalFunction([-A, 2.0 * B, A], [1.0, 0.0, 1.0])

    def spectrum(n):
        return A * A - (A - n * al * hbar) ** 2

    return PotentialSpec(
        id="scarf2", params=params, hbar=hbar,
        domain=(-math.inf, math.inf), mapping="exp", omega_y=omega,
        threshold=A * A, spectrum=spectrum,
        n_is_bound=lambda n: n >= 0 and A - n * al * hbar > 0,
        fixed_poles=(0.0 + 0j, 1j, -1j),
    )


def _build_rosenmorse2(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0,
             "rosenmorse2 requires A, B, alpha > 0")
    _require(B < A * A, "rosenmorse2 requires B < A^2")
    omega = RationalFunction([-A + B / A, 0.0, A + B / A], [1.0, 0.0, 1.0])

    def spectrum(n):
        s = A - n * al * hbar
        return A * A + (B / A) ** 2 - s * s - (B / s) ** 2

    return PotentialSpec(
        id="rosenmorse2", params=params, hbar=hbar,
        domain=(-math.inf, math.inf), mapping="exp", omega_y=omega,
        threshold=(A - B / A) ** 2, spectrum=spectrum,
        n_is_bound=lambda n: n >= 0 and (A - n * al * hbar) ** 2 > B
        and A - n * al * hbar > 0,
        fixed_poles=(0.0 + 0j, 1j, -1j),
    )


def _build_genpt(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0, "genpt requires A, B, alpha > 0")
    _require(A < B, "genpt requires A < B")
    omega = RationalFunction([A, -2.0 * B, A], [-1.0, 0.0, 1.0])

    def spectrum(n):
        return A * A - (A - n * al * hbar) ** 2

    return PotentialSpec(
        id="genpt", params=params, hbar=hbar, domain=(0.0, math.inf),
        mapping="exp", omega_y=omega, threshold=A * A, spectrum=spectrum,
        n_is_bound=lambda n: n >= 0 and A - n * al * hbar > 0,
        fixed_poles=(0.0 + 0j, 1.0 + 0j, -1.0 + 0j),
    )


def _build_scarf1(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0, "scarf1 requires A, B, alpha > 0")
    _require(A > B, "scarf1 requires A > B")
    omega = RationalFunction([1j * A, -2.0 * B, -1j * A], [1.0, 0.0, 1.0])

    def spectrum(n):
        return (A + n * al * hbar) ** 2 - A * A

    return PotentialSpec(
        id="scarf1", params=params, hbar=hbar,
        domain=(-math.pi / (2 * al), math.pi / (2 * al)), mapping="exp_i",
        omega_y=omega, threshold=math.inf, spectrum=spectrum,
        n_is_bound=lambda n: n >= 0,
        fixed_poles=(0.0 + 0j, 1j, -1j),
    )


def _build_rosenmorse1(params, hbar):
    A, B, al = params["A"], params["B"], params["alpha"]
    _require(A > 0 and B > 0 and al > 0,
             "rosenmorse1 requires A, B, alpha > 0")
    omega = RationalFunction([-1j * A + B / A, 0.0, -1j * A - B / A],
                             [-1.0, 0.0, 1.0])

    def spectrum(n):
        s = A + n * al * hbar
        return s * s - A * A + (B / A) ** 2 - (B / s) ** 2

    return PotentialSpec(
        id="rosenmorse1", params=params, hbar=hbar,
        domain=(0.0, math.pi / al), mapping="exp_i", omega_y=omega,
        threshold=math.inf, spectrum=spectrum,
        n_is_bound=lambda n: n >= 0,
        fixed_poles=(0.0 + 0j, 1.0 + 0j, -1.0 + 0j),
    )


def _build_nonexact1(params, hbar):
    num = Polynomial([-6.0, 0.0, -1.0, 0.0, 3.0, 0.0, 2.0])
    den = Polynomial([0.0, 4.0, 0.0, 6.0, 0.0, 2.0])
    omega = RationalFunction(num, den)

    def spectrum(n):
        return 4.0 * n * hbar

    return PotentialSpec(
        id="nonexact1", params=params, hbar=hbar, domain=(0.0, math.inf),
        mapping="identity", omega_y=omega, threshold=math.inf,
        spectrum=spectrum, n_is_bound=lambda n: n >= 0,
        fixed_poles=(0.0 + 0j, 1j, -1j,
                     1j * math.sqrt(2.0), -1j * math.sqrt(2.0)),
    )


def _build_nonexact2(params, hbar):
    num = Polynomial([-192.0, -240.0, -108.0, -56.0, -16.0, 0.0, 1.0])
    den = Polynomial([0.0, 192.0, 320.0, 272.0, 120.0, 32.0, 4.0])
    omega = RationalFunction(num, den)
    poles = tuple(sorted(omega.poles(),
                         key=lambda z: (round(z.real, 12), round(z.imag, 12))))
    return PotentialSpec(
        id="nonexact2", params=params, hbar=hbar, domain=(0.0, math.inf),
        mapping="identity", omega_y=omega, threshold=1.0 / 16.0,
        spectrum=None, n_is_bound=lambda n: n >= 0,
        fixed_poles=poles,
    )


def _build_nonexact3(params, hbar):
    lam, mu0 = params["lam"], params["mu0"]
    _require(0.0 < lam < 1.0, "nonexact3 requires 0 < lam < 1")
    c3 = 0.5 * (1.0 - lam * lam)
    c1 = mu0 * lam * lam - c3
    omega = RationalFunction([0.0, c1, 0.0, c3], [1.0])
    return PotentialSpec(
        id="nonexact3", params=params, hbar=hbar,
        domain=(-math.inf, math.inf), mapping="identity", omega_y=omega,
        threshold=math.inf, spectrum=None, n_is_bound=lambda n: n >= 0,
        fixed_poles=(), partial=True,
    )


_BUILDERS = {
    "eckart": (_build_eckart, {"A": 1.0, "B": 16.0, "alpha": 1.0}),
    "scarf2": (_build_scarf2, {"A": 3.0, "B": 1.0, "alpha": 1.0}),
    "rosenmorse2": (_build_rosenmorse2, {"A": 4.0, "B": 2.0, "alpha": 1.0}),
    "genpt": (_build_genpt, {"A": 2.0, "B": 5.0, "alpha": 1.0}),
    "scarf1": (_build_scarf1, {"A": 1.0, "B": 0.5, "alpha": 1.0}),
    "rosenmorse1": (_build_rosenmorse1, {"A": 1.0, "B": 1.0, "alpha": 1.0}),
    "nonexact1": (_build_nonexact1, {}),
    "nonexact2": (_build_nonexact2, {}),
    "nonexact3": (_build_nonexact3, {"lam": 0.5, "nu": 1.0, "mu0": 1.0}),
}

EXACT_IDS = ("eckart", "scarf2", "rosenmorse2", "genpt", "scarf1",
             "rosenmorse1")
NONEXACT_IDS = ("nonexact1", "nonexact2", "nonexact3")
CATALOG_IDS = EXACT_IDS + NONEXACT_IDS


def get_spec(pot_id, params=None, hbar=1.0):
    """Build the catalog entry with optional parameter overrides."""
    if pot_id not in _BUILDERS:
        raise DomainError(f"unknown potential id {pot_id!r}; "
                          f"known: {', '.join(CATALOG_IDS)}")
    builder, defaults = _BUILDERS[pot_id]
    merged = dict(defaults)
    if params:
        unknown = set(params) - set(defaults)
        if unknown:
            raise DomainError(
                f"unknown parameter(s) {sorted(unknown)} for {pot_id}")
        merged.update(params)
    if hbar <= 0:
        raise DomainError("hbar must be positive")
    return builder(merged, float(hbar))


def catalog_list(hbar=1.0):
    """All nine catalog entries at their default parameters."""
    return [get_spec(pid, hbar=hbar) for pid in CATALOG_IDS]


def closed_form_energy(spec, n):
    """Closed-form E_n for entries that have one."""
    if spec.spectrum is None:
        raise DomainError(f"{spec.id} has no closed-form spectrum")
    if n < 0 or not spec.n_is_bound(n):
        count = bound_state_count(spec)
        raise DomainError(
            f"level n={n} is not bound for {spec.id} "
            f"(bound-state count: {count})")
    return float(spec.spectrum(n))


def bound_state_count(spec, limit=10000):
    """Number of bound levels per the catalog rule (may be inf)."""
    n = 0
    while n < limit and spec.n_is_bound(n):
        n += 1
    return n if n < limit else math.inf
