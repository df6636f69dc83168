"""Shared fixtures and cached heavy computations for the test suite."""

from functools import lru_cache

import susywkb as sw


@lru_cache(maxsize=None)
def spec_of(pot_id):
    return sw.get_spec(pot_id)


@lru_cache(maxsize=None)
def numerov_of(pot_id, n):
    """Cached Numerov eigenvalue (the most expensive oracle call)."""
    spec = spec_of(pot_id)
    hint = None
    if spec.spectrum is not None and spec.n_is_bound(n):
        hint = spec.spectrum(n)
    return sw.numerov_eigenvalue(spec, n, E_hint=hint)


@lru_cache(maxsize=None)
def decompose_of(pot_id, E):
    return sw.decompose(spec_of(pot_id), E)


def mid_spectrum_energy(pot_id):
    """A representative bound energy for contour work."""
    spec = spec_of(pot_id)
    if spec.spectrum is not None and spec.n_is_bound(2):
        return spec.spectrum(2)
    if spec.spectrum is not None and spec.n_is_bound(1):
        return spec.spectrum(1)
    if pot_id == "nonexact2":
        return numerov_of("nonexact2", 1)
    return 1.0
