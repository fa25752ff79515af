"""Small helpers for complex 3x3 response tensors."""

import numpy as np


def symmetric_part(t):
    """Matrix-symmetric part (T + T^T)/2."""
    t = np.asarray(t)
    return 0.5 * (t + np.swapaxes(t, -1, -2))


def antisymmetric_part(t):
    """Matrix-antisymmetric part (T - T^T)/2."""
    t = np.asarray(t)
    return 0.5 * (t - np.swapaxes(t, -1, -2))


def im_construction(t):
    """The generalized imaginary part ``(T - T^dagger)/(2i)``.

    Hermitian for any T, and equals ``Im(T^s) - i Re(T^as)`` in terms of
    the symmetric/antisymmetric split.
    """
    t = np.asarray(t)
    return (t - np.conj(np.swapaxes(t, -1, -2))) / 2j


def is_hermitian(t, tol=1e-12):
    t = np.asarray(t)
    scale = max(float(np.max(np.abs(t))), 1e-300)
    return float(np.max(np.abs(t - np.conj(np.swapaxes(t, -1, -2))))) <= tol * scale


def orientation_dyad(theta=None, phi=None):
    """Dipole direction dyad ``n n^T``; isotropic average 1/3 when no
    angles are given (polar theta from the surface normal, azimuth phi
    from the direction of motion)."""
    if theta is None:
        return np.eye(3) / 3.0
    n = np.array([
        np.sin(theta) * np.cos(phi),
        np.sin(theta) * np.sin(phi),
        np.cos(theta),
    ])
    return np.outer(n, n)
