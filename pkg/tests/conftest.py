"""Shared test helpers: independent dense oracles and seeded generators.

The oracles here intentionally avoid the library's sparse operators and
polynomial expansion.  Bilinears are filled by direct index arithmetic on a
sector basis, and the dense lift goes through the matrix logarithm and
exponential, so agreement with the package is a genuine two-route check.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.linalg import expm, logm

from fewphoton.fock import occupations
from fewphoton.lift import ModeUnitary


def dense_bilinear(coeffs, modes: int, total: int) -> np.ndarray:
    """Matrix of sum_ij coeffs[i,j] a_i+ a_j on one photon-number sector.

    Uses raising/lowering index arithmetic directly:
    a_i+ a_j |occ> = sqrt(n_j) sqrt(n_i + 1 - delta_ij) |occ - e_j + e_i>.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    basis = occupations(modes, total)
    index = {occ: i for i, occ in enumerate(basis)}
    mat = np.zeros((len(basis), len(basis)), dtype=complex)
    for col, occ in enumerate(basis):
        for i in range(modes):
            for j in range(modes):
                if coeffs[i, j] == 0 or occ[j] == 0:
                    continue
                lowered = list(occ)
                lowered[j] -= 1
                coef = math.sqrt(occ[j]) * math.sqrt(lowered[i] + 1)
                lowered[i] += 1
                mat[index[tuple(lowered)], col] += coeffs[i, j] * coef
    return mat


def expm_lift(matrix, total: int, modes: int) -> np.ndarray:
    """Independent sector lift of a mode unitary: exp of the lifted log.

    If U = exp(L) on the modes, the state-space action on a fixed photon
    number sector is exp(sum_ij L_ij a_i+ a_j) restricted to that sector.
    """
    log_u = logm(np.asarray(matrix, dtype=complex))
    return expm(dense_bilinear(log_u, modes, total))


def brute_force_scissors(input_amps, epr_coeffs, bs_matrix):
    """Dense reference for the teleportation protocol.

    Expands the full three-mode state sector by sector (2, 3, 4 photons),
    applies the expm-based lift of the coupler embedded in three modes, and
    projects on every detector pattern.  Returns ({(j, k): probability},
    {(j, k): {m: amplitude}}) with unnormalized conditional amplitudes.
    """
    a = np.asarray(input_amps, dtype=complex)
    a = a / np.linalg.norm(a)
    c = np.asarray(epr_coeffs, dtype=complex)
    c = c / np.linalg.norm(c)
    u3 = np.eye(3, dtype=complex)
    u3[:2, :2] = np.asarray(bs_matrix, dtype=complex)

    probs: dict[tuple[int, int], float] = {}
    cond: dict[tuple[int, int], dict[int, complex]] = {}
    epr_occs = ((2, 0), (1, 1), (0, 2))
    for q in range(3):
        n = q + 2
        basis = occupations(3, n)
        index = {occ: i for i, occ in enumerate(basis)}
        vec = np.zeros(len(basis), dtype=complex)
        for w, (e2, e3) in enumerate(epr_occs):
            vec[index[(q, e2, e3)]] = a[q] * c[w]
        out = expm_lift(u3, n, 3) @ vec
        for occ, amp in zip(basis, out):
            j, k, m = occ
            probs[(j, k)] = probs.get((j, k), 0.0) + abs(amp) ** 2
            cond.setdefault((j, k), {})[m] = cond.get((j, k), {}).get(m, 0j) + amp
    return probs, cond


def random_unitary(rng, dim: int, special: bool = False) -> ModeUnitary:
    """Haar-ish unitary from a seeded generator; optionally det-1."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    q = q @ np.diag(np.diag(r) / np.abs(np.diag(r)))
    if special:
        q = q / np.linalg.det(q) ** (1.0 / dim)
    return ModeUnitary(dim, q)


def sector_slices(basis) -> dict[int, slice]:
    """Contiguous slice of each photon-number sector in a truncated basis."""
    slices: dict[int, slice] = {}
    start = 0
    current = None
    for i, occ in enumerate(basis):
        n = sum(occ)
        if n != current:
            if current is not None:
                slices[current] = slice(start, i)
            current, start = n, i
    slices[current] = slice(start, len(basis))
    return slices


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
