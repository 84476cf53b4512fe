"""Two-mode angular-momentum structure of beam splitters.

Two bosonic modes carry an su(2) algebra through the bilinears
L_k = (1/2) (a1+, a2+) sigma_k (a1, a2)^T.  Number states group into
multiplets labelled by l = (n+m)/2 with internal index l3 = (n-m)/2; a
beam splitter preserves l and acts inside each multiplet.  Conjugating the
generators with the device unitary is a rotation of the three-dimensional
generator space, computed here by a trace formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fock import Occupation, PureState, annihilate, create, occupations
from .lift import ModeUnitary

#: The three Pauli matrices, in the usual order.
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class MultipletLabel2:
    """(l, l3) stored as exact doubled integers to avoid half-integer rounding."""

    twice_l: int
    twice_l3: int

    def __post_init__(self):
        if self.twice_l < 0:
            raise ValueError("l must be non-negative")
        if abs(self.twice_l3) > self.twice_l:
            raise ValueError(f"|l3| = {abs(self.twice_l3)}/2 exceeds l = {self.twice_l}/2")
        if (self.twice_l - self.twice_l3) % 2 != 0:
            raise ValueError("l - l3 must be an integer")

    @property
    def l(self) -> Fraction:
        return Fraction(self.twice_l, 2)

    @property
    def l3(self) -> Fraction:
        return Fraction(self.twice_l3, 2)


def multiplet_label(occ) -> MultipletLabel2:
    """Label a two-mode number state: l = (n+m)/2, l3 = (n-m)/2."""
    occ = tuple(occ)
    if len(occ) != 2:
        raise ValueError(f"expected a two-mode occupation, got {occ}")
    n, m = occ
    if n < 0 or m < 0:
        raise ValueError(f"negative photon count in {occ}")
    return MultipletLabel2(twice_l=n + m, twice_l3=n - m)


def casimir_eigenvalue(l) -> Fraction:
    """l(l+1), exactly, for half-integer l >= 0."""
    lf = Fraction(l)
    if lf < 0 or (2 * lf).denominator != 1:
        raise ValueError(f"l must be a non-negative half-integer, got {l}")
    return lf * (lf + 1)


def bilinear_matrix(coeffs: np.ndarray, basis: list[Occupation]) -> np.ndarray:
    """Matrix of sum_ij coeffs[i,j] a_i+ a_j on the given occupation basis.

    Built term by term from the sparse creation/annihilation operators; the
    bilinear conserves total photon number, so a basis closed under photon
    number gives the exact matrix with no truncation artifacts.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    modes = len(basis[0])
    index = {occ: i for i, occ in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)), dtype=complex)
    for col, occ in enumerate(basis):
        ket = PureState(modes, {occ: 1.0})
        for j in range(modes):
            lowered = annihilate(ket, j)
            if len(lowered) == 0:
                continue
            for i in range(modes):
                if coeffs[i, j] == 0:
                    continue
                for new_occ, amp in create(lowered, i).terms.items():
                    out[index[new_occ], col] += coeffs[i, j] * amp
    return out


def truncated_basis(modes: int, max_total_photons: int) -> list[Occupation]:
    """All occupations with total <= max, grouped by photon sector."""
    basis: list[Occupation] = []
    for n in range(max_total_photons + 1):
        basis.extend(occupations(modes, n))
    return basis


@dataclass(frozen=True, eq=False)
class Su2GeneratorSet:
    """Schwinger generators realized on a truncated two-mode Fock basis.

    All matrices are block diagonal over photon sectors; l_plus = l1 + i*l2
    and l_minus = l1 - i*l2 hold by construction.
    """

    basis: tuple[Occupation, ...]
    l1: np.ndarray
    l2: np.ndarray
    l3: np.ndarray
    l_plus: np.ndarray
    l_minus: np.ndarray


def schwinger_generators(max_total_photons: int) -> Su2GeneratorSet:
    """Realize L1, L2, L3 and the ladders on occupations with total <= max."""
    if max_total_photons < 1:
        raise ValueError("need at least one photon for a non-trivial basis")
    basis = truncated_basis(2, max_total_photons)
    l1, l2, l3 = (bilinear_matrix(0.5 * s, basis) for s in PAULI)
    return Su2GeneratorSet(
        basis=tuple(basis),
        l1=l1,
        l2=l2,
        l3=l3,
        l_plus=l1 + 1j * l2,
        l_minus=l1 - 1j * l2,
    )


def su2_adjoint(u: ModeUnitary) -> np.ndarray:
    """The 3x3 rotation a beam splitter induces on the generator space.

    O_kl = (1/2) Tr(U+ sigma_k U sigma_l); O is real orthogonal with det +1
    and insensitive to any global phase of U.  Conjugating the lifted
    generators with the lifted device reproduces sum_l O_kl L_l, which is the
    defining relation the test suite checks against this formula.
    """
    if u.dim != 2:
        raise ValueError(f"expected a 2x2 unitary, got dim {u.dim}")
    m = u.matrix
    o = np.empty((3, 3))
    for k in range(3):
        conj = m.conj().T @ PAULI[k] @ m
        for l in range(3):
            val = 0.5 * np.trace(conj @ PAULI[l])
            o[k, l] = val.real
    return o
