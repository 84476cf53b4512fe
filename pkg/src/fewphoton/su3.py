"""Three-mode algebra of tritters: generators, multiplets, Euler form, adjoint.

Three bosonic modes carry an su(3) algebra through F_i = (1/2) a+ lambda_i a
with the eight standard 3x3 generator matrices.  Number states |n,l,m> are
simultaneous eigenstates of the two commuting diagonal operators

    T3 |n,l,m> = (n-l)/2 |n,l,m>,     Y |n,l,m> = (n+l-2m)/3 |n,l,m>,

and bosonic symmetry restricts the realizable multiplets to the triangular
(n, 0) family, n = total photons.  A tritter acts on the generator space as
an 8-dimensional rotation, again computed by a trace formula.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .fock import Occupation, occupations
from .lift import ModeUnitary
from .su2 import bilinear_matrix, truncated_basis

# sqrt(1/3) rather than 1/sqrt(3): with this rounding the trace
# normalization Tr(lambda_8 lambda_8) = 2 holds exactly in binary floats.
_INV_SQRT3 = math.sqrt(1.0 / 3.0)

#: The eight standard traceless Hermitian 3x3 generator matrices.
GELL_MANN = (
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, 1, 0], [0, 0, -2]], dtype=complex) * _INV_SQRT3,
)


def structure_constants() -> np.ndarray:
    """Antisymmetric f_abc with [lambda_a, lambda_b] = 2i sum_c f_abc lambda_c.

    Derived from the matrices themselves (f_abc = Tr([l_a, l_b] l_c) / 4i)
    rather than transcribed from a table.
    """
    return _structure_constants().copy()


@lru_cache(maxsize=1)
def _structure_constants() -> np.ndarray:
    f = np.zeros((8, 8, 8))
    for a in range(8):
        for b in range(a + 1, 8):
            comm = GELL_MANN[a] @ GELL_MANN[b] - GELL_MANN[b] @ GELL_MANN[a]
            for c in range(8):
                val = np.trace(comm @ GELL_MANN[c]) / 4j
                f[a, b, c] = val.real
                f[b, a, c] = -val.real
    f.setflags(write=False)
    return f


@dataclass(frozen=True, eq=False)
class GellMannBasis:
    """The eight generator matrices together with their structure constants."""

    matrices: tuple[np.ndarray, ...]
    f: np.ndarray


def gell_mann_basis() -> GellMannBasis:
    return GellMannBasis(matrices=GELL_MANN, f=_structure_constants())


@dataclass(frozen=True)
class MultipletLabel3:
    """(t3, y) with the multiplet shape tag; stored exactly (doubled / tripled)."""

    twice_t3: int
    three_y: int
    multiplet: tuple[int, int]

    @property
    def t3(self) -> Fraction:
        return Fraction(self.twice_t3, 2)

    @property
    def y(self) -> Fraction:
        return Fraction(self.three_y, 3)


def t3_y_label(occ) -> MultipletLabel3:
    """Label a three-mode number state; the multiplet is (total photons, 0)."""
    occ = tuple(occ)
    if len(occ) != 3:
        raise ValueError(f"expected a three-mode occupation, got {occ}")
    n, l, m = occ
    if n < 0 or l < 0 or m < 0:
        raise ValueError(f"negative photon count in {occ}")
    return MultipletLabel3(twice_t3=n - l, three_y=n + l - 2 * m, multiplet=(n + l + m, 0))


def enumerate_multiplet(n: int) -> list[tuple[Occupation, MultipletLabel3]]:
    """The (n, 0) multiplet: every n-photon occupation with its (t3, y) label.

    Sorted top-to-bottom on the t3-y plane (y descending, t3 ascending); the
    count is the triangular dimension (n+1)(n+2)/2.
    """
    if n < 0:
        raise ValueError("photon number must be non-negative")
    rows = [(occ, t3_y_label(occ)) for occ in occupations(3, n)]
    rows.sort(key=lambda r: (-r[1].y, r[1].t3))
    return rows


@dataclass(frozen=True, eq=False)
class Su3GeneratorSet:
    """Bosonic su(3) generators realized on a truncated three-mode Fock basis.

    The ladder and diagonal combinations satisfy t_plus = f[0] + i f[1],
    u_plus = f[5] + i f[6], v_plus = f[3] + i f[4], t3 = f[2],
    y = (2/sqrt 3) f[7] by construction.
    """

    basis: tuple[Occupation, ...]
    f: tuple[np.ndarray, ...]
    t_plus: np.ndarray
    t_minus: np.ndarray
    u_plus: np.ndarray
    u_minus: np.ndarray
    v_plus: np.ndarray
    v_minus: np.ndarray
    t3: np.ndarray
    y: np.ndarray


def su3_generators(max_total_photons: int) -> Su3GeneratorSet:
    """Realize F_1..F_8 and the T/U/V ladders on occupations with total <= max."""
    if max_total_photons < 1:
        raise ValueError("need at least one photon for a non-trivial basis")
    basis = truncated_basis(3, max_total_photons)
    f = tuple(bilinear_matrix(0.5 * lam, basis) for lam in GELL_MANN)

    def hop(i: int, j: int) -> np.ndarray:
        e = np.zeros((3, 3), dtype=complex)
        e[i, j] = 1.0
        return bilinear_matrix(e, basis)

    return Su3GeneratorSet(
        basis=tuple(basis),
        f=f,
        t_plus=hop(0, 1),
        t_minus=hop(1, 0),
        u_plus=hop(1, 2),
        u_minus=hop(2, 1),
        v_plus=hop(0, 2),
        v_minus=hop(2, 0),
        t3=f[2],
        y=(2.0 * _INV_SQRT3) * f[7],
    )


def _exp_diag_13(t: float) -> np.ndarray:
    """exp(i t lambda_3) = diag(e^{it}, e^{-it}, 1)."""
    return np.diag([cmath.exp(1j * t), cmath.exp(-1j * t), 1.0])


def _exp_rot_12(t: float) -> np.ndarray:
    """exp(i t lambda_2): a real rotation in the (1,2) mode plane."""
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, s, 0], [-s, c, 0], [0, 0, 1]], dtype=complex)


def _exp_rot_13(t: float) -> np.ndarray:
    """exp(i t lambda_5): a real rotation in the (1,3) mode plane."""
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]], dtype=complex)


def _exp_diag_8(t: float) -> np.ndarray:
    """exp(i t lambda_8) = diag(e^{it/sqrt3}, e^{it/sqrt3}, e^{-2it/sqrt3})."""
    w = cmath.exp(1j * t * _INV_SQRT3)
    return np.diag([w, w, cmath.exp(-2j * t * _INV_SQRT3)])


def su3_euler(
    alpha: float,
    beta: float,
    gamma: float,
    theta: float,
    a: float,
    b: float,
    c: float,
    phi: float,
) -> ModeUnitary:
    """Eight-angle Euler-style product of generator exponentials.

    U = e^{i l3 alpha} e^{i l2 beta} e^{i l3 gamma} e^{i l5 theta}
        e^{i l3 a} e^{i l2 b} e^{i l3 c} e^{i l8 phi}

    Every factor has a closed form (plane rotation or diagonal phase), so the
    product is det-1 unitary to machine precision and the all-zero angle
    tuple gives the identity exactly.
    """
    u = _exp_diag_13(alpha)
    u = u @ _exp_rot_12(beta)
    u = u @ _exp_diag_13(gamma)
    u = u @ _exp_rot_13(theta)
    u = u @ _exp_diag_13(a)
    u = u @ _exp_rot_12(b)
    u = u @ _exp_diag_13(c)
    u = u @ _exp_diag_8(phi)
    return ModeUnitary(3, u)


def su3_adjoint(u: ModeUnitary) -> np.ndarray:
    """The 8x8 rotation a tritter induces on the generator space.

    R_ij = (1/2) Tr(U+ lambda_i U lambda_j); R is real orthogonal with
    det +1 and satisfies the lifted-generator defining relation checked by
    the test suite.
    """
    if u.dim != 3:
        raise ValueError(f"expected a 3x3 unitary, got dim {u.dim}")
    m = u.matrix
    r = np.empty((8, 8))
    for i in range(8):
        conj = m.conj().T @ GELL_MANN[i] @ m
        for j in range(8):
            val = 0.5 * np.trace(conj @ GELL_MANN[j])
            r[i, j] = val.real
    return r
