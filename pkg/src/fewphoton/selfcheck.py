"""Built-in invariant suite behind the `selfcheck` CLI subcommand.

Each check is a deterministic, seeded verification of one structural
property; together they exercise the algebra, the lift, and the
teleportation protocol without needing the test suite installed.
"""

from __future__ import annotations

import numpy as np

from . import scissors as sc
from .fock import PureState, annihilate, create, inner_product, occupations, total_photon_sectors
from .lift import ModeUnitary, apply_mode_unitary, lift_matrix
from .su2 import casimir_eigenvalue, multiplet_label, schwinger_generators, su2_adjoint
from .su3 import GELL_MANN, structure_constants, su3_adjoint, su3_euler, su3_generators, t3_y_label


def _random_unitary(rng, dim: int, special: bool = False) -> ModeUnitary:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    q = q @ np.diag(np.diag(r) / np.abs(np.diag(r)))
    if special:
        q = q / np.linalg.det(q) ** (1.0 / dim)
    return ModeUnitary(dim, q)


def _random_state(rng, modes: int, max_total: int) -> PureState:
    terms = {}
    for n in range(max_total + 1):
        for occ in occupations(modes, n):
            terms[occ] = complex(rng.normal(), rng.normal())
    return PureState(modes, terms).normalized()


def _sector_slices(basis) -> list[slice]:
    slices, start = [], 0
    totals = [sum(occ) for occ in basis]
    for n in range(totals[-1] + 1):
        size = totals.count(n)
        slices.append(slice(start, start + size))
        start += size
    return slices


def check_fock_adjointness() -> bool:
    rng = np.random.default_rng(11)
    for modes in (2, 3):
        for _ in range(5):
            a = _random_state(rng, modes, 4)
            b = _random_state(rng, modes, 3)
            for k in range(modes):
                lhs = inner_product(a, create(b, k))
                rhs = inner_product(annihilate(a, k), b)
                if abs(lhs - rhs) > 1e-12:
                    return False
    return True


def check_fock_commutator() -> bool:
    for modes in (2, 3):
        for n in range(7):
            for occ in occupations(modes, n):
                ket = PureState(modes, {occ: 1.0})
                for k in range(modes):
                    diff = annihilate(create(ket, k), k).amplitude(occ) - create(
                        annihilate(ket, k), k
                    ).amplitude(occ)
                    if abs(diff - 1.0) > 1e-12:
                        return False
    return True


def check_fock_sectors() -> bool:
    rng = np.random.default_rng(12)
    state = _random_state(rng, 3, 4)
    sectors = total_photon_sectors(state)
    rebuilt: dict = {}
    for n, sec in sectors.items():
        for occ, amp in sec.terms.items():
            if sum(occ) != n or occ in rebuilt:
                return False
            rebuilt[occ] = amp
    return rebuilt == state.terms


def check_lift_identity() -> bool:
    rng = np.random.default_rng(13)
    state = _random_state(rng, 2, 4)
    out = apply_mode_unitary(ModeUnitary(2, np.eye(2)), state)
    return all(abs(out.amplitude(o) - a) < 1e-12 for o, a in state.terms.items())


def check_lift_unitarity() -> bool:
    rng = np.random.default_rng(14)
    for dim in (2, 3):
        u = _random_unitary(rng, dim)
        for n in range(5):
            m = lift_matrix(u, n)
            if np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) > 1e-10:
                return False
    return True


def check_lift_homomorphism() -> bool:
    rng = np.random.default_rng(15)
    for dim in (2, 3):
        for _ in range(5):
            u1, u2 = _random_unitary(rng, dim), _random_unitary(rng, dim)
            prod = ModeUnitary(dim, u1.matrix @ u2.matrix)
            for n in (2, 3):
                if np.max(np.abs(lift_matrix(prod, n) - lift_matrix(u1, n) @ lift_matrix(u2, n))) > 1e-10:
                    return False
    return True


def check_lift_conservation() -> bool:
    rng = np.random.default_rng(16)
    u = _random_unitary(rng, 2)
    for n in range(5):
        for occ in occupations(2, n):
            out = apply_mode_unitary(u, PureState(2, {occ: 1.0}))
            if out.total_photons() != {n}:
                return False
    return True


def check_hom_null() -> bool:
    bs = ModeUnitary(2, np.array([[1, 1], [-1, 1]]) / np.sqrt(2))
    out = apply_mode_unitary(bs, PureState(2, {(1, 1): 1.0}))
    return abs(out.amplitude((1, 1))) <= 1e-12


def check_su2_commutators() -> bool:
    g = schwinger_generators(4)
    trios = [(g.l1, g.l2, g.l3), (g.l2, g.l3, g.l1), (g.l3, g.l1, g.l2)]
    for x, y, z in trios:
        if np.max(np.abs(x @ y - y @ x - 1j * z)) > 1e-12:
            return False
    if np.max(np.abs(g.l_plus @ g.l_minus - g.l_minus @ g.l_plus - 2 * g.l3)) > 1e-12:
        return False
    return np.max(np.abs(g.l3 @ g.l_plus - g.l_plus @ g.l3 - g.l_plus)) <= 1e-12


def check_su2_casimir() -> bool:
    g = schwinger_generators(4)
    l_sq = g.l1 @ g.l1 + g.l2 @ g.l2 + g.l3 @ g.l3
    if np.max(np.abs(l_sq - np.diag(np.diag(l_sq)))) > 1e-12:
        return False
    for i, occ in enumerate(g.basis):
        label = multiplet_label(occ)
        if abs(l_sq[i, i] - float(casimir_eigenvalue(label.l))) > 1e-12:
            return False
    return True


def check_su2_adjoint_orthogonal() -> bool:
    rng = np.random.default_rng(17)
    for _ in range(10):
        o = su2_adjoint(_random_unitary(rng, 2, special=True))
        if np.max(np.abs(o.T @ o - np.eye(3))) > 1e-10 or abs(np.linalg.det(o) - 1) > 1e-10:
            return False
    return True


def check_su2_adjoint_defining() -> bool:
    rng = np.random.default_rng(18)
    u = _random_unitary(rng, 2, special=True)
    o = su2_adjoint(u)
    g = schwinger_generators(4)
    gens = (g.l1, g.l2, g.l3)
    for n, sl in enumerate(_sector_slices(g.basis)):
        lam = lift_matrix(u, n)
        for k in range(3):
            lhs = lam.conj().T @ gens[k][sl, sl] @ lam
            rhs = sum(o[k, l] * gens[l][sl, sl] for l in range(3))
            if np.max(np.abs(lhs - rhs)) > 1e-10:
                return False
    return True


def check_gell_mann_identities() -> bool:
    for a in range(8):
        lam = GELL_MANN[a]
        if np.max(np.abs(lam - lam.conj().T)) != 0 or np.trace(lam) != 0:
            return False
        for b in range(8):
            if abs(np.trace(GELL_MANN[a] @ GELL_MANN[b]) - 2.0 * (a == b)) > 1e-15:
                return False
    f = structure_constants()
    return abs(f[0, 1, 2] - 1.0) < 1e-15


def check_su3_commutators() -> bool:
    g = su3_generators(4)
    f = structure_constants()
    for a in range(8):
        for b in range(a + 1, 8):
            comm = g.f[a] @ g.f[b] - g.f[b] @ g.f[a]
            expect = 1j * sum(f[a, b, c] * g.f[c] for c in range(8))
            if np.max(np.abs(comm - expect)) > 1e-12:
                return False
    return True


def check_su3_ladders() -> bool:
    g = su3_generators(4)
    shifts = {
        "t_plus": (1, 0), "t_minus": (-1, 0),
        "u_plus": (-0.5, 1), "u_minus": (0.5, -1),
        "v_plus": (0.5, 1), "v_minus": (-0.5, -1),
    }
    index = {occ: i for i, occ in enumerate(g.basis)}
    for name, (dt3, dy) in shifts.items():
        mat = getattr(g, name)
        for col, occ in enumerate(g.basis):
            src = t3_y_label(occ)
            for row in range(len(g.basis)):
                if abs(mat[row, col]) < 1e-13:
                    continue
                dst = t3_y_label(g.basis[row])
                if float(dst.t3 - src.t3) != dt3 or float(dst.y - src.y) != dy:
                    return False
    return True


def check_su3_euler() -> bool:
    rng = np.random.default_rng(19)
    if np.max(np.abs(su3_euler(0, 0, 0, 0, 0, 0, 0, 0).matrix - np.eye(3))) != 0:
        return False
    for _ in range(100):
        u = su3_euler(*rng.uniform(-np.pi, np.pi, size=8))
        if np.max(np.abs(u.matrix.conj().T @ u.matrix - np.eye(3))) > 1e-12:
            return False
        if abs(np.linalg.det(u.matrix) - 1.0) > 1e-12:
            return False
    return True


def check_su3_adjoint_orthogonal() -> bool:
    rng = np.random.default_rng(20)
    for _ in range(10):
        r = su3_adjoint(_random_unitary(rng, 3))
        if np.max(np.abs(r.T @ r - np.eye(8))) > 1e-10 or abs(np.linalg.det(r) - 1) > 1e-10:
            return False
    return True


def check_su3_adjoint_defining() -> bool:
    rng = np.random.default_rng(21)
    u = _random_unitary(rng, 3)
    r = su3_adjoint(u)
    g = su3_generators(4)
    for n, sl in enumerate(_sector_slices(g.basis)):
        lam = lift_matrix(u, n)
        for i in range(8):
            lhs = lam.conj().T @ g.f[i][sl, sl] @ lam
            rhs = sum(r[i, j] * g.f[j][sl, sl] for j in range(8))
            if np.max(np.abs(lhs - rhs)) > 1e-10:
                return False
    return True


def check_scissors_completeness() -> bool:
    rng = np.random.default_rng(22)
    for _ in range(5):
        inp = sc.ScissorsInput.from_amplitudes(*(rng.normal(size=3) + 1j * rng.normal(size=3)))
        epr = sc.EprResource.from_coefficients(*(rng.normal(size=3) + 1j * rng.normal(size=3)))
        bs = _random_unitary(rng, 2)
        total = sum(r.probability for r in sc.run_scissors(inp, epr, bs))
        if abs(total - 1.0) > 1e-10:
            return False
    return True


def check_scissors_balanced() -> bool:
    rng = np.random.default_rng(23)
    sol = sc.solve_balanced()
    for _ in range(20):
        inp = sc.ScissorsInput.from_amplitudes(*(rng.normal(size=3) + 1j * rng.normal(size=3)))
        records = sc.run_scissors(inp, sol.epr, sol.beam_splitter)
        r11 = next(r for r in records if r.detector_counts == (1, 1))
        if abs(r11.probability - 1.0 / 9.0) > 1e-6:
            return False
        if sc.fidelity(r11.conditional_state, inp.state()) < 1.0 - 1e-8:
            return False
    return True


CHECKS = (
    ("fock.adjointness", check_fock_adjointness),
    ("fock.commutator", check_fock_commutator),
    ("fock.sector_partition", check_fock_sectors),
    ("lift.identity", check_lift_identity),
    ("lift.sector_unitarity", check_lift_unitarity),
    ("lift.homomorphism", check_lift_homomorphism),
    ("lift.photon_conservation", check_lift_conservation),
    ("lift.coincidence_null", check_hom_null),
    ("su2.commutators", check_su2_commutators),
    ("su2.casimir", check_su2_casimir),
    ("su2.adjoint_orthogonal", check_su2_adjoint_orthogonal),
    ("su2.adjoint_defining_relation", check_su2_adjoint_defining),
    ("su3.generator_identities", check_gell_mann_identities),
    ("su3.bosonic_commutators", check_su3_commutators),
    ("su3.ladder_geometry", check_su3_ladders),
    ("su3.euler_unitarity", check_su3_euler),
    ("su3.adjoint_orthogonal", check_su3_adjoint_orthogonal),
    ("su3.adjoint_defining_relation", check_su3_adjoint_defining),
    ("scissors.completeness", check_scissors_completeness),
    ("scissors.balanced_teleportation", check_scissors_balanced),
)


def run_selfcheck() -> list[tuple[str, bool]]:
    """Run every check; returns (name, passed) pairs in a fixed order."""
    return [(name, bool(fn())) for name, fn in CHECKS]
