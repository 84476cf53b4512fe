import json
import math

import numpy as np
import pytest

from conftest import expm_lift, random_unitary
from fewphoton.errors import SchemaError, ValidationError
from fewphoton.fock import PureState, occupations, vacuum
from fewphoton.lift import (
    MAX_SECTOR_PHOTONS,
    ModeUnitary,
    apply_mode_unitary,
    lift_matrix,
)

SQRT2 = math.sqrt(2.0)
HOM_BS = ModeUnitary(2, np.array([[1, 1], [-1, 1]]) / SQRT2)


def test_mode_unitary_rejects_non_unitary():
    with pytest.raises(ValidationError):
        ModeUnitary(2, np.array([[1, 1], [0, 1]], dtype=complex))
    with pytest.raises(ValidationError):
        ModeUnitary(2, np.ones((3, 3)))


def test_special_flag():
    assert HOM_BS.special
    assert not ModeUnitary(2, 1j * np.eye(2)).special
    assert ModeUnitary.from_matrix(np.eye(3)).special


def test_mode_unitary_json_round_trip():
    doc = HOM_BS.to_json_dict()
    back = ModeUnitary.from_json_dict(json.loads(json.dumps(doc)))
    assert back.dim == 2
    assert np.array_equal(back.matrix, HOM_BS.matrix)


@pytest.mark.parametrize(
    "doc",
    [
        42,
        {"dim": 2, "rows": [[{"re": 1, "im": 0}]]},
        {"dim": 1, "rows": [["nope"]]},
        {"dim": 1, "rows": [[{"re": "x", "im": 0}]]},
    ],
)
def test_mode_unitary_schema_errors(doc):
    with pytest.raises(SchemaError):
        ModeUnitary.from_json_dict(doc)


def test_identity_lift_preserves_state(rng):
    amps = rng.normal(size=4) + 1j * rng.normal(size=4)
    occs = [(0, 0), (1, 1), (2, 0), (0, 3)]
    state = PureState(2, dict(zip(occs, amps))).normalized()
    out = apply_mode_unitary(ModeUnitary(2, np.eye(2)), state)
    for occ, amp in state.terms.items():
        assert out.amplitude(occ) == pytest.approx(amp, abs=1e-14)


def test_two_photon_coincidence_interference():
    # Balanced coupler on |1,1>: the coincidence amplitude cancels exactly and
    # the photons bunch, +1/sqrt2 on (2,0) and -1/sqrt2 on (0,2).
    out = apply_mode_unitary(HOM_BS, PureState(2, {(1, 1): 1.0}))
    assert abs(out.amplitude((1, 1))) <= 1e-12
    assert out.amplitude((2, 0)) == pytest.approx(1 / SQRT2, abs=1e-14)
    assert out.amplitude((0, 2)) == pytest.approx(-1 / SQRT2, abs=1e-14)


def test_mode_swap_with_phase():
    swap = ModeUnitary(2, np.array([[0, 1j], [1j, 0]]))
    assert swap.special
    out = apply_mode_unitary(swap, PureState(2, {(2, 0): 1.0}))
    assert out.amplitude((0, 2)) == pytest.approx(-1.0, abs=1e-14)
    assert abs(out.amplitude((0, 2))) ** 2 == pytest.approx(1.0, abs=1e-14)


def test_apply_requires_normalized_state():
    with pytest.raises(ValidationError):
        apply_mode_unitary(HOM_BS, PureState(2, {(1, 0): 2.0}))


def test_apply_offset_out_of_range():
    with pytest.raises(ValueError):
        apply_mode_unitary(HOM_BS, vacuum(2), 1)
    with pytest.raises(ValueError):
        apply_mode_unitary(HOM_BS, vacuum(3), -1)


def test_apply_offset_addresses_trailing_modes(rng):
    u = random_unitary(rng, 2)
    state = PureState(3, {(2, 1, 0): 1.0})
    out = apply_mode_unitary(u, state, 1)
    for occ in out.terms:
        assert occ[0] == 2
        assert occ[1] + occ[2] == 1


def test_photon_cap_rejected():
    over = PureState(2, {(MAX_SECTOR_PHOTONS + 1, 0): 1.0})
    with pytest.raises(ValueError):
        apply_mode_unitary(HOM_BS, over)


def test_lift_matrix_vacuum_sector(rng):
    u = random_unitary(rng, 2)
    assert np.array_equal(lift_matrix(u, 0), np.array([[1.0 + 0j]]))


def test_lift_matrix_single_photon_is_the_matrix(rng):
    for dim in (2, 3):
        u = random_unitary(rng, dim)
        assert np.max(np.abs(lift_matrix(u, 1) - u.matrix)) < 1e-14


def test_lift_matrix_sector_dimensions(rng):
    assert lift_matrix(random_unitary(rng, 2), 2).shape == (3, 3)
    assert lift_matrix(random_unitary(rng, 3), 2).shape == (6, 6)


def test_lift_matrix_rejects_mode_mismatch(rng):
    with pytest.raises(ValueError):
        lift_matrix(random_unitary(rng, 2), 2, modes=3)


def test_sector_unitarity(rng):
    for dim in (2, 3):
        u = random_unitary(rng, dim)
        for n in range(5):
            m = lift_matrix(u, n)
            assert np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) < 1e-10


def test_homomorphism(rng):
    for dim in (2, 3):
        for _ in range(10):
            u1 = random_unitary(rng, dim)
            u2 = random_unitary(rng, dim)
            u12 = ModeUnitary(dim, u1.matrix @ u2.matrix)
            for n in range(5):
                lhs = lift_matrix(u12, n)
                rhs = lift_matrix(u1, n) @ lift_matrix(u2, n)
                assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_photon_number_conservation(rng):
    for dim in (2, 3):
        u = random_unitary(rng, dim)
        for n in range(5):
            for occ in occupations(dim, n):
                out = apply_mode_unitary(u, PureState(dim, {occ: 1.0}))
                assert out.total_photons() == {n}


def test_norm_preservation(rng):
    for dim in (2, 3):
        u = random_unitary(rng, dim)
        for _ in range(5):
            terms = {}
            for n in range(5):
                for occ in occupations(dim, n):
                    terms[occ] = complex(rng.normal(), rng.normal())
            state = PureState(dim, terms).normalized()
            out = apply_mode_unitary(u, state)
            assert out.norm() == pytest.approx(1.0, abs=1e-10)


def test_global_phase_covariance(rng):
    u = random_unitary(rng, 2)
    phi = 0.7368
    phased = ModeUnitary(2, np.exp(1j * phi) * u.matrix)
    for n in range(5):
        base = lift_matrix(u, n)
        lifted = lift_matrix(phased, n)
        assert np.max(np.abs(lifted - np.exp(1j * n * phi) * base)) < 1e-10
        assert np.max(np.abs(np.abs(lifted) ** 2 - np.abs(base) ** 2)) < 1e-10


def test_agrees_with_matrix_exponential_oracle(rng):
    for dim in (2, 3):
        for _ in range(5):
            u = random_unitary(rng, dim)
            for n in range(1, 5):
                expected = expm_lift(u.matrix, n, dim)
                assert np.max(np.abs(lift_matrix(u, n) - expected)) < 1e-10
