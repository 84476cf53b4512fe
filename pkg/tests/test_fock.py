import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dense_bilinear
from fewphoton.errors import SchemaError
from fewphoton.fock import (
    NORM_TOL,
    PRUNE_TOL,
    PureState,
    annihilate,
    create,
    inner_product,
    occupations,
    total_photon_sectors,
    vacuum,
)

SQRT2 = math.sqrt(2.0)


def test_vacuum_two_modes():
    v = vacuum(2)
    assert v.terms == {(0, 0): 1.0}
    assert v.norm() == 1.0
    assert v.is_normalized()


def test_vacuum_three_modes():
    assert vacuum(3).terms == {(0, 0, 0): 1.0}


def test_vacuum_rejects_zero_modes():
    with pytest.raises(ValueError):
        vacuum(0)


def test_create_on_vacuum():
    assert create(vacuum(2), 0).terms == {(1, 0): 1.0}


def test_create_ladder_coefficient():
    out = create(PureState(2, {(1, 0): 1.0}), 0)
    assert out.terms.keys() == {(2, 0)}
    assert out.amplitude((2, 0)) == pytest.approx(SQRT2, abs=1e-15)


def test_create_twice_then_normalize():
    s = create(create(vacuum(2), 0), 0).normalized()
    assert s.amplitude((2, 0)) == pytest.approx(1.0, abs=1e-15)
    assert len(s) == 1


def test_create_matches_dense_single_mode_matrix():
    # Independent oracle: dense a+ on a 1-mode basis truncated at 6 photons.
    a_dag = np.diag(np.sqrt(np.arange(1, 7)), -1)
    for n in range(6):
        out = create(PureState(1, {(n,): 1.0}), 0)
        expected = a_dag[:, n]
        for m in range(7):
            assert out.amplitude((m,)) == pytest.approx(expected[m], abs=1e-15)


def test_annihilate_vacuum_is_zero_state():
    out = annihilate(vacuum(2), 0)
    assert len(out) == 0
    assert out.norm() == 0.0


def test_annihilate_coefficient():
    out = annihilate(PureState(2, {(2, 0): 1.0}), 0)
    assert out.amplitude((1, 0)) == pytest.approx(SQRT2, abs=1e-15)


def test_annihilate_matches_dense_single_mode_matrix():
    a = np.diag(np.sqrt(np.arange(1, 7)), 1)
    for n in range(7):
        out = annihilate(PureState(1, {(n,): 1.0}), 0)
        for m in range(6):
            assert out.amplitude((m,)) == pytest.approx(a[m, n], abs=1e-15)


def test_annihilate_create_vacuum_round_trip():
    assert annihilate(create(vacuum(2), 0), 0).terms == {(0, 0): 1.0}


def test_mode_out_of_range():
    with pytest.raises(ValueError):
        create(vacuum(2), 2)
    with pytest.raises(ValueError):
        annihilate(vacuum(2), -1)


def test_number_conservation_against_bilinear_oracle(rng):
    # a_i+ a_j built from create/annihilate agrees with the dense oracle.
    for modes, total in ((2, 3), (3, 2)):
        basis = occupations(modes, total)
        h = rng.normal(size=(modes, modes)) + 1j * rng.normal(size=(modes, modes))
        oracle = dense_bilinear(h, modes, total)
        for col, occ in enumerate(basis):
            ket = PureState(modes, {occ: 1.0})
            acc: dict = {}
            for j in range(modes):
                low = annihilate(ket, j)
                for i in range(modes):
                    for o, amp in create(low, i).terms.items():
                        acc[o] = acc.get(o, 0j) + h[i, j] * amp
            for row, occ_out in enumerate(basis):
                assert acc.get(occ_out, 0j) == pytest.approx(oracle[row, col], abs=1e-12)


def test_inner_product_examples():
    assert inner_product(vacuum(2), vacuum(2)) == 1.0
    a = PureState(2, {(1, 0): 1.0})
    b = PureState(2, {(0, 1): 1.0})
    assert inner_product(a, b) == 0.0
    psi = PureState(2, {(1, 0): 1 / SQRT2, (0, 1): 1j / SQRT2})
    assert inner_product(psi, psi) == pytest.approx(1.0, abs=1e-15)


def test_inner_product_mode_mismatch():
    with pytest.raises(ValueError):
        inner_product(vacuum(2), vacuum(3))


occ2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
amp = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
state2 = st.dictionaries(occ2, amp, min_size=1, max_size=6).map(
    lambda t: PureState(2, t)
)


@given(a=state2, b=state2)
@settings(max_examples=80, deadline=None)
def test_inner_product_conjugate_symmetric(a, b):
    assert inner_product(a, b) == pytest.approx(
        inner_product(b, a).conjugate(), abs=1e-12
    )


@given(a=state2)
@settings(max_examples=80, deadline=None)
def test_inner_product_positive_definite(a):
    value = inner_product(a, a)
    assert value.imag == pytest.approx(0.0, abs=1e-14)
    if len(a) > 0:
        assert value.real > 0.0


@given(a=state2, b=state2, mode=st.integers(0, 1))
@settings(max_examples=80, deadline=None)
def test_create_annihilate_adjointness(a, b, mode):
    lhs = inner_product(a, create(b, mode))
    rhs = inner_product(annihilate(a, mode), b)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_commutator_is_identity_up_to_six_photons():
    for modes in (2, 3):
        for total in range(7):
            for occ in occupations(modes, total):
                ket = PureState(modes, {occ: 1.0})
                for k in range(modes):
                    forward = annihilate(create(ket, k), k)
                    backward = create(annihilate(ket, k), k)
                    assert forward.amplitude(occ) - backward.amplitude(occ) == pytest.approx(
                        1.0, abs=1e-12
                    )


def test_sectors_partition_example():
    s = PureState(2, {(1, 1): 0.5, (2, 0): 0.5j, (0, 0): -0.5})
    sectors = total_photon_sectors(s)
    assert set(sectors) == {0, 2}
    assert sectors[2].terms == {(1, 1): 0.5, (2, 0): 0.5j}
    assert sectors[0].terms == {(0, 0): -0.5}


def test_sectors_of_vacuum():
    sectors = total_photon_sectors(vacuum(2))
    assert set(sectors) == {0}
    assert sectors[0].terms == vacuum(2).terms


@given(a=state2)
@settings(max_examples=60, deadline=None)
def test_sectors_form_a_partition(a):
    sectors = total_photon_sectors(a)
    rebuilt: dict = {}
    for n, sec in sectors.items():
        for occ, ampl in sec.terms.items():
            assert sum(occ) == n
            assert occ not in rebuilt
            rebuilt[occ] = ampl
    assert rebuilt == a.terms


def test_single_sector_state():
    s = PureState(2, {(2, 0): 0.6, (1, 1): 0.8})
    assert list(total_photon_sectors(s)) == [2]


def test_pruning_threshold():
    s = PureState(2, {(0, 0): 1.0, (1, 1): PRUNE_TOL / 2})
    assert (1, 1) not in s.terms


def test_normalized_flag_tolerance():
    assert PureState(2, {(0, 0): 1.0 + NORM_TOL / 4}).is_normalized()
    assert not PureState(2, {(0, 0): 1.0 + 1e-4}).is_normalized()


def test_normalize_zero_state_rejected():
    with pytest.raises(ValueError):
        PureState(2, {}).normalized()


def test_invalid_occupations_rejected():
    with pytest.raises(ValueError):
        PureState(2, {(1,): 1.0})
    with pytest.raises(ValueError):
        PureState(2, {(-1, 0): 1.0})


def test_json_round_trip_and_term_order():
    s = PureState(2, {(1, 0): 0.6, (0, 1): 0.8j})
    doc = s.to_json_dict()
    assert [t["occ"] for t in doc["terms"]] == [[0, 1], [1, 0]]
    back = PureState.from_json_dict(json.loads(json.dumps(doc)))
    assert back.terms == s.terms


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"modes": 0, "terms": []},
        {"modes": 2, "terms": {}},
        {"modes": 2, "terms": [{"occ": [1], "re": 1.0, "im": 0.0}]},
        {"modes": 2, "terms": [{"occ": [1, -1], "re": 1.0, "im": 0.0}]},
        {"modes": 2, "terms": [{"occ": [1, 0], "re": "x", "im": 0.0}]},
    ],
)
def test_json_schema_errors(doc):
    with pytest.raises(SchemaError):
        PureState.from_json_dict(doc)


def test_occupations_order_and_count():
    assert occupations(2, 1) == [(1, 0), (0, 1)]
    assert occupations(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert occupations(2, 2) == [(2, 0), (1, 1), (0, 2)]
    for n in range(6):
        assert len(occupations(3, n)) == (n + 1) * (n + 2) // 2
        assert len(occupations(2, n)) == n + 1


def test_states_are_immutable():
    s = vacuum(2)
    with pytest.raises(AttributeError):
        s.modes = 3
    s.terms[(1, 1)] = 1.0
    assert (1, 1) not in s.terms
