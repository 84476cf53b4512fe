"""Lift an m x m mode unitary to its exact action on multimode Fock states.

Convention, fixed once for the whole package: the device maps annihilation
operators as b_i = sum_j U_ij a_j.  Rewriting a basis term as a product of
creation operators acting on vacuum therefore substitutes

    a_j+  ->  sum_i U_ij b_i+          (column j of U),

and the lifted state is read off from the expanded polynomial in the b+
operators.  Under this convention the one-photon sector matrix of the lift,
in the basis with the photon in mode 1 first, is U itself, and multiplying U
by a phase exp(i*phi) multiplies the n-photon sector by exp(i*n*phi).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SchemaError, ValidationError
from .fock import Occupation, PureState, occupations

#: Entrywise tolerance for U+U = I and for the det(U) = 1 flag.
UNITARY_TOL = 1e-12

#: Sectors with more photons than this are rejected to bound the multinomial
#: expansion; the protocols here never exceed 4.
MAX_SECTOR_PHOTONS = 12


@dataclass(frozen=True, eq=False)
class ModeUnitary:
    """An m x m complex matrix acting on mode annihilation operators.

    Any unitary is accepted; `special` records whether det U = 1.  Physical
    couplers differ from det-1 matrices only by global phases, which never
    affect outcome probabilities.
    """

    dim: int
    matrix: np.ndarray
    special: bool = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.dim, self.dim):
            raise ValidationError(f"matrix shape {m.shape} does not match dim {self.dim}")
        err = np.max(np.abs(m.conj().T @ m - np.eye(self.dim)))
        if err > UNITARY_TOL:
            raise ValidationError(f"matrix is not unitary (max |U+U - I| = {err:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "special", bool(abs(np.linalg.det(m) - 1.0) <= UNITARY_TOL))

    @classmethod
    def from_matrix(cls, matrix) -> "ModeUnitary":
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValidationError(f"expected a square matrix, got shape {m.shape}")
        return cls(m.shape[0], m)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rows": [
                [{"re": z.real, "im": z.imag} for z in row] for row in self.matrix
            ],
        }

    @classmethod
    def from_json_dict(cls, doc) -> "ModeUnitary":
        if not isinstance(doc, dict):
            raise SchemaError("matrix document must be a JSON object")
        dim = doc.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise SchemaError("field 'dim' must be a positive integer")
        rows = doc.get("rows")
        if not isinstance(rows, list) or len(rows) != dim:
            raise SchemaError(f"field 'rows' must be a list of {dim} rows")
        m = np.zeros((dim, dim), dtype=complex)
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != dim:
                raise SchemaError(f"field 'rows[{i}]' must be a list of {dim} entries")
            for j, entry in enumerate(row):
                if not isinstance(entry, dict):
                    raise SchemaError(f"field 'rows[{i}][{j}]' must be an object")
                re, im = entry.get("re"), entry.get("im")
                if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
                    raise SchemaError(
                        f"field 'rows[{i}][{j}].re'/'rows[{i}][{j}].im' must be numbers"
                    )
                m[i, j] = complex(re, im)
        return cls(dim, m)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        out.extend((first,) + rest for rest in _compositions(total - first, parts - 1))
    return out


def apply_mode_unitary(u: ModeUnitary, state: PureState, mode_offset: int = 0) -> PureState:
    """Act with a mode unitary on `u.dim` consecutive modes of a normalized state.

    Each basis term is expanded as a creation-operator monomial, the operators
    on the addressed modes are substituted by their U-transformed combinations,
    and the polynomial is collected back into occupation terms.  Modes outside
    the addressed window are untouched; total photon number is conserved.
    """
    if not 0 <= mode_offset <= state.modes - u.dim:
        raise ValueError(
            f"offset {mode_offset} does not fit a {u.dim}-mode unitary in {state.modes} modes"
        )
    if not state.is_normalized():
        raise ValidationError("input state must be normalized")

    d = u.dim
    mat = u.matrix
    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        block = occ[mode_offset : mode_offset + d]
        n_block = sum(block)
        if n_block > MAX_SECTOR_PHOTONS:
            raise ValueError(
                f"term {occ} carries {n_block} photons in the addressed window "
                f"(cap {MAX_SECTOR_PHOTONS})"
            )
        base = amp / math.sqrt(math.prod(math.factorial(n) for n in block))
        # One composition per input mode: how its n_j quanta spread over the
        # output modes.  (sum_i U_ij b_i+)^n_j expands with multinomial weights.
        per_mode = [_compositions(block[j], d) for j in range(d)]
        for choice in itertools.product(*per_mode):
            coeff = base
            counts = [0] * d
            for j, split in enumerate(choice):
                coeff *= math.factorial(block[j])
                for i, k in enumerate(split):
                    if k:
                        coeff *= mat[i, j] ** k / math.factorial(k)
                    counts[i] += k
            coeff *= math.sqrt(math.prod(math.factorial(k) for k in counts))
            new = occ[:mode_offset] + tuple(counts) + occ[mode_offset + d :]
            out[new] = out.get(new, 0j) + coeff
    return PureState(state.modes, out)


def lift_matrix(u: ModeUnitary, total_photons: int, modes: int | None = None) -> np.ndarray:
    """Dense matrix of the lift on the fixed-photon-number sector.

    Basis: occupation vectors with the given total, leading mode descending
    (see `fock.occupations`).  On the one-photon sector this returns U itself.
    """
    if total_photons < 0:
        raise ValueError("total_photons must be non-negative")
    if modes is None:
        modes = u.dim
    if modes != u.dim:
        raise ValueError(f"sector modes {modes} must equal the unitary dimension {u.dim}")
    basis = occupations(modes, total_photons)
    index = {occ: i for i, occ in enumerate(basis)}
    m = np.zeros((len(basis), len(basis)), dtype=complex)
    for j, occ in enumerate(basis):
        image = apply_mode_unitary(u, PureState(modes, {occ: 1.0}))
        for out_occ, amp in image.terms.items():
            m[index[out_occ], j] = amp
    return m
