"""Sparse multimode photon-number states and elementary mode operators.

A state is a sparse map from occupation tuples (photons per mode) to complex
amplitudes.  Everything here is exact desk-scale arithmetic: states on two or
three modes with a handful of photons have only a few nonzero terms, so a
dict beats any dense tensor.  All values are immutable after construction and
every operation returns a new state.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping

from .errors import SchemaError

#: Amplitudes at or below this magnitude are dropped after arithmetic.
#: Roughly 100x machine epsilon, above accumulation noise.
PRUNE_TOL = 1e-14

#: A state counts as normalized when | sum |amp|^2 - 1 | is below this.
NORM_TOL = 1e-10

Occupation = tuple[int, ...]


def _check_occupation(occ, modes: int) -> Occupation:
    occ = tuple(occ)
    if len(occ) != modes:
        raise ValueError(f"occupation {occ} has length {len(occ)}, expected {modes}")
    for n in occ:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"occupation {occ} has invalid photon count {n!r}")
    return occ


class PureState:
    """Sparse superposition of photon-number basis states on a fixed mode count.

    Terms with magnitude <= PRUNE_TOL are dropped on construction.  The zero
    state (no terms) is a legal value: annihilating the vacuum produces it.
    """

    __slots__ = ("modes", "_terms")

    def __init__(self, modes: int, terms: Mapping[Occupation, complex] | Iterable = ()):
        if modes < 1:
            raise ValueError("a state needs at least one mode")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Occupation, complex] = {}
        for occ, amp in items:
            occ = _check_occupation(occ, modes)
            amp = complex(amp)
            if abs(amp) > PRUNE_TOL:
                clean[occ] = amp
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PureState is immutable")

    @property
    def terms(self) -> dict[Occupation, complex]:
        """Copy of the term map; mutating it does not affect the state."""
        return dict(self._terms)

    def amplitude(self, occ) -> complex:
        return self._terms.get(tuple(occ), 0j)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Occupation, complex]]:
        return iter(sorted(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{occ}: {amp:.4g}" for occ, amp in self)
        return f"PureState(modes={self.modes}, {{{body}}})"

    def norm_squared(self) -> float:
        return sum(abs(a) ** 2 for a in self._terms.values())

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm_squared() - 1.0) <= tol

    def normalized(self) -> "PureState":
        """Rescale to unit norm.  The zero state cannot be normalized."""
        n = self.norm()
        if n <= PRUNE_TOL:
            raise ValueError("cannot normalize the zero state")
        return PureState(self.modes, {o: a / n for o, a in self._terms.items()})

    def scaled(self, factor: complex) -> "PureState":
        return PureState(self.modes, {o: a * factor for o, a in self._terms.items()})

    def total_photons(self) -> set[int]:
        """Set of total photon numbers appearing in the support."""
        return {sum(occ) for occ in self._terms}

    def to_json_dict(self) -> dict:
        """JSON form: occupation terms sorted lexicographically, re/im split."""
        return {
            "modes": self.modes,
            "terms": [
                {"occ": list(occ), "re": amp.real, "im": amp.imag}
                for occ, amp in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, doc) -> "PureState":
        if not isinstance(doc, dict):
            raise SchemaError("state document must be a JSON object")
        modes = doc.get("modes")
        if not isinstance(modes, int) or modes < 1:
            raise SchemaError("field 'modes' must be a positive integer")
        raw = doc.get("terms")
        if not isinstance(raw, list):
            raise SchemaError("field 'terms' must be a list")
        terms = {}
        for i, entry in enumerate(raw):
            if not isinstance(entry, dict):
                raise SchemaError(f"field 'terms[{i}]' must be an object")
            occ = entry.get("occ")
            if (
                not isinstance(occ, list)
                or len(occ) != modes
                or any(not isinstance(n, int) or n < 0 for n in occ)
            ):
                raise SchemaError(
                    f"field 'terms[{i}].occ' must be a list of {modes} non-negative integers"
                )
            re, im = entry.get("re"), entry.get("im")
            if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
                raise SchemaError(f"field 'terms[{i}].re'/'terms[{i}].im' must be numbers")
            terms[tuple(occ)] = complex(re, im)
        return cls(modes, terms)


def vacuum(modes: int) -> PureState:
    """The all-zero occupation state with amplitude 1."""
    if modes < 1:
        raise ValueError("vacuum needs at least one mode")
    return PureState(modes, {(0,) * modes: 1.0})


def create(state: PureState, mode: int) -> PureState:
    """Apply the creation operator on one mode: |n> -> sqrt(n+1) |n+1>.

    The result is generally unnormalized.
    """
    if not 0 <= mode < state.modes:
        raise ValueError(f"mode {mode} out of range for {state.modes}-mode state")
    out: dict[Occupation, complex] = {}
    for occ, amp in state._terms.items():
        n = occ[mode]
        new = occ[:mode] + (n + 1,) + occ[mode + 1 :]
        out[new] = out.get(new, 0j) + amp * math.sqrt(n + 1)
    return PureState(state.modes, out)


def annihilate(state: PureState, mode: int) -> PureState:
    """Apply the annihilation operator on one mode: |n> -> sqrt(n) |n-1>.

    Terms with no photon in the mode vanish; the zero state is a valid result.
    """
    if not 0 <= mode < state.modes:
        raise ValueError(f"mode {mode} out of range for {state.modes}-mode state")
    out: dict[Occupation, complex] = {}
    for occ, amp in state._terms.items():
        n = occ[mode]
        if n == 0:
            continue
        new = occ[:mode] + (n - 1,) + occ[mode + 1 :]
        out[new] = out.get(new, 0j) + amp * math.sqrt(n)
    return PureState(state.modes, out)


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b> = sum over shared occupations of conj(a) * b."""
    if a.modes != b.modes:
        raise ValueError(f"mode counts differ: {a.modes} vs {b.modes}")
    small, large = (a._terms, b._terms) if len(a) <= len(b) else (b._terms, a._terms)
    total = 0j
    for occ in small:
        if occ in large:
            total += a._terms[occ].conjugate() * b._terms[occ]
    return total


def total_photon_sectors(state: PureState) -> dict[int, PureState]:
    """Partition terms by total photon number; sectors are left unnormalized."""
    buckets: dict[int, dict[Occupation, complex]] = {}
    for occ, amp in state._terms.items():
        buckets.setdefault(sum(occ), {})[occ] = amp
    return {n: PureState(state.modes, t) for n, t in sorted(buckets.items())}


def occupations(modes: int, total: int) -> list[Occupation]:
    """All occupation vectors of `modes` modes with `total` photons.

    Ordered with the leading mode's count descending, i.e. (n,0,..), (n-1,1,..),
    ..., (0,..,n).  This is the basis order used for every fixed-photon-number
    sector matrix in the package; on the one-photon sector it puts the photon
    in mode 1 first, so sector matrices of a mode unitary reduce to the matrix
    itself there.
    """
    if modes < 1 or total < 0:
        raise ValueError("need modes >= 1 and total >= 0")
    if modes == 1:
        return [(total,)]
    out = []
    for n in range(total, -1, -1):
        out.extend((n,) + rest for rest in occupations(modes - 1, total - n))
    return out
