"""Post-selected teleportation of a 0/1/2-photon superposition.

The sender holds a0|0> + a1|1> + a2|2> in mode 1 and shares with the
receiver a two-photon entangled resource spread over modes 2 and 3.  Modes
1 and 2 interfere on a beam splitter whose outputs hit ideal photon-number
counters; detecting the coincidence pattern (1,1) leaves mode 3 carrying the
input superposition.  Grouping detector patterns by their two-mode multiplet
label exposes why: only the two-detector-photon multiplets receive
contributions from all three input amplitudes, and the coupler and resource
can be balanced so those three contributions share a single coefficient of
magnitude 1/3, making the success probability exactly 1/9 for every input.

Mode layout throughout: 0 = input, 1 = resource half at the coupler,
2 = resource half kept by the receiver.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import ConvergenceError, ValidationError
from .fock import NORM_TOL, PureState, inner_product
from .lift import ModeUnitary, apply_mode_unitary
from .su2 import MultipletLabel2

_SQRT2 = math.sqrt(2.0)

#: Residual below which a balanced-parameter search counts as converged.
BALANCE_TOL = 1e-8


@dataclass(frozen=True)
class ScissorsInput:
    """Normalized amplitudes of |0>, |1>, |2> in the input mode."""

    a0: complex
    a1: complex
    a2: complex
    renormalized: bool = False

    def __post_init__(self):
        total = abs(self.a0) ** 2 + abs(self.a1) ** 2 + abs(self.a2) ** 2
        if abs(total - 1.0) > NORM_TOL:
            raise ValidationError(f"input amplitudes have norm^2 = {total}, expected 1")

    @classmethod
    def from_amplitudes(cls, a0, a1, a2) -> "ScissorsInput":
        a = (complex(a0), complex(a1), complex(a2))
        norm = math.sqrt(sum(abs(z) ** 2 for z in a))
        if norm == 0.0:
            raise ValueError("input amplitudes are all zero")
        rescaled = abs(norm - 1.0) > NORM_TOL
        return cls(a[0] / norm, a[1] / norm, a[2] / norm, renormalized=rescaled)

    def amplitudes(self) -> tuple[complex, complex, complex]:
        return (self.a0, self.a1, self.a2)

    def state(self) -> PureState:
        return PureState(1, {(0,): self.a0, (1,): self.a1, (2,): self.a2})


@dataclass(frozen=True)
class EprResource:
    """Normalized coefficients of |2,0>, |1,1>, |0,2> across the resource modes.

    Field names follow the two-mode ladder index of each term: the |2,0>,
    |1,1>, |0,2> components sit at l3 = -1, 0, +1 of the l = 1 multiplet.
    """

    c_minus1: complex
    c_0: complex
    c_1: complex
    renormalized: bool = False

    def __post_init__(self):
        total = abs(self.c_minus1) ** 2 + abs(self.c_0) ** 2 + abs(self.c_1) ** 2
        if abs(total - 1.0) > NORM_TOL:
            raise ValidationError(f"resource coefficients have norm^2 = {total}, expected 1")

    @classmethod
    def from_coefficients(cls, c_minus1, c_0, c_1) -> "EprResource":
        c = (complex(c_minus1), complex(c_0), complex(c_1))
        norm = math.sqrt(sum(abs(z) ** 2 for z in c))
        if norm == 0.0:
            raise ValueError("resource coefficients are all zero")
        rescaled = abs(norm - 1.0) > NORM_TOL
        return cls(c[0] / norm, c[1] / norm, c[2] / norm, renormalized=rescaled)

    def coefficients(self) -> tuple[complex, complex, complex]:
        return (self.c_minus1, self.c_0, self.c_1)

    def state(self) -> PureState:
        return PureState(2, {(2, 0): self.c_minus1, (1, 1): self.c_0, (0, 2): self.c_1})


def build_input(a0, a1, a2) -> PureState:
    """Normalized single-mode input state a0|0> + a1|1> + a2|2>."""
    return ScissorsInput.from_amplitudes(a0, a1, a2).state()


def build_epr(resource: EprResource) -> PureState:
    """Two-mode resource state over the coupler-side and receiver-side modes."""
    return resource.state()


@dataclass(frozen=True)
class OutcomeRecord:
    """One detector pattern with its probability and conditional receiver state."""

    detector_counts: tuple[int, int]
    probability: float
    conditional_state: PureState
    multiplet: MultipletLabel2


def _joint_state(inp: ScissorsInput, epr: EprResource) -> PureState:
    terms = {}
    for occ1, amp1 in inp.state().terms.items():
        for occ23, amp23 in epr.state().terms.items():
            terms[occ1 + occ23] = amp1 * amp23
    return PureState(3, terms)


def run_scissors(
    inp: ScissorsInput, epr: EprResource, bs: ModeUnitary
) -> list[OutcomeRecord]:
    """Run the protocol and enumerate every detector outcome.

    Returns all patterns (j, k) with nonzero probability, ordered by total
    detected photons and then by the second detector's count; the coincidence
    pattern (1, 1) is always included, with an empty conditional state if its
    probability vanishes.
    """
    if bs.dim != 2:
        raise ValueError(f"the coupler must be a 2x2 unitary, got dim {bs.dim}")
    mixed = apply_mode_unitary(bs, _joint_state(inp, epr), 0)

    by_pattern: dict[tuple[int, int], dict[tuple[int, ...], complex]] = {}
    for (j, k, m), amp in mixed.terms.items():
        by_pattern.setdefault((j, k), {})[(m,)] = amp
    by_pattern.setdefault((1, 1), {})

    records = []
    for (j, k), cond_terms in sorted(by_pattern.items(), key=lambda p: (sum(p[0]), p[0][1])):
        prob = sum(abs(a) ** 2 for a in cond_terms.values())
        cond = PureState(1, cond_terms)
        if prob > 0.0:
            cond = cond.normalized()
        records.append(
            OutcomeRecord(
                detector_counts=(j, k),
                probability=prob,
                conditional_state=cond,
                multiplet=MultipletLabel2(twice_l=j + k, twice_l3=k - j),
            )
        )
    return records


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2 for two normalized states on the same modes."""
    if a.modes != b.modes:
        raise ValueError(f"mode counts differ: {a.modes} vs {b.modes}")
    if not a.is_normalized() or not b.is_normalized():
        raise ValidationError("fidelity requires normalized states")
    return abs(inner_product(a, b)) ** 2


# Detector-pattern families of the measurement expansion.  The post-coupler
# state is a sum over (input photon number q, receiver photon number m) of
#
#    pref(q) * sum_k  coeff[k] * b2+^k b1+^(2l-k) * a3+^m  acting on vacuum,
#
# with 2l = q + 2 - m detected photons, pref = (a0, a1, a2/sqrt2)[q], and
# coeff depending only on the coupler and the resource.  The k-th slot is the
# ladder index l3 = k - l of the detector multiplet.
_FAMILY_KEYS = tuple((q, m) for q in range(3) for m in range(3))


def _input_prefactor(inp: ScissorsInput, q: int) -> complex:
    return (inp.a0, inp.a1, inp.a2 / _SQRT2)[q]


@dataclass(frozen=True, eq=False)
class OutcomeDecomposition:
    """Detector-multiplet coefficient families extracted from a protocol run.

    `coefficients` maps (input photons q, receiver photons m) to the family's
    coefficient list indexed by the second detector's count k (ladder index
    l3 = k - l, with 2l = q + 2 - m).  A family whose input amplitude is zero
    is undefined and stored as None, not as zeros.
    """

    coefficients: dict[tuple[int, int], tuple[complex, ...] | None]
    input: ScissorsInput
    epr: EprResource
    beam_splitter: ModeUnitary

    def detector_photons(self, q: int, m: int) -> int:
        return q + 2 - m

    def coincidence_coefficients(
        self,
    ) -> tuple[complex | None, complex | None, complex | None]:
        """The three l3 = 0 coefficients feeding the (1,1) coincidence outcome.

        One per input amplitude, from the families (q, m) = (0,0), (1,1),
        (2,2); all three equal in magnitude and phase is the balanced
        condition, and the common squared magnitude is the success
        probability of the teleport.
        """
        out = []
        for q in range(3):
            fam = self.coefficients[(q, q)]
            out.append(None if fam is None else fam[1])
        return tuple(out)

    def reassembled_state(self) -> PureState:
        """Rebuild the post-coupler three-mode state from the stored families."""
        terms: dict[tuple[int, int, int], complex] = {}
        for (q, m), fam in self.coefficients.items():
            if fam is None:
                continue
            pref = _input_prefactor(self.input, q)
            two_l = self.detector_photons(q, m)
            for k, coeff in enumerate(fam):
                j = two_l - k
                weight = math.sqrt(
                    math.factorial(j) * math.factorial(k) * math.factorial(m)
                )
                occ = (j, k, m)
                terms[occ] = terms.get(occ, 0j) + pref * coeff * weight
        return PureState(3, terms)


def decompose_outcomes(
    inp: ScissorsInput, epr: EprResource, bs: ModeUnitary
) -> OutcomeDecomposition:
    """Extract the coefficient families from the post-coupler amplitudes.

    Each amplitude <j,k,m| of the mixed state belongs to exactly one family,
    identified by q = j + k + m - 2 and m; dividing out the input prefactor
    and the Fock normalization sqrt(j! k! m!) leaves the family coefficient.
    """
    if bs.dim != 2:
        raise ValueError(f"the coupler must be a 2x2 unitary, got dim {bs.dim}")
    mixed = apply_mode_unitary(bs, _joint_state(inp, epr), 0)

    slots: dict[tuple[int, int], list[complex] | None] = {}
    for q, m in _FAMILY_KEYS:
        if abs(_input_prefactor(inp, q)) == 0.0:
            slots[(q, m)] = None
        else:
            slots[(q, m)] = [0j] * (q + 2 - m + 1)

    for (j, k, m), amp in mixed.terms.items():
        q = j + k + m - 2
        fam = slots[(q, m)]
        if fam is None:
            raise AssertionError("amplitude present for a zero input component")
        weight = math.sqrt(math.factorial(j) * math.factorial(k) * math.factorial(m))
        fam[k] = amp / (_input_prefactor(inp, q) * weight)

    coefficients = {
        key: (None if fam is None else tuple(fam)) for key, fam in slots.items()
    }
    return OutcomeDecomposition(
        coefficients=coefficients, input=inp, epr=epr, beam_splitter=bs
    )


@dataclass(frozen=True, eq=False)
class BalancedSolution:
    """A coupler/resource pair balancing the three coincidence coefficients."""

    beam_splitter: ModeUnitary
    epr: EprResource
    achieved: tuple[float, float, float]
    residual: float


def _coupler_entries(theta: float, phi: float):
    """Entries of the det-1 coupler [[c, -e^{i phi} s], [e^{-i phi} s, c]]."""
    c, s = math.cos(theta), math.sin(theta)
    return c, -cmath.exp(1j * phi) * s, cmath.exp(-1j * phi) * s, c


def _resource_coefficients(alpha: float, beta: float, d0: float, d1: float):
    return (
        math.cos(alpha),
        math.sin(alpha) * math.cos(beta) * cmath.exp(1j * d0),
        math.sin(alpha) * math.sin(beta) * cmath.exp(1j * d1),
    )


def _coincidence_triple(params) -> tuple[complex, complex, complex]:
    """Closed form of the three l3 = 0 coefficients for given search parameters.

    These are the k = 1 slots of the two-detector-photon families, obtained by
    expanding a1+^q a2+^(2-m) under the substitution a_j+ -> sum_i U_ij b_i+.
    """
    theta, phi, alpha, beta, d0, d1 = params
    u00, u01, u10, u11 = _coupler_entries(theta, phi)
    cm1, c0, c1 = _resource_coefficients(alpha, beta, d0, d1)
    return (
        _SQRT2 * cm1 * u01 * u11,
        c0 * (u00 * u11 + u01 * u10),
        _SQRT2 * c1 * u00 * u10,
    )


def _aligned(triple) -> tuple[complex, tuple[complex, complex, complex]]:
    total = sum(triple)
    phase = total / abs(total) if abs(total) > 1e-300 else 1.0
    return phase, tuple(t / phase for t in triple)


def _balance_residual(params, target: float) -> float:
    _, aligned = _aligned(_coincidence_triple(params))
    return sum(abs(t - target) for t in aligned)


def _balance_residual_sq(params, target: float) -> float:
    # Smooth surrogate for the descent stage; shares the abs-sum residual's
    # zero set but avoids its kinks, which stall simplex steps near the optimum.
    _, aligned = _aligned(_coincidence_triple(params))
    return sum(abs(t - target) ** 2 for t in aligned)


def solve_balanced(target: float = 1.0 / 3.0) -> BalancedSolution:
    """Search coupler and resource parameters balancing the coincidence triple.

    Deterministic and seed-free: a coarse grid over the coupler angle and the
    resource magnitude simplex (with sign choices for the relative phases)
    picks a starting point, then Nelder-Mead descent refines all six
    parameters.  Raises ConvergenceError with the best residual found if the
    target cannot be met; 1/3 is the largest balanced value any configuration
    can reach, so larger targets always fail.
    """
    if not 0.0 < target < 1.0:
        raise ValueError(f"target must lie in (0, 1), got {target}")

    best_params, best_res = None, math.inf
    thetas = np.linspace(0.05, math.pi / 2 - 0.05, 31)
    mix_angles = np.linspace(0.05, math.pi / 2 - 0.05, 17)
    for theta in thetas:
        for alpha in mix_angles:
            for beta in mix_angles:
                for d0 in (0.0, math.pi):
                    for d1 in (0.0, math.pi):
                        params = (theta, 0.0, alpha, beta, d0, d1)
                        res = _balance_residual(params, target)
                        if res < best_res:
                            best_params, best_res = params, res

    x = np.array(best_params)
    residual = best_res
    for _ in range(5):
        opt = minimize(
            _balance_residual_sq,
            x,
            args=(target,),
            method="Nelder-Mead",
            options={"xatol": 1e-14, "fatol": 1e-18, "maxiter": 20000, "maxfev": 30000},
        )
        x = opt.x
        residual = _balance_residual(tuple(x), target)
        if residual < 1e-12:
            break
    params = tuple(x)
    if residual >= BALANCE_TOL:
        raise ConvergenceError(
            f"balance search stalled at residual {residual:.3e} "
            f"(target {target}, best parameters {params}); "
            f"targets above 1/3 are unreachable",
            residual=residual,
        )

    theta, phi = params[0], params[1]
    u00, u01, u10, u11 = _coupler_entries(theta, phi)
    bs = ModeUnitary(2, np.array([[u00, u01], [u10, u11]]))
    epr = EprResource.from_coefficients(*_resource_coefficients(*params[2:]))
    _, aligned = _aligned(_coincidence_triple(params))
    return BalancedSolution(
        beam_splitter=bs,
        epr=epr,
        achieved=tuple(t.real for t in aligned),
        residual=residual,
    )
