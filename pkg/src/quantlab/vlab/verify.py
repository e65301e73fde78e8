"""Verification pipelines over (m, n) parameter grids.

Each pipeline builds a classical integral, confirms its bracket with the
Hamiltonian vanishes, quantizes it under both ordering rules, computes
both commutators with the quantized Hamiltonian, and cross-checks every
symbolic commutator against the differential action on a spanning set of
position monomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from quantlab.generators import (
    OscillatorParams,
    hamiltonian,
    k_integral,
    ladder_integrals,
)
from quantlab.phasepoly import PhaseMono, PhasePoly, poisson
from quantlab.quantizer import Scheme, quantize, quantize_ladder
from quantlab.weylalgebra import (
    Operator,
    apply_to_polynomial,
    commutator,
    min_hbar_exponent,
    min_omega_exponent,
)

TARGET_K = "k"
TARGET_F1 = "f1"
TARGET_F2 = "f2"


@dataclass
class VerificationRecord:
    """Per-(m, n) outcome of one verification run."""

    m: int
    n: int
    target: str
    classical_bracket_zero: bool
    bj_equals_weyl: bool
    weyl_commutes: bool
    bj_commutes: bool
    bj_minus_weyl: Operator
    weyl_commutator: Operator
    bj_commutator: Operator
    min_h_exp: int
    min_w_exp: int
    oracle_agreement: bool
    ladder_equals_weyl: bool | None = None


def verify_pair(m: int, n: int) -> VerificationRecord:
    """Run the full pipeline on the polynomial integral K of (m, n)."""
    params = OscillatorParams(m, n)
    return _verify(params, k_integral(params), TARGET_K, ladder_op=None)


def verify_ladder_pair(m: int, n: int, which: int = 1) -> VerificationRecord:
    """Run the pipeline on ladder integral F1 or F2, and also record
    whether direct ladder quantization coincides with the Weyl operator."""
    params = OscillatorParams(m, n)
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    classical = ladder_integrals(params)[which - 1]
    return _verify(params, classical, f"f{which}", quantize_ladder(params, which))


def _verify(
    params: OscillatorParams,
    classical: PhasePoly,
    target: str,
    ladder_op: Operator | None,
) -> VerificationRecord:
    h = hamiltonian(params)
    bracket = poisson(h, classical)
    if not bracket.is_zero():
        raise RuntimeError(
            f"internal consistency violation: classical bracket of H and {target} "
            f"is nonzero for (m, n) = ({params.m}, {params.n})"
        )
    h_op = quantize(Scheme.WEYL, h)
    weyl_op = quantize(Scheme.WEYL, classical)
    bj_op = quantize(Scheme.BORN_JORDAN, classical)
    diff = bj_op - weyl_op
    weyl_comm = commutator(h_op, weyl_op)
    bj_comm = commutator(h_op, bj_op)
    oracle = commutator_matches_action(h_op, weyl_op, weyl_comm) and (
        commutator_matches_action(h_op, bj_op, bj_comm)
    )
    return VerificationRecord(
        m=params.m,
        n=params.n,
        target=target,
        classical_bracket_zero=True,
        bj_equals_weyl=diff.is_zero(),
        weyl_commutes=weyl_comm.is_zero(),
        bj_commutes=bj_comm.is_zero(),
        bj_minus_weyl=diff,
        weyl_commutator=weyl_comm,
        bj_commutator=bj_comm,
        min_h_exp=min_hbar_exponent(bj_comm),
        min_w_exp=min_omega_exponent(bj_comm),
        oracle_agreement=oracle,
        ladder_equals_weyl=None if ladder_op is None else ladder_op == weyl_op,
    )


def commutator_matches_action(left: Operator, right: Operator, comm: Operator) -> bool:
    """Check a symbolic commutator against the differential action.

    Both the symbolic commutator and the true one have x-derivative order
    at most the summed px orders of the factors, and likewise in y.  An
    operator whose action vanishes on every probe x^i y^j inside that
    rectangle is zero (probe the minimal derivative pair present: only it
    survives, and it exposes its coefficients), so agreement on the
    rectangle pins the commutator uniquely.
    """
    x_bound = _max_px_order(left) + _max_px_order(right)
    y_bound = _max_py_order(left) + _max_py_order(right)
    for i in range(x_bound + 1):
        for j in range(y_bound + 1):
            probe = PhasePoly.monomial(PhaseMono(a=i, b=j))
            direct = apply_to_polynomial(comm, probe)
            nested = apply_to_polynomial(left, apply_to_polynomial(right, probe)) - (
                apply_to_polynomial(right, apply_to_polynomial(left, probe))
            )
            if direct != nested:
                return False
    return True


def _max_px_order(op: Operator) -> int:
    return max((m.c for m in op.terms), default=0)


def _max_py_order(op: Operator) -> int:
    return max((m.d for m in op.terms), default=0)


def sweep(max_sum: int, target: str = TARGET_K) -> list[VerificationRecord]:
    """Records for all m, n >= 1 with m + n <= max_sum.

    Deterministic order: m + n ascending, then m ascending.  target "k"
    verifies the polynomial integrals; target "f" verifies both ladder
    integrals for each pair.
    """
    if not isinstance(max_sum, int) or max_sum < 2:
        raise ValueError("max_sum must be an integer >= 2")
    if target not in ("k", "f"):
        raise ValueError("target must be 'k' or 'f'")
    records = []
    for total in range(2, max_sum + 1):
        for m in range(1, total):
            n = total - m
            if target == TARGET_K:
                records.append(verify_pair(m, n))
            else:
                records.append(verify_ladder_pair(m, n, 1))
                records.append(verify_ladder_pair(m, n, 2))
    return records


def failed_claims(record: VerificationRecord) -> list[str]:
    """Checked claims that the record violates; empty when all hold.

    The claims: the classical bracket vanishes, the action oracle agrees,
    the Weyl operator commutes, and the Born-Jordan operator commutes
    exactly when it coincides with Weyl's, with every term of a nonzero
    Born-Jordan commutator carrying hbar^2 and omega as factors.
    """
    where = f"(m, n) = ({record.m}, {record.n}), target {record.target}"
    fails = []
    if not record.classical_bracket_zero:
        fails.append(f"{where}: classical bracket is nonzero")
    if not record.oracle_agreement:
        fails.append(f"{where}: symbolic commutator disagrees with action oracle")
    if not record.weyl_commutes:
        fails.append(f"{where}: Weyl commutator is nonzero")
    if record.bj_equals_weyl:
        if not record.bj_commutes:
            fails.append(f"{where}: schemes coincide but BJ commutator is nonzero")
    else:
        if record.bj_commutes:
            fails.append(f"{where}: schemes differ but BJ commutator vanishes")
        else:
            if record.min_h_exp < 2:
                fails.append(f"{where}: BJ commutator term with hbar exponent < 2")
            if record.min_w_exp < 1:
                fails.append(f"{where}: BJ commutator term with omega exponent < 1")
    return fails
