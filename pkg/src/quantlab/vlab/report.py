"""Deterministic report rendering.

JSON is the canonical machine format; text and LaTeX are views.  All
serialization iterates terms in canonical order, so reports over the
same inputs are byte identical across runs.
"""

from __future__ import annotations

import json

from quantlab.coeffring import Coefficient
from quantlab.weylalgebra import Operator, differential_latex, differential_text
from quantlab.vlab.verify import VerificationRecord, failed_claims

SWEEP_NOTE = (
    "exact evidence for the swept range only; commutation outside the range "
    "is not proven"
)


def coefficient_json(coeff: Coefficient) -> dict:
    terms = []
    for mono, scalar in coeff.sorted_terms():
        terms.append(
            {
                "h": mono.h_exp,
                "w": mono.w_exp,
                "r": mono.r_exp,
                "re_num": scalar.re.numerator,
                "re_den": scalar.re.denominator,
                "im_num": scalar.im.numerator,
                "im_den": scalar.im.denominator,
            }
        )
    return {"terms": terms}


def operator_json(op: Operator) -> list[dict]:
    return [
        {"a": mono.a, "b": mono.b, "c": mono.c, "d": mono.d, "coeff": coefficient_json(coeff)}
        for mono, coeff in op.sorted_terms()
    ]


def record_json(record: VerificationRecord) -> dict:
    params = {"m": record.m, "n": record.n}
    operators = {
        "bj_equals_weyl": record.bj_equals_weyl,
        "bj_minus_weyl": operator_json(record.bj_minus_weyl),
    }
    if record.target != "k":
        params["target"] = record.target
        operators["ladder_equals_weyl"] = record.ladder_equals_weyl
    return {
        "params": params,
        "classical": {"bracket_zero": record.classical_bracket_zero},
        "operators": operators,
        "commutators": {
            "weyl": operator_json(record.weyl_commutator),
            "bj": operator_json(record.bj_commutator),
            "min_h_exp": record.min_h_exp,
            "min_w_exp": record.min_w_exp,
        },
        "oracle": {"agreement": record.oracle_agreement},
    }


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def record_text(record: VerificationRecord) -> str:
    lines = [
        f"pair: ({record.m}, {record.n})",
        f"target: {record.target}",
        f"classical bracket zero: {_yes_no(record.classical_bracket_zero)}",
        f"bj equals weyl: {_yes_no(record.bj_equals_weyl)}",
    ]
    if record.ladder_equals_weyl is not None:
        lines.append(f"ladder equals weyl: {_yes_no(record.ladder_equals_weyl)}")
    lines += [
        f"bj minus weyl: {record.bj_minus_weyl.text()}",
        f"weyl commutator (normal-ordered): {record.weyl_commutator.text()}",
        f"weyl commutator (differential): {differential_text(record.weyl_commutator)}",
        f"weyl commutes: {_yes_no(record.weyl_commutes)}",
        f"bj commutator (normal-ordered): {record.bj_commutator.text()}",
        f"bj commutator (differential): {differential_text(record.bj_commutator)}",
        f"bj commutes: {_yes_no(record.bj_commutes)}",
        f"bj commutator min hbar exponent: {record.min_h_exp}",
        f"bj commutator min omega exponent: {record.min_w_exp}",
        f"action oracle agreement: {_yes_no(record.oracle_agreement)}",
    ]
    return "\n".join(lines) + "\n"


def record_latex(record: VerificationRecord) -> str:
    lines = [
        r"\paragraph{Pair $(%d, %d)$, target %s.}" % (record.m, record.n, record.target),
        r"$\hat K^{BJ} - \hat K^{W} = %s$" % record.bj_minus_weyl.latex(),
        r"$[\hat H, \hat K^{W}] = %s = %s$"
        % (record.weyl_commutator.latex(), differential_latex(record.weyl_commutator)),
        r"$[\hat H, \hat K^{BJ}] = %s = %s$"
        % (record.bj_commutator.latex(), differential_latex(record.bj_commutator)),
    ]
    return "\n".join(lines) + "\n"


def render_record(record: VerificationRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record_json(record), indent=2) + "\n"
    if fmt == "latex":
        return record_latex(record)
    return record_text(record)


def sweep_json(records: list[VerificationRecord], max_sum: int, target: str) -> dict:
    failures = [fail for record in records for fail in failed_claims(record)]
    return {
        "max_sum": max_sum,
        "target": target,
        "note": SWEEP_NOTE,
        "all_claims_hold": not failures,
        "failures": failures,
        "records": [record_json(record) for record in records],
    }


def sweep_text(records: list[VerificationRecord], max_sum: int, target: str) -> str:
    lines = [f"sweep: max_sum={max_sum} target={target}"]
    for record in records:
        extra = (
            ""
            if record.ladder_equals_weyl is None
            else f" ladder==weyl={_yes_no(record.ladder_equals_weyl)}"
        )
        lines.append(
            f"({record.m},{record.n}) {record.target}:"
            f" bj==weyl={_yes_no(record.bj_equals_weyl)}"
            f" weyl_commutes={_yes_no(record.weyl_commutes)}"
            f" bj_commutes={_yes_no(record.bj_commutes)}"
            f" min_h={record.min_h_exp} min_w={record.min_w_exp}"
            f" oracle={_yes_no(record.oracle_agreement)}{extra}"
        )
    failures = [fail for record in records for fail in failed_claims(record)]
    passed = len(records) - len({fail.split(":")[0] for fail in failures})
    lines.append(f"claims: {passed}/{len(records)} records pass")
    for fail in failures:
        lines.append(f"failure: {fail}")
    lines.append(f"note: {SWEEP_NOTE}")
    return "\n".join(lines) + "\n"


def render_sweep(records: list[VerificationRecord], max_sum: int, target: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(sweep_json(records, max_sum, target), indent=2) + "\n"
    return sweep_text(records, max_sum, target)
