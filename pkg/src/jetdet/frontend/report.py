"""JSON report assembly: one stable, versioned shape per CLI subcommand.

Every report carries `schema` (the format version tag) and `kind` (which
subcommand produced it), serializes with a fixed key order, and validates
against the JSON schema shipped next to this module
(`report-v1.schema.json`).  Rational numbers are encoded as strings
("3", "-1/2") so nothing is lost to floating point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..combinatorics import LemmaCheck, verify_lemma_comb
from ..determinacy import DeterminacyVerdict, d_bound_case, main_bound, tougeron_bound
from ..errors import HypothesisViolation, NotCertified, NotRegular
from ..invariants import (
    CertifiedValue,
    detect_weight_system,
    hilbert_function,
    milnor_number,
    saito_test,
    socle_report,
    tyurina_number,
)
from ..determinacy import certify_k_determined, is_regular
from ..polyring import Poly, WeightSystem, homogeneous_degree
from ..sharpness import SharpnessReport
from .parsing import poly_to_str

SCHEMA_ID = "jetdet-report/v1"
SCHEMA_FILENAME = "report-v1.schema.json"


def dumps(report: dict) -> str:
    """Serialize with the fixed layout used everywhere (golden-file stable)."""
    return json.dumps(report, indent=2) + "\n"


def load_schema() -> dict:
    """The JSON schema all report kinds validate against."""
    path = resources.files(__package__).joinpath(SCHEMA_FILENAME)
    return json.loads(path.read_text())


def _rat(q: Fraction | int) -> str:
    return str(Fraction(q))


def _input_block(text: str, names: tuple[str, ...], p: Poly) -> dict:
    return {
        "text": text,
        "variables": list(names),
        "canonical": poly_to_str(p, names),
    }


def _certified_value(cv: CertifiedValue | None) -> dict | None:
    if cv is None:
        return None
    return {"value": cv.value, "order": cv.order}


def _verdict_block(v: DeterminacyVerdict) -> dict:
    return {
        "k": v.k,
        "criterion": v.criterion,
        "certified": v.certified,
        "certificate_order": v.certificate_order,
        "sufficient_only": v.sufficient_only,
        "note": v.note,
    }


def _witness_block(witness, names) -> list[str] | None:
    if witness is None:
        return None
    return [poly_to_str(w, names) for w in witness]


def dbound_report(n: int, m: int) -> dict:
    value, case = d_bound_case(n, m)
    return {
        "schema": SCHEMA_ID,
        "kind": "dbound",
        "n": n,
        "m": m,
        "value": value,
        "case": case,
    }


def certify_report(
    f: Poly, names: tuple[str, ...], text: str, k: int, criterion: str
) -> dict:
    verdict = certify_k_determined(f, k, criterion)
    return {
        "schema": SCHEMA_ID,
        "kind": "certify",
        "input": _input_block(text, names, f),
        "nvars": f.nvars,
        "verdict": _verdict_block(verdict),
    }


def sharpness_json(rep: SharpnessReport) -> dict:
    from .parsing import default_names

    names = default_names(rep.n)
    return {
        "schema": SCHEMA_ID,
        "kind": "sharpness",
        "n": rep.n,
        "m": rep.m,
        "t": _rat(rep.t),
        "f": poly_to_str(rep.f, names),
        "g": poly_to_str(rep.g, names),
        "mu_f": rep.mu_f,
        "mu_g": rep.mu_g,
        "tau_g": rep.tau_g,
        "saito_g": rep.saito_g,
        "obstruction_monomial_in_Jf": rep.obstruction_monomial_in_Jf,
        "euler_identity_holds": rep.euler_identity_holds,
        "euler_coefficient": _rat(rep.euler_coefficient),
        "conclusion": rep.conclusion,
    }


def hilbert_report(
    f: Poly, names: tuple[str, ...], text: str, weights: WeightSystem | None
) -> dict:
    result = hilbert_function(f, weights)
    return {
        "schema": SCHEMA_ID,
        "kind": "hilbert",
        "input": _input_block(text, names, f),
        "nvars": f.nvars,
        "weights": {
            "weights": list(result.weights.weights),
            "degree": result.weights.degree,
        },
        "empirical": {
            "values": list(result.empirical.values),
            "socle_degree": result.empirical.socle_degree,
            "total": result.empirical.total,
        },
        "predicted": list(result.predicted),
        "matches": result.matches,
    }


def lemma_report(max_n: int, max_m: int) -> dict:
    rows = verify_lemma_comb(max_n, max_m)
    return {
        "schema": SCHEMA_ID,
        "kind": "lemma",
        "max_n": max_n,
        "max_m": max_m,
        "rows": [_lemma_row(r) for r in rows],
        "all_equal": all(r.equal for r in rows),
    }


def _lemma_row(r: LemmaCheck) -> dict:
    return {
        "n": r.n,
        "m": r.m,
        "alternating_sum": r.alternating_sum,
        "binomial": r.binomial,
        "brute_total": r.brute_total,
        "brute_alternating": r.brute_alternating,
        "equal": r.equal,
    }


def member_report(
    g: Poly,
    f: Poly,
    names: tuple[str, ...],
    g_text: str,
    f_text: str,
) -> dict:
    from ..jetspace import certified_jacobian, jet_membership

    order, _, img = certified_jacobian(f)
    member, witness = jet_membership(g, img, witness=True)
    return {
        "schema": SCHEMA_ID,
        "kind": "member",
        "g": _input_block(g_text, names, g),
        "f": _input_block(f_text, names, f),
        "nvars": f.nvars,
        "order": order,
        "member": member,
        "witness": _witness_block(witness, names),
    }


def run_analysis(
    f: Poly,
    names: tuple[str, ...],
    text: str,
    weights: WeightSystem | None = None,
    start_order: int | None = None,
    extra_k: int | None = None,
    extra_criterion: str = "fdt",
) -> dict:
    """The full analysis record: invariants, regularity, verdicts, warnings.

    Uncertifiable invariants (non-isolated input, resource caps) are reported
    as nulls with a warning rather than aborting; hypothesis violations on
    explicitly requested computations still raise.
    """
    warnings: list[str] = []
    weights_detected = False
    if weights is not None:
        if weights.nvars != f.nvars:
            raise HypothesisViolation(
                f"{weights.nvars} weights for {f.nvars} variables"
            )
        from ..polyring import is_quasihomogeneous

        if not is_quasihomogeneous(f, weights):
            raise HypothesisViolation(
                f"input is not isobaric of type ({weights.weights}; {weights.degree})"
            )
    else:
        m = homogeneous_degree(f)
        if m is not None and m >= 1:
            weights = WeightSystem.unit(f.nvars, m)
        else:
            weights = detect_weight_system(f)
            if weights is not None:
                weights_detected = True
                warnings.append(
                    f"weights {list(weights.weights)} with isobaric degree "
                    f"{weights.degree} detected automatically"
                )
    graded = weights is not None

    mu = tau = None
    saito = None
    try:
        mu = milnor_number(f, start_order)
        tau = tyurina_number(f, start_order)
        saito = saito_test(f, start_order)
    except NotCertified as exc:
        warnings.append(f"not certified / non-isolated: {exc}")

    regular = None
    if graded:
        regular = is_regular(f, weights)
        if not regular:
            warnings.append("the form is not regular")
    else:
        warnings.append("input is not graded; regularity and graded bounds skipped")

    hilbert = None
    socle = None
    if graded and regular and mu is not None:
        try:
            result = hilbert_function(f, weights)
            soc = socle_report(f, weights)
        except NotRegular as exc:  # pragma: no cover - guarded by regular above
            warnings.append(str(exc))
        else:
            hilbert = {
                "values": list(result.empirical.values),
                "socle_degree": result.empirical.socle_degree,
                "total": result.empirical.total,
                "predicted": list(result.predicted),
                "matches": result.matches,
            }
            socle = {
                "socle_degree": soc.socle_degree,
                "socle_dimension": soc.socle_dimension,
                "hessian_in_socle": soc.hessian_in_socle,
            }

    verdicts: list[DeterminacyVerdict] = []
    if graded and regular:
        try:
            verdicts.append(main_bound(f, weights))
        except HypothesisViolation as exc:
            warnings.append(f"graded bound not applicable: {exc}")
    if mu is not None:
        verdicts.append(tougeron_bound(f))
    if extra_k is not None:
        try:
            verdicts.append(certify_k_determined(f, extra_k, extra_criterion))
        except HypothesisViolation as exc:
            warnings.append(f"requested k={extra_k} certificate rejected: {exc}")

    dbound = None
    if graded and weights.is_unit and f.nvars >= 2 and weights.degree >= 2:
        value, case = d_bound_case(f.nvars, weights.degree)
        dbound = {"value": value, "case": case}

    return {
        "schema": SCHEMA_ID,
        "kind": "analysis",
        "input": _input_block(text, names, f),
        "nvars": f.nvars,
        "weights": None
        if not graded
        else {
            "weights": list(weights.weights),
            "degree": weights.degree,
            "detected": weights_detected,
        },
        "graded": graded,
        "regular": regular,
        "mu": _certified_value(mu),
        "tau": _certified_value(tau),
        "saito": None
        if saito is None
        else {
            "is_quasihomogeneous_type": saito.is_quasihomogeneous_type,
            "mu": saito.mu,
            "tau": saito.tau,
            "order": saito.order,
            "witness": _witness_block(saito.membership_witness, names),
        },
        "hilbert": hilbert,
        "socle": socle,
        "determinacy": [_verdict_block(v) for v in verdicts],
        "d_bound": dbound,
        "warnings": warnings,
    }
