"""Command implementations producing machine-readable run reports.

Each run_* function returns (results, checks): a command-specific JSON
payload plus the list of named a-posteriori verification verdicts.  A
report with any false verdict makes the CLI exit nonzero.
"""

from __future__ import annotations

import numpy as np

from . import __version__
from .algebra import (
    Algebra,
    Subspace,
    centralizer,
    is_multiplicatively_closed,
    is_two_sided_ideal,
    lower_central_series,
    quotient,
)
from .cartan import (
    cartan_subalgebra,
    index_of_central_simple,
    lie_nilpotency_report,
    maximal_torus,
    is_torus,
    verify_cartan,
)
from .errors import TooLarge
from .fields import PrimeField
from .radical import (
    is_nilpotent_subspace,
    is_reduced,
    is_soluble,
    radical,
    radical_complement,
)
from .serialize import algebra_to_json, canonical_digest, subspace_to_json
from .units import group_nilpotency, unit_group, units_decomposition_check

ORACLE_FIELDS = (2, 3)
ORACLE_MAX_DIM = 4


def input_digest(A: Algebra, extra: dict | None = None) -> str:
    payload = {"algebra": algebra_to_json(A)}
    if extra:
        payload.update(extra)
    return canonical_digest(payload)


def _oracle_eligible(A: Algebra) -> bool:
    return (
        isinstance(A.field, PrimeField)
        and A.field.p in ORACLE_FIELDS
        and A.dim <= ORACLE_MAX_DIM
    )


def _radical_checks(A: Algebra, rad: Subspace, oracle: bool) -> dict[str, bool]:
    quot, _ = quotient(A, rad)
    checks = {
        "radical_is_two_sided_ideal": is_two_sided_ideal(rad),
        "radical_is_nilpotent": is_nilpotent_subspace(rad),
        "radical_quotient_semisimple": radical(quot, verify=False).dim == 0,
    }
    if oracle and _oracle_eligible(A):
        from .oracle import radical_bruteforce

        checks["radical_matches_bruteforce"] = rad == radical_bruteforce(A)
    return checks


def run_radical(A: Algebra, seed: int = 0, oracle: bool = False):
    rad = radical(A)
    results = {"radical": subspace_to_json(rad), "dim": rad.dim}
    return results, _radical_checks(A, rad, oracle)


def run_complement(A: Algebra, seed: int = 0, oracle: bool = False):
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    results = {
        "complement": subspace_to_json(comp),
        "dim": comp.dim,
        "radical_dim": rad.dim,
    }
    checks = {
        "complement_direct_to_radical": comp.intersect(rad).dim == 0
        and comp.dim + rad.dim == A.dim,
        "complement_multiplicatively_closed": is_multiplicatively_closed(comp),
        "complement_contains_one": comp.contains(A.one),
    }
    return results, checks


def run_soluble(A: Algebra, seed: int = 0, oracle: bool = False):
    rad = radical(A)
    verdict = is_soluble(A)
    return {"soluble": verdict}, _radical_checks(A, rad, oracle)


def run_reduced(A: Algebra, seed: int = 0, oracle: bool = False):
    rad = radical(A)
    verdict = is_reduced(A)
    return {"reduced": verdict}, _radical_checks(A, rad, oracle)


def run_maximal_torus(A: Algebra, seed: int = 0, oracle: bool = False):
    cert = maximal_torus(A, rng_seed=seed)
    T = cert.torus
    comp = cert.self_centralizing_in
    results = {
        "torus": subspace_to_json(T),
        "dim": T.dim,
        "certified_in": subspace_to_json(comp),
    }
    checks = {
        "torus_is_torus": is_torus(A, T),
        "torus_self_centralizing_in_complement": centralizer(A, T).intersect(comp) == T,
    }
    return results, checks


def run_cartan(A: Algebra, seed: int = 0, oracle: bool = False):
    cert = cartan_subalgebra(A, rng_seed=seed)
    results = {
        "cartan": subspace_to_json(cert.cartan),
        "dim": cert.cartan.dim,
        "class": cert.nilpotency_class,
        "torus": subspace_to_json(cert.torus.torus),
        "torus_dim": cert.torus.torus.dim,
    }
    checks = dict(cert.checks)
    if oracle and _oracle_eligible(A):
        from .oracle import enumerate_cartans_bruteforce

        checks["cartan_in_bruteforce_enumeration"] = any(
            cert.cartan == C for C in enumerate_cartans_bruteforce(A)
        )
    return results, checks


def run_verify(A: Algebra, C: Subspace, seed: int = 0, oracle: bool = False):
    ok, diag = verify_cartan(A, C)
    results = {"verdict": ok, "dim": C.dim}
    return results, diag


def run_index(A: Algebra, seed: int = 0, oracle: bool = False):
    idx = index_of_central_simple(A)
    results = {"index": idx}
    checks = {"index_squares_to_dimension": idx * idx == A.dim}
    return results, checks


def run_units(A: Algebra, seed: int = 0, oracle: bool = False):
    U = unit_group(A)
    nil = group_nilpotency(U.group)
    results = {
        "order": U.group.order,
        "nilpotent": nil.nilpotent,
        "class": nil.nilpotency_class,
    }
    checks = {}
    if nil.nilpotent:
        results["decomposition"] = units_decomposition_check(A)
        checks["units_decomposition"] = bool(results["decomposition"])
    else:
        results["decomposition"] = None
    return results, checks


def run_report(A: Algebra, seed: int = 0, oracle: bool = False):
    """Full pipeline: radical, complement, torus, Cartan, verification, Lie-nilpotency predicates."""
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    cert = cartan_subalgebra(A, rng_seed=seed)
    series = lower_central_series(A, A.full_space())
    t5 = lie_nilpotency_report(A, rng_seed=seed)
    results = {
        "dim": A.dim,
        "field": A.field.to_json(),
        "radical": {"basis": subspace_to_json(rad)["basis"], "dim": rad.dim},
        "complement": {"basis": subspace_to_json(comp)["basis"], "dim": comp.dim},
        "torus": {"basis": subspace_to_json(cert.torus.torus)["basis"], "dim": cert.torus.torus.dim},
        "cartan": {
            "basis": subspace_to_json(cert.cartan)["basis"],
            "dim": cert.cartan.dim,
            "class": cert.nilpotency_class,
        },
        "soluble": is_soluble(A),
        "reduced": is_reduced(A),
        "lie_nilpotent": series.nilpotent,
        "lie_nilpotency_class": series.nilpotency_class,
        "theorem_equivalences": {
            "lie_nilpotent": t5.lie_nilpotent,
            "central_complement": t5.central_complement,
            "soluble_with_unique_complement": t5.soluble_with_unique_complement,
            "separable_elements_form_complement": t5.separable_elements_form_complement,
            "separable_elements_form_subspace": t5.separable_elements_form_subspace,
            "skipped": list(t5.skipped),
        },
    }
    checks = dict(cert.checks)
    checks.update(_radical_checks(A, rad, oracle))
    if oracle and _oracle_eligible(A):
        from .oracle import enumerate_cartans_bruteforce

        checks["cartan_in_bruteforce_enumeration"] = any(
            cert.cartan == C for C in enumerate_cartans_bruteforce(A)
        )
    if isinstance(A.field, PrimeField) and A.field.p ** A.dim <= 1 << 12:
        U = unit_group(A)
        nil = group_nilpotency(U.group)
        results["unit_group"] = {"order": U.group.order, "nilpotent": nil.nilpotent, "class": nil.nilpotency_class}
        if A.field.p > 2:
            checks["units_nilpotent_iff_lie_nilpotent"] = nil.nilpotent == series.nilpotent
    return results, checks


COMMANDS = {
    "radical": run_radical,
    "complement": run_complement,
    "soluble": run_soluble,
    "reduced": run_reduced,
    "maximal-torus": run_maximal_torus,
    "cartan": run_cartan,
    "index": run_index,
    "units": run_units,
    "report": run_report,
}


def build_report(command: str, A: Algebra, results: dict, checks: dict, seed: int, extra_digest: dict | None = None) -> dict:
    return {
        "input_digest": input_digest(A, extra_digest),
        "command": command,
        "results": results,
        "checks": [{"name": k, "passed": bool(v)} for k, v in checks.items()],
        "seed": seed,
        "version": __version__,
    }
