"""Exact p-adic arithmetic, diagonal-system certificates and brute-force lemma checks.

Integers cross the boundary as Python ints of any size. Domain errors raise
``ValueError``; exceeding a search budget raises ``ResourceError``.
"""

import json as _json

from . import _core
from ._core import (
    DEFAULT_STATE_BUDGET,
    ResourceError,
    ac_threshold,
    block_count,
    check_congruence_witness,
    compute_L,
    discrete_log,
    euler_phi,
    evaluate_system,
    factorial_valuation,
    find_min_h,
    interpolation_bound,
    node_valuation_bound_check,
    ord,
    ord_power_minus_one,
    pow_mod,
    primitive_root,
    run_cli,
    structured_nodes,
    unit_decomposition_2k,
)

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "ResourceError",
    "ac_threshold",
    "block_count",
    "check_congruence_witness",
    "compute_L",
    "counterexample",
    "discrete_log",
    "euler_phi",
    "evaluate_system",
    "factorial_valuation",
    "find_min_h",
    "interpolation_bound",
    "lemma21_instance",
    "min_n",
    "node_valuation_bound_check",
    "ord",
    "ord_power_minus_one",
    "pow_mod",
    "primitive_root",
    "run_cli",
    "structured_nodes",
    "system",
    "unit_decomposition_2k",
]


def counterexample(p, M, set, mode="exact", h=None, s=None):
    """Certificate report for the degree set ``set`` (same fields as ``artin gen --json``)."""
    return _json.loads(_core._counterexample_json(p, M, list(set), mode, h, s))


def min_n(p, h, M, set, n_max=None, state_budget=DEFAULT_STATE_BUDGET, threads=1):
    """Least N solving the power-sum congruences, with the divisibility verdict."""
    return _json.loads(_core._min_n_json(p, h, M, list(set), n_max, state_budget, threads))


def system(p, h, M, set, s):
    """Block count, degrees and coefficients of the diagonal system with s variables per block."""
    return _json.loads(_core._system_json(p, h, M, list(set), s))


def lemma21_instance(p, h, K, M, seed):
    """A seeded random interpolation instance together with its verdict."""
    return _json.loads(_core._lemma21_json(p, h, K, M, seed))
