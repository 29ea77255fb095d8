"""Subgroup and cyclic-subgroup counts of Z-product groups."""

from .formulas import (
    c_pp,
    c_rank2,
    c_rank3,
    c_rank_r,
    cyclic_degree_poly,
    evaluate_poly,
    local_cyclic_count,
    local_cyclic_poly,
    local_weight_poly,
    poly_coefficients,
    s_pp,
    s_rank2,
    weight_degree_poly,
)
from .models import EvaluationPath, GroupSpec
from .oracles import oracle_cyclic_count, oracle_subgroup_count

__all__ = [
    "EvaluationPath",
    "GroupSpec",
    "c_pp",
    "s_pp",
    "c_rank2",
    "s_rank2",
    "c_rank3",
    "c_rank_r",
    "local_cyclic_count",
    "local_cyclic_poly",
    "local_weight_poly",
    "weight_degree_poly",
    "cyclic_degree_poly",
    "poly_coefficients",
    "evaluate_poly",
    "oracle_cyclic_count",
    "oracle_subgroup_count",
]
