"""Closed-form counts for a single group."""

from ...config import RunConfig, load_run_config
from ...counts import (
    GroupSpec,
    c_rank_r,
    oracle_cyclic_count,
    oracle_subgroup_count,
    s_rank2,
)
from ...counts.oracles import CYCLIC_ORACLE_MAX_ORDER, SUBGROUP_ORACLE_MAX_ORDER
from ...exceptions import ConsistencyError, UsageError
from ..utils import build_report, emit


def _invariants(values, flag: str, sizes) -> tuple:
    if len(values) not in sizes:
        raise UsageError(f"{flag} takes {' or '.join(map(str, sizes))} integers", module="cli")
    if any(v < 1 for v in values):
        raise UsageError(f"{flag} needs positive integers, got {values}", module="cli")
    return tuple(values)


def _check(value: int, oracle: int, what: str) -> None:
    if value != oracle:
        raise ConsistencyError(f"{what}: formula {value} != oracle {oracle}", module="counts")


def cmd_count(args):
    """Evaluate c(n1, ..., nr) or s(m, n), optionally against the brute-force oracle."""
    if bool(args.cyclic) == bool(args.subgroups):
        raise UsageError("give exactly one of --cyclic or --subgroups", module="cli")
    config: RunConfig = load_run_config(args)
    if args.cyclic:
        group = GroupSpec(_invariants(args.cyclic, "--cyclic", (1, 2, 3)))
        name = f"c({', '.join(map(str, group.invariants))})"
        value = c_rank_r(group.invariants)
        oracle_limit = CYCLIC_ORACLE_MAX_ORDER
        oracle = (lambda: oracle_cyclic_count(group))
    else:
        m, n = _invariants(args.subgroups, "--subgroups", (2,))
        group = GroupSpec((m, n))
        name = f"s({m}, {n})"
        value = s_rank2(m, n)
        oracle_limit = SUBGROUP_ORACLE_MAX_ORDER
        oracle = (lambda: oracle_subgroup_count(m, n))

    print(f"📊 {name} = {value}")
    results = {"group": list(group.invariants), "name": name, "value": str(value)}

    if config.verify:
        if group.order <= oracle_limit:
            expected = oracle()
            _check(value, expected, name)
            results["oracle"] = str(expected)
            print(f"✅ oracle agrees: {expected}")
        else:
            print(f"⚠️  oracle skipped: order {group.order} > {oracle_limit}")

    if config.output_path is not None:
        emit(config, build_report(config, results))
