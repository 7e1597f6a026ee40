import logging
import time

from typing import Dict, List, Optional

from mypy_extensions import TypedDict

from common import cell_label
from richardson.attach import attach_chains
from richardson.indices import IndexTuple, contains_fixed_point, is_nonempty
from richardson.paths import count_path_families, path_endpoints
from richardson.starsets import DEFAULT_ORBIT_BUDGET, count_max_bounded_star_sets


logger = logging.getLogger(__name__)


PATHS = "paths"
STARSETS = "starsets"
BOTH = "both"
METHODS = (PATHS, STARSETS, BOTH)

# reported when e_beta does not lie on the Richardson variety
NOT_ON_VARIETY = "fixed point not on variety"


class TheoremViolationError(Exception):
    pass


CellList = List[List[int]]


MultiplicityReport = TypedDict(
    "MultiplicityReport",
    {
        "d": int,
        "mode": str,
        "ambient": int,
        "alpha": List[int],
        "beta": List[int],
        "gamma": List[int],
        "reason": str,
        "multiplicity": int,
        "t_alpha": CellList,
        "w_gamma": CellList,
        "endpoints": Dict[str, Dict[str, List[int]]],
        "results": Dict[str, Dict[str, int]],
        "families": List[List[CellList]],
        "timings_ms": Dict[str, float],
    },
    total=False,
)


def build_report(
    alpha: IndexTuple,
    beta: IndexTuple,
    gamma: IndexTuple,
    method: str = PATHS,
    list_families: bool = False,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
    jobs: int = 1,
    timings: bool = False,
) -> MultiplicityReport:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")

    report = {
        "d": beta.d,
        "mode": beta.mode,
        "ambient": beta.ambient,
        "alpha": list(alpha.entries),
        "beta": list(beta.entries),
        "gamma": list(gamma.entries),
    }  # type: MultiplicityReport

    run_paths = method in (PATHS, BOTH)
    run_starsets = method in (STARSETS, BOTH)

    if not contains_fixed_point(alpha, beta, gamma):
        if is_nonempty(alpha, gamma):
            logger.info("%s is not between %s and %s", beta, alpha, gamma)
        else:
            logger.info("the variety is empty: %s is not below %s", alpha, gamma)

        report["reason"] = NOT_ON_VARIETY
        report["multiplicity"] = 0
        report["t_alpha"] = []
        report["w_gamma"] = []
        report["endpoints"] = {}
        report["results"] = {}
        if run_paths:
            report["results"][PATHS] = {"multiplicity": 0}
        if run_starsets:
            report["results"][STARSETS] = {"multiplicity": 0, "max_degree": 0}
        if list_families and run_paths:
            report["families"] = []

        return report

    chains = attach_chains(alpha, beta, gamma)
    endpoints = {}  # type: Dict[str, Dict[str, List[int]]]
    for anchor in chains.anchors:
        ends = path_endpoints(anchor, chains.grid)
        endpoints[cell_label(anchor)] = {
            "floor": list(ends["floor"]),
            "ceil": list(ends["ceil"]),
        }

    results = {}  # type: Dict[str, Dict[str, int]]
    listed = None  # type: Optional[List[List[CellList]]]
    elapsed = {}  # type: Dict[str, float]

    if list_families and not run_paths:
        logger.warning("families are only listed by the paths method")

    if run_paths:
        started = time.perf_counter()
        families = count_path_families(chains, list_families=list_families, jobs=jobs)
        elapsed[PATHS] = (time.perf_counter() - started) * 1000
        results[PATHS] = {"multiplicity": families["count"]}

        if families["families"] is not None:
            listed = [
                [[list(cell) for cell in family[anchor].cells] for anchor in sorted(family)]
                for family in families["families"]
            ]

    if run_starsets:
        started = time.perf_counter()
        starsets = count_max_bounded_star_sets(chains, budget=orbit_budget)
        elapsed[STARSETS] = (time.perf_counter() - started) * 1000
        results[STARSETS] = {
            "multiplicity": starsets["count"],
            "max_degree": starsets["max_degree"],
        }

    multiplicities = {result["multiplicity"] for result in results.values()}
    if len(multiplicities) != 1:
        raise TheoremViolationError(
            "counting methods disagree for alpha=%s, beta=%s, gamma=%s: %s"
            % (alpha, beta, gamma, results)
        )

    report["multiplicity"] = multiplicities.pop()
    report["t_alpha"] = [list(cell) for cell in chains.t_alpha.cells]
    report["w_gamma"] = [list(cell) for cell in chains.w_gamma.cells]
    report["endpoints"] = endpoints
    report["results"] = results
    if listed is not None:
        report["families"] = listed
    if timings:
        report["timings_ms"] = {key: round(value, 3) for key, value in elapsed.items()}

    return report
