"""
Use cases exposed by the mission service and their HTTP triggers.
"""
from importlib.metadata import PackageNotFoundError, version
from typing import Any, Callable, Dict, List, Tuple

from bisslog_schema.schema import TriggerHttp, TriggerInfo, UseCaseInfo

from ..use_cases import fly_mission, plan_tour, tune_mission


def health() -> Dict[str, Any]:
    try:
        current = version("adr_tours")
    except PackageNotFoundError:
        current = "unknown"
    return {"status": "ok", "version": current}


def _http(keyname: str, method: str, path: str, **options) -> TriggerInfo:
    return TriggerInfo(keyname=keyname, type="http",
                       options=TriggerHttp(method=method, path=path, **options))


def _use_case(keyname: str, name: str, description: str,
              *triggers: TriggerInfo) -> UseCaseInfo:
    return UseCaseInfo(keyname=keyname, name=name, description=description, type="sync",
                       triggers=list(triggers))


# guided flights and tuning take the law from the path; the body carries config and tour
_LAW_MAPPER = {"path_query.law": "law", "body.config": "config", "body.solution": "solution"}

USE_CASES: List[Tuple[UseCaseInfo, Callable]] = [
    (_use_case("health", "Health", "Service liveness.",
               _http("health_http", "GET", "/health")), health),
    (_use_case("plan", "Plan tour", "Optimise a debris removal tour.",
               _http("plan_http", "POST", "/plan")), plan_tour),
    (_use_case("fly", "Fly tour", "Propagate a planned tour under a law.",
               _http("fly_http", "POST", "/fly"),
               _http("fly_law_http", "POST", "/fly/{law}", mapper=_LAW_MAPPER)), fly_mission),
    (_use_case("tune", "Tune weights", "Swarm-tune guidance weights for a planned tour.",
               _http("tune_http", "POST", "/tune"),
               _http("tune_law_http", "POST", "/tune/{law}", mapper=_LAW_MAPPER)), tune_mission),
]
