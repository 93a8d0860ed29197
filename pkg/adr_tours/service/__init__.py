"""
HTTP surface of the mission use cases: plan, fly and tune behind Flask routes declared
with bisslog-schema triggers.
"""
from .app_manager import MissionAppManager, create_app
from .declarations import USE_CASES, health
from .http_resolver import MissionHttpResolver
from .resolver import MissionResolver

__all__ = ["MissionAppManager", "MissionHttpResolver", "MissionResolver", "USE_CASES",
           "create_app", "health"]
