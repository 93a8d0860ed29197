"""
Flask application of the mission service.

Classes
-------
MissionAppManager : Builds a Flask app with a route for every declared use case trigger.

Dependencies
------------
- Flask
- bisslog_schema
"""
import logging
from typing import Callable, Optional, Sequence, Tuple

from bisslog_schema.schema import TriggerHttp, UseCaseInfo
from flask import Flask

from .declarations import USE_CASES
from .http_resolver import MissionHttpResolver
from .resolver import MissionResolver

logger = logging.getLogger(__name__)

SERVICE_NAME = "adr_tours"


class MissionAppManager:
    """
    Parameters
    ----------
    http_processor : MissionResolver
        Resolver registering HTTP-triggered use cases.
    """

    def __init__(self, http_processor: MissionResolver) -> None:
        self._http_processor = http_processor

    def __call__(self, app: Optional[Flask] = None,
                 use_cases: Optional[Sequence[Tuple[UseCaseInfo, Callable]]] = None, *,
                 secret_key: Optional[str] = None, **kwargs) -> Flask:
        """
        Parameters
        ----------
        app : Flask, optional
            Existing application; a new one named after the service otherwise.
        use_cases : sequence of (UseCaseInfo, callable), optional
            Declarations to register; the service's own by default.
        secret_key : str, optional
            Value of the app's SECRET_KEY.

        Returns
        -------
        Flask
        """
        if app is None:
            app = Flask(SERVICE_NAME)
        if secret_key is not None:
            app.config["SECRET_KEY"] = secret_key

        declared = USE_CASES if use_cases is None else use_cases
        for use_case_info, use_case_callable in declared:
            for trigger in use_case_info.triggers:
                if isinstance(trigger.options, TriggerHttp):
                    self._http_processor(app, use_case_info, trigger, use_case_callable,
                                         **kwargs)
        logger.info("mission service ready with %d use cases", len(declared))
        return app


create_app = MissionAppManager(MissionHttpResolver())
