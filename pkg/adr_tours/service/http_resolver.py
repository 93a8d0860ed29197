"""
HTTP resolver of the mission service.

Classes
-------
MissionHttpResolver : Registers HTTP-triggered use cases as Flask routes.

Dependencies
------------
- Flask
- flask_cors (optional, per-trigger CORS)
- bisslog_schema
- bisslog.utils.mapping
"""
import logging
from typing import Callable, Dict, Optional

from bisslog.utils.mapping import Mapper
from bisslog_schema.schema import TriggerHttp, TriggerInfo, UseCaseInfo
from bisslog_schema.schema.triggers.trigger_mappable import TriggerMappable
from flask import Flask, jsonify, request
try:
    from flask_cors import cross_origin
except ImportError:
    cross_origin = None

from ..errors import AdrToursError
from .resolver import MissionResolver

logger = logging.getLogger(__name__)

UNPROCESSABLE = 422


class MissionHttpResolver(MissionResolver):
    """
    Wraps use cases into view functions.

    With a mapper the request parts (``body``, ``params``, ``path_query``, ``headers``) are
    mapped onto keyword arguments; without one the JSON body of a non-GET request is passed
    as keyword arguments. A library error becomes a 422 JSON response.
    """

    @staticmethod
    def _respond(fn: Callable, mapper: Optional[Mapper], **kwargs):
        if mapper is None:
            arguments = dict(kwargs)
            if request.method.lower() != "get":
                arguments.update(request.get_json(silent=True) or {})
        else:
            arguments = mapper.map({
                "path_query": request.view_args or {},
                "body": request.get_json(silent=True) or {},
                "params": request.args.to_dict(),
                "headers": request.headers,
            })
        try:
            return jsonify(fn(**arguments))
        except AdrToursError as exc:
            logger.warning("%s %s failed: %s", request.method, request.path, exc)
            return jsonify({"error": type(exc).__name__, "message": str(exc)}), UNPROCESSABLE

    @classmethod
    def _view(cls, use_case_name: str, fn: Callable, mapper: Optional[Dict[str, str]] = None,
              trigger: Optional[TriggerHttp] = None) -> Callable:
        request_mapper = Mapper(name=f"Mapper {use_case_name}", base=mapper) if mapper else None

        def view(**kwargs):
            return cls._respond(fn, request_mapper, **kwargs)

        if trigger and trigger.allow_cors:
            if cross_origin is None:
                raise ImportError("flask_cors is not installed, please install adr_tours[cors]")
            return cross_origin(origins=trigger.allowed_origins or "*",
                                methods=[trigger.method.upper()],
                                allow_headers=["Content-Type", "Authorization"])(view)
        return view

    def __call__(self, app: Flask, use_case_info: UseCaseInfo,
                 trigger_info: TriggerInfo, use_case_callable: Callable, **kwargs) -> None:
        options = trigger_info.options
        if not isinstance(options, TriggerHttp):
            return
        path = options.path.replace("{", "<").replace("}", ">")
        mapper = options.mapper if isinstance(options, TriggerMappable) else None
        app.add_url_rule(
            path, endpoint=f"{use_case_info.keyname} {path}", methods=[options.method.upper()],
            view_func=self._view(use_case_info.keyname, use_case_callable, mapper, options))
        logger.debug("registered %s %s for %s", options.method.upper(), path,
                     use_case_info.keyname)
