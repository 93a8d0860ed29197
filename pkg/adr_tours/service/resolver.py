"""
Base class of the route resolvers of the mission service.

A resolver turns one declared use case trigger into a registered Flask route.
"""
from abc import ABC, abstractmethod
from typing import Callable

from bisslog_schema.schema import TriggerInfo, UseCaseInfo
from flask import Flask


class MissionResolver(ABC):
    """Registers a use case in a Flask application from its trigger metadata."""

    @abstractmethod
    def __call__(self, app: Flask, use_case_info: UseCaseInfo,
                 trigger_info: TriggerInfo, use_case_callable: Callable, **kwargs) -> None:
        """
        Parameters
        ----------
        app : Flask
            Application receiving the route.
        use_case_info : UseCaseInfo
            Use case metadata (key name, description).
        trigger_info : TriggerInfo
            Trigger whose options describe the route.
        use_case_callable : Callable
            Use case implementation.
        """
        raise NotImplementedError
