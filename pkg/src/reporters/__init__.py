from .base import BaseReporter, jsonable
from .console import ConsoleReporter
from .json import JsonReporter, dumps
from .tracks import TracksReporter

__all__ = [
    "BaseReporter",
    "jsonable",
    "ConsoleReporter",
    "JsonReporter",
    "dumps",
    "TracksReporter",
]
