from .base import BaseReporter
from .json_report import JsonReporter
from .markdown import MarkdownReporter
from .tsv import TsvReporter
from .manager import ReportManager
from .interfaces import ReporterRegistryPort
from .registry import ReporterRegistry

__all__ = [
    "BaseReporter",
    "JsonReporter",
    "MarkdownReporter",
    "TsvReporter",
    "ReportManager",
    "ReporterRegistry",
    "ReporterRegistryPort",
]
