from dataclasses import dataclass
from typing import Dict, List, Optional, Type

from src.report.base import BaseReporter
from src.report.json_report import JsonReporter
from src.report.markdown import MarkdownReporter
from src.report.tsv import TsvReporter

DEFAULT_BASE_NAME = "addbasis_report"


@dataclass(frozen=True)
class ReportFormat:
    cls: Type[BaseReporter]
    extension: str
    base_name: str = DEFAULT_BASE_NAME


class ReporterRegistry:
    """Output formats by name; lookups ignore case."""

    def __init__(self) -> None:
        self._formats: Dict[str, ReportFormat] = {
            "json": ReportFormat(JsonReporter, ".json"),
            "tsv": ReportFormat(TsvReporter, ".tsv"),
            "markdown": ReportFormat(MarkdownReporter, ".md"),
        }

    def register_reporter(
        self,
        report_type: str,
        cls: Type[BaseReporter],
        extension: str,
        base_name: str = DEFAULT_BASE_NAME,
    ) -> None:
        self._formats[report_type.lower()] = ReportFormat(cls, extension, base_name)

    def list_report_types(self) -> List[str]:
        return list(self._formats)

    def _lookup(self, report_type: str) -> Optional[ReportFormat]:
        return self._formats.get(report_type.lower())

    def get_reporter(self, report_type: str) -> Optional[BaseReporter]:
        fmt = self._lookup(report_type)
        return fmt.cls() if fmt else None

    def get_extension(self, report_type: str) -> Optional[str]:
        fmt = self._lookup(report_type)
        return fmt.extension if fmt else None

    def get_base_name(self, report_type: str) -> Optional[str]:
        fmt = self._lookup(report_type)
        return fmt.base_name if fmt else None
