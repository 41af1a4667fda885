import logging
import os
from typing import Any, Dict, List, Optional

from .interfaces import ReporterRegistryPort
from .registry import ReporterRegistry

logger = logging.getLogger(__name__)


class ReportManager:
    """
    Renders command payloads for stdout and, given ``output_dir``, writes one
    file per configured format.
    """

    def __init__(
        self,
        output_dir: Optional[str] = None,
        report_types: Optional[List[str]] = None,
        registry: Optional[ReporterRegistryPort] = None,
        base_name: Optional[str] = None,
    ):
        self.output_dir = output_dir
        self.base_name = base_name
        self._registry = registry or ReporterRegistry()
        self.report_types = (
            [t.lower() for t in report_types]
            if report_types
            else list(self._registry.list_report_types())
        )

    def render(
        self,
        payload: Dict[str, Any],
        report_type: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> str:
        reporter = self._registry.get_reporter(report_type)
        if reporter is None:
            raise ValueError(f"unknown report type {report_type!r}")
        return reporter.render(payload, metadata)

    def _target(self, report_type: str) -> str:
        base_name = self.base_name or self._registry.get_base_name(report_type)
        extension = self._registry.get_extension(report_type) or ""
        return os.path.join(self.output_dir, f"{base_name}{extension}")

    def _ensure_output_dir(self) -> bool:
        try:
            os.makedirs(self.output_dir, exist_ok=True)
        except OSError as exc:
            logger.error("cannot create report directory", extra={"path": self.output_dir, "error": str(exc)})
            return False
        return True

    def generate_all(
        self, payload: Dict[str, Any], metadata: Optional[Dict[str, Any]] = None
    ) -> List[str]:
        """Paths written; a failing reporter is logged and skipped."""
        if not self.output_dir or not self._ensure_output_dir():
            return []

        written = []
        for report_type in self.report_types:
            reporter = self._registry.get_reporter(report_type)
            if reporter is None:
                logger.warning("unknown report type", extra={"report_type": report_type})
                continue
            path = self._target(report_type)
            try:
                reporter.generate(payload, path, metadata=metadata)
            except Exception as exc:
                logger.error(
                    "report generation failed",
                    extra={"reporter": type(reporter).__name__, "error": str(exc)},
                )
                continue
            written.append(path)
            logger.info("report written", extra={"path": path})
        return written
