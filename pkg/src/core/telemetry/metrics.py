import json
import logging
import time
from collections import Counter, defaultdict
from contextlib import ContextDecorator
from dataclasses import dataclass
from typing import Any, Dict, List

logger = logging.getLogger(__name__)


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0

    def add(self, passed: bool) -> None:
        if passed:
            self.passed += 1
        else:
            self.failed += 1


class MetricsCollector:
    """
    Process-wide counters: exact kernel calls, certificates checked per
    operation, and wall time per operation.

    Worker processes keep their own instance; only the parent's numbers reach
    the reports.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance.reset()
        return cls._instance

    def reset(self):
        self.kernel_calls: Counter = Counter()
        self.certificates: Dict[str, Tally] = defaultdict(Tally)
        self.timings: Dict[str, List[float]] = defaultdict(list)

    def track_kernel(self, kernel: str, count: int = 1):
        self.kernel_calls[kernel] += count

    def track_certification(self, operation: str, passed: bool):
        self.certificates[operation].add(passed)
        if not passed:
            logger.error(
                "certificate rejected",
                extra={"metric_type": "certificate", "operation": operation},
            )

    def track_latency(self, operation: str, duration_ms: float):
        self.timings[operation].append(duration_ms)
        logger.debug(
            "operation timed",
            extra={"metric_type": "latency", "operation": operation, "duration_ms": duration_ms},
        )

    def failed_operations(self) -> List[str]:
        return sorted(op for op, tally in self.certificates.items() if tally.failed)

    def get_summary(self) -> Dict[str, Any]:
        tallies = self.certificates.values()
        return {
            "kernels": dict(self.kernel_calls),
            "certificates": {
                "passed": sum(t.passed for t in tallies),
                "failed": sum(t.failed for t in tallies),
                "failed_operations": self.failed_operations(),
            },
            "latency": {
                op: {
                    "count": len(samples),
                    "min": min(samples),
                    "max": max(samples),
                    "avg": sum(samples) / len(samples),
                }
                for op, samples in self.timings.items()
                if samples
            },
        }

    def dump_to_file(self, filepath: str):
        try:
            with open(filepath, "w", encoding="utf-8") as handle:
                json.dump(self.get_summary(), handle, indent=2)
        except OSError as exc:
            logger.error("metrics dump failed", extra={"path": filepath, "error": str(exc)})
            return
        logger.info("metrics dumped", extra={"path": filepath})


class MeasureLatency(ContextDecorator):
    """Records the wall time of a block, or of every call when used as a decorator."""

    def __init__(self, operation: str):
        self.operation = operation
        self.duration_ms = 0.0
        self._start = 0.0

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration_ms = (time.perf_counter() - self._start) * 1000
        MetricsCollector().track_latency(self.operation, self.duration_ms)
        return False
