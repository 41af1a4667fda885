import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

# list fields rendered as tables, in order of preference
TABLE_KEYS = ("checks", "results", "entries", "summaries", "removals", "candidates")


def cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def table_of(payload: Dict[str, Any]) -> Optional[Tuple[str, List[Dict[str, Any]]]]:
    """The first list of records in ``payload`` worth rendering as a table."""
    for key in TABLE_KEYS:
        rows = payload.get(key)
        if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
            return key, rows
    return None


def columns_of(rows: List[Dict[str, Any]]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def flatten(payload: Dict[str, Any], prefix: str = "") -> List[Tuple[str, str]]:
    """Dotted ``key: value`` pairs; lists stay encoded in a single cell."""
    out: List[Tuple[str, str]] = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            out.extend(flatten(value, f"{name}."))
        else:
            out.append((name, cell(value)))
    return out


class BaseReporter(ABC):
    @abstractmethod
    def render(self, payload: Dict[str, Any], metadata: Optional[Dict[str, Any]] = None) -> str:
        """Render a JSON-ready payload (``model_dump(mode="json")``) as text."""

    def generate(
        self,
        payload: Dict[str, Any],
        output_path: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(self.render(payload, metadata))
