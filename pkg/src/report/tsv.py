from typing import Any, Dict, Optional

from .base import BaseReporter, cell, columns_of, flatten, table_of


class TsvReporter(BaseReporter):
    """Tab separated rows: a record table when the payload has one, else ``key value`` pairs."""

    def render(self, payload: Dict[str, Any], metadata: Optional[Dict[str, Any]] = None) -> str:
        table = table_of(payload)
        if table is None:
            lines = [f"{key}\t{value}" for key, value in flatten(payload)]
        else:
            _, rows = table
            columns = columns_of(rows)
            lines = ["\t".join(columns)]
            lines.extend("\t".join(cell(row.get(c)) for c in columns) for row in rows)
        return "\n".join(lines) + "\n"
