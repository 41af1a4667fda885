from typing import Any, Dict, Optional

from .base import BaseReporter, cell, columns_of, flatten, table_of


def _escape(text: str) -> str:
    return text.replace("|", "\\|")


class MarkdownReporter(BaseReporter):
    def render(self, payload: Dict[str, Any], metadata: Optional[Dict[str, Any]] = None) -> str:
        title = (metadata or {}).get("title", "addbasis report")
        content = [f"# {title}\n"]

        table = table_of(payload)
        rest = {k: v for k, v in payload.items() if table is None or k != table[0]}
        for key, value in flatten(rest):
            content.append(f"*   **{key}**: `{value}`")

        if table is not None:
            key, rows = table
            columns = columns_of(rows)
            content.append(f"\n## {key}\n")
            content.append("| " + " | ".join(columns) + " |")
            content.append("|" + "---|" * len(columns))
            for row in rows:
                content.append("| " + " | ".join(_escape(cell(row.get(c))) for c in columns) + " |")

        if "ok" in payload:
            content.append("\n✅ all checks passed" if payload["ok"] else "\n❌ some checks failed")
        return "\n".join(content) + "\n"
