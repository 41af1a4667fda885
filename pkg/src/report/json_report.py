import json
from typing import Any, Dict, Optional

from .base import BaseReporter


class JsonReporter(BaseReporter):
    def render(self, payload: Dict[str, Any], metadata: Optional[Dict[str, Any]] = None) -> str:
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
