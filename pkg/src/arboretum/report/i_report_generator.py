from abc import ABC, abstractmethod
from typing import Any, Dict, List, Sequence


class IReportGenerator(ABC):
    """Writes result rows of a pipeline run to output_path and returns summary lines."""

    @staticmethod
    @abstractmethod
    def generate(rows: Sequence[Dict[str, Any]], output_path: str) -> List[str]:
        pass
