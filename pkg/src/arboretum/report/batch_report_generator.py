from typing import Any, Dict, List, Sequence

import pandas as pd

from .i_report_generator import IReportGenerator

BOOLEAN_COLUMNS = ['agreement', 'tree_field', 'kurosh_ok']


class BatchReportGenerator(IReportGenerator):

    @staticmethod
    def to_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
        return pd.DataFrame(list(rows)).sort_values('seed', kind='stable').reset_index(drop=True)

    @staticmethod
    def summary(report: pd.DataFrame) -> List[str]:
        """One line per boolean column: passing rows over rows where the check ran."""
        lines = []
        for column in BOOLEAN_COLUMNS:
            if column not in report:
                continue
            ran = report[column].dropna()
            lines.append(f'{column}: {int(ran.astype(bool).sum())}/{len(ran)}')
        return lines

    @staticmethod
    def generate(rows: Sequence[Dict[str, Any]], output_path: str) -> List[str]:
        """Write the rows as CSV to output_path and return the summary lines."""
        report = BatchReportGenerator.to_frame(rows)
        report.to_csv(output_path, index=False)
        return BatchReportGenerator.summary(report)
