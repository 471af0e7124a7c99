"""Rendering of result tables as aligned text, CSV or JSON lines."""
import json
from typing import Any, Dict, List

import pandas as pd

from config.settings import MACHINE_DIGITS, OUTPUT_FORMATS, TABLE_DIGITS


class TableFormatter:
    """Floats get TABLE_DIGITS significant digits in tables and MACHINE_DIGITS in csv.

    JSON lines carry the shortest repr that round-trips.
    """

    def __init__(self, output_format: str = "table"):
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {output_format!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
        self.output_format = output_format

    def frame(self, frame: pd.DataFrame) -> str:
        if self.output_format == "table":
            text = frame.to_string(index=False, float_format=lambda v: f"{v:.{TABLE_DIGITS}g}")
            return text + "\n"
        if self.output_format == "csv":
            return frame.to_csv(index=False, float_format=f"%.{MACHINE_DIGITS}g", lineterminator="\n")
        return "".join(json.dumps(self._native(record)) + "\n" for record in frame.to_dict(orient="records"))

    def scalar(self, name: str, value: float) -> str:
        if self.output_format == "table":
            return f"{name} {value:.{TABLE_DIGITS}g}\n"
        if self.output_format == "csv":
            return f"{name},{value:.{MACHINE_DIGITS}g}\n"
        return json.dumps({name: float(value)}) + "\n"

    def records(self, rows: List[Dict[str, Any]]) -> str:
        return self.frame(pd.DataFrame(rows))

    @staticmethod
    def _native(record: Dict[str, Any]) -> Dict[str, Any]:
        # numpy scalars are not JSON serialisable
        return {key: value.item() if hasattr(value, "item") else value for key, value in record.items()}
