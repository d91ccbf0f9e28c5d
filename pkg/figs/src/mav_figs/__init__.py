"""Chart rendering for MAV experiment CSVs (read-only consumer)."""

from .charts import ChartSpec, Series, build_chart, render, render_chart
from .reader import ChartDataError, RunSeries, SummaryRow, read_run, read_summary

__version__ = "0.1.0"

__all__ = [
    "ChartDataError",
    "ChartSpec",
    "RunSeries",
    "Series",
    "SummaryRow",
    "build_chart",
    "read_run",
    "read_summary",
    "render",
    "render_chart",
    "__version__",
]
