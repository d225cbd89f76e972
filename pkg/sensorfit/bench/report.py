"""Emit a ComparisonReport as CSV and as aligned text.

The CSV omits wall times so that reruns produce identical bytes; the text
report includes them.
"""

from pathlib import Path

import pandas as pd

from sensorfit.bench.models import ComparisonReport
from sensorfit.config import CSV_DERIVATIVE_COLUMN, CSV_TIME_COLUMN

CSV_COLUMNS = [
    "method",
    "rmse_to_clean",
    "noisy_rmse_to_clean",
    "original_derivative_std",
    "interpolated_derivative_std",
    "error",
]


def report_frame(report: ComparisonReport) -> pd.DataFrame:
    """One row per method, in CSV_COLUMNS order."""
    records = [row.model_dump(mode="json", exclude={"wall_time"}) for row in report.rows]
    return pd.DataFrame.from_records(records, columns=CSV_COLUMNS)


def write_report_csv(report: ComparisonReport, path: Path) -> Path:
    """Write the per-method metrics; failed methods have empty metric cells."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    report_frame(report).to_csv(path, index=False, lineterminator="\n")
    return path


def write_derivatives_csv(report: ComparisonReport, path: Path) -> Path:
    """Write every derivative curve in long form: Source,Time,Derivative."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frames = [
        pd.DataFrame({
            "Source": key,
            CSV_TIME_COLUMN: series.times,
            CSV_DERIVATIVE_COLUMN: series.rates,
        })
        for key, series in report.derivatives.items()
    ]
    columns = ["Source", CSV_TIME_COLUMN, CSV_DERIVATIVE_COLUMN]
    frame = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=columns)
    frame.to_csv(path, index=False, lineterminator="\n")
    return path


def _cell(value) -> str:
    if value is None:
        return "-"
    return f"{value:.6g}"


def format_report(report: ComparisonReport) -> str:
    """Render the report as a fixed-width table followed by any errors."""
    lines = [
        f"Samples: {report.n_samples}    Grid points: {report.grid_points}",
    ]
    if report.clean_derivative_std is not None:
        lines.append(f"Clean derivative std: {report.clean_derivative_std:.6g}")
    lines.append("")

    header = (
        f"{'method':<12}{'rmse_clean':>14}{'noisy_rmse':>14}"
        f"{'orig_d_std':>14}{'interp_d_std':>14}{'time_s':>10}"
    )
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.rows:
        lines.append(
            f"{row.method.value:<12}{_cell(row.rmse_to_clean):>14}{_cell(row.noisy_rmse_to_clean):>14}"
            f"{_cell(row.original_derivative_std):>14}{_cell(row.interpolated_derivative_std):>14}"
            f"{row.wall_time:>10.2f}"
        )

    failed = [row for row in report.rows if not row.ok]
    if failed:
        lines.append("")
        lines.append("Errors:")
        for row in failed:
            lines.append(f"  {row.method.value}: {row.error}")
    return "\n".join(lines) + "\n"


def write_report_text(report: ComparisonReport, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_report(report))
    return path
