"""CSV ingestion and emission for the Time,Message schema.

Contains:
- read_series_csv: Parse a Time,Message file into a validated TimeSeries
- write_series_csv: Emit times and values as Time,Message
- write_columns_csv: Emit arbitrary named float columns

Lines starting with '#' are comments: they are skipped on read and may be
written above the header.
"""

import io
from pathlib import Path
from typing import Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from sensorfit.config import CSV_TIME_COLUMN, CSV_VALUE_COLUMN
from sensorfit.exceptions import EmptyInputError
from sensorfit.series.exceptions import CsvFormatError, NonFiniteError, NonIncreasingTimeError
from sensorfit.series.models import ArrayLike, TimeSeries
from sensorfit.series.validation import validate_series

EXPECTED_HEADER = [CSV_TIME_COLUMN, CSV_VALUE_COLUMN]


def _content_lines(text: str) -> tuple[list[str], list[int]]:
    """Drop comment and blank lines, keeping 1-based file line numbers."""
    kept: list[str] = []
    numbers: list[int] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        kept.append(line)
        numbers.append(number)
    return kept, numbers


def read_series_csv(path: Path, time_unit: str = "s", value_unit: str = "") -> TimeSeries:
    """Read a Time,Message CSV file into a validated TimeSeries.

    Args:
        path: CSV file with header exactly 'Time,Message'.
        time_unit: Label for the time axis.
        value_unit: Label for the value axis.

    Returns:
        The validated series.

    Raises:
        CsvFormatError: On a wrong header, unparseable or non-finite fields,
            or timestamps that do not strictly increase. Row numbers are file
            line numbers.
    """
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise CsvFormatError(f"cannot read {path}: {e}")
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise CsvFormatError(f"{path}: not valid UTF-8", rows=[line]) from e

    lines, numbers = _content_lines(text)
    if not lines:
        raise CsvFormatError(f"{path} is empty")

    header = [name.strip() for name in lines[0].split(",")]
    if header != EXPECTED_HEADER:
        raise CsvFormatError(
            f"{path}: header must be {','.join(EXPECTED_HEADER)}, got {lines[0].strip()!r}",
            rows=[numbers[0]],
        )
    if len(lines) == 1:
        raise CsvFormatError(f"{path} has a header but no data rows")

    ragged = [number for line, number in zip(lines[1:], numbers[1:]) if line.count(",") != len(EXPECTED_HEADER) - 1]
    if ragged:
        raise CsvFormatError(f"{path}: expected {len(EXPECTED_HEADER)} fields per row", rows=ragged)

    try:
        frame = pd.read_csv(
            io.StringIO("\n".join(lines)),
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
    except (pd.errors.ParserError, ValueError) as e:
        raise CsvFormatError(f"{path}: {e}")

    row_numbers = np.asarray(numbers[1:])
    time_text = frame[CSV_TIME_COLUMN].str.strip()
    value_text = frame[CSV_VALUE_COLUMN].str.strip()

    bad = ~(
        np.isfinite(pd.to_numeric(time_text, errors="coerce").to_numpy(np.float64))
        & np.isfinite(pd.to_numeric(value_text, errors="coerce").to_numpy(np.float64))
    )
    if bad.any():
        raise CsvFormatError(
            f"{path}: unparseable or non-finite fields",
            rows=[int(r) for r in row_numbers[bad]],
        )
    # numpy's parser rounds correctly, so written reprs read back bit for bit
    times = time_text.to_numpy(dtype=str).astype(np.float64)
    values = value_text.to_numpy(dtype=str).astype(np.float64)

    try:
        return validate_series(times, values, time_unit=time_unit, value_unit=value_unit)
    except NonIncreasingTimeError as e:
        raise CsvFormatError(
            f"{path}: Time must be strictly increasing", rows=[int(row_numbers[e.index])]
        ) from e
    except (NonFiniteError, EmptyInputError) as e:
        raise CsvFormatError(f"{path}: {e}") from e


def write_columns_csv(
    path: Path,
    columns: Mapping[str, ArrayLike],
    comments: Optional[Sequence[str]] = None,
) -> Path:
    """Write named columns as CSV, preceded by optional '# ' comment lines.

    Floats are written in their shortest round-trip form, so the same data
    always yields the same bytes.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame({name: np.asarray(data) for name, data in columns.items()})
    with open(path, "w", newline="") as handle:
        for comment in comments or []:
            handle.write(f"# {comment}\n")
        frame.to_csv(handle, index=False, lineterminator="\n")
    return path


def write_series_csv(
    path: Path,
    times: ArrayLike,
    values: ArrayLike,
    comments: Optional[Sequence[str]] = None,
) -> Path:
    """Write times and values under the Time,Message header."""
    return write_columns_csv(
        path,
        {CSV_TIME_COLUMN: np.asarray(times, dtype=np.float64),
         CSV_VALUE_COLUMN: np.asarray(values, dtype=np.float64)},
        comments=comments,
    )
