"""Synthetic benchmark and method comparison for sensorfit.

This package provides:
- models: SyntheticSpec, MethodRow, ComparisonReport
- signals: generate, clean_values, clean_derivative
- spec_file: presets and YAML spec files
- methods: fit_neural, run_method
- comparison: run_comparison
- report: CSV and text emission
"""

from sensorfit.bench.exceptions import BenchError, InvalidSpecError
from sensorfit.bench.models import ComparisonReport, MethodRow, SyntheticSpec
from sensorfit.bench.signals import clean_derivative, clean_values, generate, parse_spec
from sensorfit.bench.spec_file import PRESETS, load_spec_file, resolve_spec, save_spec_file
from sensorfit.bench.methods import MethodFit, NeuralFit, fit_neural, run_method
from sensorfit.bench.comparison import ORIGINAL_KEY, run_comparison
from sensorfit.bench.report import (
    format_report,
    report_frame,
    write_derivatives_csv,
    write_report_csv,
    write_report_text,
)


__all__ = [
    "BenchError",
    "InvalidSpecError",
    "SyntheticSpec",
    "MethodRow",
    "ComparisonReport",
    "generate",
    "parse_spec",
    "clean_values",
    "clean_derivative",
    "PRESETS",
    "load_spec_file",
    "save_spec_file",
    "resolve_spec",
    "NeuralFit",
    "MethodFit",
    "fit_neural",
    "run_method",
    "ORIGINAL_KEY",
    "run_comparison",
    "report_frame",
    "format_report",
    "write_report_csv",
    "write_report_text",
    "write_derivatives_csv",
]
