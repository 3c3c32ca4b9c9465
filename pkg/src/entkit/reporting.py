"""Analysis reports: one structured document per run, rendered two ways.

The machine (JSON) document is the source of truth, with every float rounded
to 12 significant digits; the text rendering is derived from the same values
at 6 significant digits, so both formats always show the same numbers. The
JSON document parses back into an equal report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .entanglement import (
    RANK_TOL,
    RESIDUAL_TOL,
    entanglement_number_schmidt,
    entanglement_number_trace,
    factor_test,
)
from .states import BipartiteState

MACHINE_DIGITS = 12
TEXT_DIGITS = 6


def round_sig(x: float, digits: int = MACHINE_DIGITS) -> float:
    return float(f"{float(x):.{digits}g}")


def complex_to_pair(z: complex, digits: int = MACHINE_DIGITS) -> list[float]:
    return [round_sig(z.real, digits), round_sig(z.imag, digits)]


def pair_to_complex(pair) -> complex:
    return complex(pair[0], pair[1])


def format_complex(z: complex, digits: int = TEXT_DIGITS) -> str:
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def _round_complex(z: complex) -> complex:
    # Rounding happens at report-build time so that emit/parse round-trips.
    return pair_to_complex(complex_to_pair(z))


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze command reports about one state."""

    dims: tuple[int, int]
    verdict: str
    entanglement_number: float
    entanglement_number_schmidt: float
    entanglement_number_trace: float
    route_difference: float
    schmidt_index: int
    distribution: tuple[float, ...]
    fourth_moment: float
    upper_bound: float
    maximal: bool
    factor_method: str
    max_residual: float
    local_left: tuple[complex, ...] | None
    local_right: tuple[complex, ...] | None
    residual_tolerance: float
    rank_tolerance: float


def build_analysis_report(
    state: BipartiteState,
    residual_tol: float = RESIDUAL_TOL,
    rank_tol: float = RANK_TOL,
) -> AnalysisReport:
    """Run the factor test and both entanglement-number routes on a state."""
    verdict = factor_test(state, residual_tol=residual_tol, rank_tol=rank_tol)
    schmidt_report = entanglement_number_schmidt(state, rank_tol=rank_tol)
    trace_report = entanglement_number_trace(state, rank_tol=rank_tol)

    local_left = None
    local_right = None
    if verdict.factorized:
        local_left = tuple(_round_complex(z) for z in verdict.local_left)
        local_right = tuple(_round_complex(z) for z in verdict.local_right)

    return AnalysisReport(
        dims=(state.dim_left, state.dim_right),
        verdict="factorized" if verdict.factorized else "entangled",
        entanglement_number=round_sig(schmidt_report.entanglement_number),
        entanglement_number_schmidt=round_sig(schmidt_report.entanglement_number),
        entanglement_number_trace=round_sig(trace_report.entanglement_number),
        route_difference=round_sig(
            abs(schmidt_report.entanglement_number - trace_report.entanglement_number)
        ),
        schmidt_index=schmidt_report.schmidt_index,
        distribution=tuple(round_sig(w) for w in schmidt_report.distribution),
        fourth_moment=round_sig(trace_report.fourth_moment),
        upper_bound=round_sig(schmidt_report.upper_bound),
        maximal=schmidt_report.maximal,
        factor_method=verdict.method,
        max_residual=round_sig(verdict.max_residual),
        local_left=local_left,
        local_right=local_right,
        residual_tolerance=round_sig(residual_tol),
        rank_tolerance=round_sig(rank_tol),
    )


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "dims": list(report.dims),
        "verdict": report.verdict,
        "entanglement_number": report.entanglement_number,
        "entanglement_number_schmidt": report.entanglement_number_schmidt,
        "entanglement_number_trace": report.entanglement_number_trace,
        "route_difference": report.route_difference,
        "schmidt_index": report.schmidt_index,
        "distribution": list(report.distribution),
        "fourth_moment": report.fourth_moment,
        "upper_bound": report.upper_bound,
        "maximal": report.maximal,
        "factor_method": report.factor_method,
        "max_residual": report.max_residual,
        "local_left": None
        if report.local_left is None
        else [complex_to_pair(z) for z in report.local_left],
        "local_right": None
        if report.local_right is None
        else [complex_to_pair(z) for z in report.local_right],
        "residual_tolerance": report.residual_tolerance,
        "rank_tolerance": report.rank_tolerance,
    }


def report_from_dict(data: dict) -> AnalysisReport:
    return AnalysisReport(
        dims=tuple(data["dims"]),
        verdict=data["verdict"],
        entanglement_number=data["entanglement_number"],
        entanglement_number_schmidt=data["entanglement_number_schmidt"],
        entanglement_number_trace=data["entanglement_number_trace"],
        route_difference=data["route_difference"],
        schmidt_index=data["schmidt_index"],
        distribution=tuple(data["distribution"]),
        fourth_moment=data["fourth_moment"],
        upper_bound=data["upper_bound"],
        maximal=data["maximal"],
        factor_method=data["factor_method"],
        max_residual=data["max_residual"],
        local_left=None
        if data["local_left"] is None
        else tuple(pair_to_complex(p) for p in data["local_left"]),
        local_right=None
        if data["local_right"] is None
        else tuple(pair_to_complex(p) for p in data["local_right"]),
        residual_tolerance=data["residual_tolerance"],
        rank_tolerance=data["rank_tolerance"],
    )


def emit_machine(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def parse_machine(text: str) -> AnalysisReport:
    return report_from_dict(json.loads(text))


def _fmt(x: float) -> str:
    return f"{x:.{TEXT_DIGITS}g}"


def render_text(report: AnalysisReport) -> str:
    rows = [
        ("dims", f"{report.dims[0]} x {report.dims[1]}"),
        ("verdict", report.verdict),
        ("entanglement number", _fmt(report.entanglement_number)),
        ("  schmidt route", _fmt(report.entanglement_number_schmidt)),
        ("  trace route", _fmt(report.entanglement_number_trace)),
        ("  route difference", _fmt(report.route_difference)),
        ("schmidt index", str(report.schmidt_index)),
        ("distribution", " ".join(_fmt(w) for w in report.distribution)),
        ("fourth moment tr(|C|^4)", _fmt(report.fourth_moment)),
        ("upper bound", _fmt(report.upper_bound)),
        ("maximally entangled", "yes" if report.maximal else "no"),
        ("factor method", report.factor_method),
        ("max residual", _fmt(report.max_residual)),
        ("residual tolerance", _fmt(report.residual_tolerance)),
        ("rank tolerance", _fmt(report.rank_tolerance)),
    ]
    if report.local_left is not None:
        rows.append(("local left", " ".join(format_complex(z) for z in report.local_left)))
        rows.append(("local right", " ".join(format_complex(z) for z in report.local_right)))
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows)
