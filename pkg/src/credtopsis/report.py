"""Report emission: CSV tables, a plain-text summary, a full-precision sidecar
and an optional SVG chart of the final closeness coefficients."""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from pathlib import Path
from typing import Optional, Sequence

from .engine import RankingResult


@dataclass(frozen=True)
class ReportBundle:
    """One evaluation plus, optionally, its per-scenario results."""

    result: RankingResult
    scenario_results: Optional[Sequence[tuple[str, RankingResult]]] = None


def round_half_away(value: float, decimals: int) -> str:
    """Fixed-point string with ties rounded away from zero, e.g. 0.2545 -> '0.255'."""
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def _fuzzy_csv(path: Path, matrix, decimals: int):
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + list(matrix.cols))
        for label, row in zip(matrix.rows, matrix.cells):
            writer.writerow(
                [label]
                + [
                    "("
                    + ", ".join(round_half_away(v, decimals) for v in cell.as_tuple())
                    + ")"
                    for cell in row
                ]
            )


def _crisp_csv(path: Path, matrix, decimals: int):
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + list(matrix.cols))
        for label, row in zip(matrix.rows, matrix.values):
            writer.writerow([label] + [round_half_away(v, decimals) for v in row])


def _rows_csv(path: Path, header, rows):
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def _summary_text(result: RankingResult, decimals: int) -> str:
    lines = ["Ranking (best first): " + " > ".join(result.ranking()), ""]
    header = f"{'alternative':<12}{'cc_mean':>10}{'cc_std':>10}{'cc_final':>10}{'rank':>6}"
    lines.append(header)
    for i, alt in enumerate(result.alternatives):
        lines.append(
            f"{alt:<12}"
            f"{round_half_away(result.cc_mean[i], decimals):>10}"
            f"{round_half_away(result.cc_std[i], decimals):>10}"
            f"{round_half_away(result.cc_final[i], decimals):>10}"
            f"{result.ranks[i]:>6}"
        )
    if result.weight_warning:
        lines += ["", "warning: " + result.weight_warning]
    return "\n".join(lines) + "\n"


def _full_precision_payload(bundle: ReportBundle) -> dict:
    result = bundle.result
    payload = {
        "alternatives": list(result.alternatives),
        "criteria": list(result.mean_values.cols),
        "weights": list(result.weights),
        "aggregated": [
            [list(cell.as_tuple()) for cell in row] for row in result.aggregated.cells
        ],
        "normalized": [
            [list(cell.as_tuple()) for cell in row] for row in result.normalized.cells
        ],
        "mean_matrix": result.mean_values.values.tolist(),
        "std_dev_matrix": result.std_devs.values.tolist(),
        "mean_ideals": {
            "pis": result.mean_ideals.pis.tolist(),
            "nis": result.mean_ideals.nis.tolist(),
        },
        "std_dev_ideals": {
            "pis": result.std_ideals.pis.tolist(),
            "nis": result.std_ideals.nis.tolist(),
        },
        "separations": {
            "d_mean_plus": result.d_mean_plus.tolist(),
            "d_mean_minus": result.d_mean_minus.tolist(),
            "d_std_plus": result.d_std_plus.tolist(),
            "d_std_minus": result.d_std_minus.tolist(),
        },
        "cc_mean": result.cc_mean.tolist(),
        "cc_std": result.cc_std.tolist(),
        "cc_final": result.cc_final.tolist(),
        "ranks": list(result.ranks),
        "weight_warning": result.weight_warning,
    }
    if bundle.scenario_results is not None:
        payload["scenarios"] = [
            {
                "name": name,
                "cc_final": res.cc_final.tolist(),
                "ranks": list(res.ranks),
                "weights": list(res.weights),
            }
            for name, res in bundle.scenario_results
        ]
    return payload


def _write_chart(path: Path, bundle: ReportBundle):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    result = bundle.result
    alternatives = list(result.alternatives)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    if bundle.scenario_results:
        groups = [(name, res.cc_final) for name, res in bundle.scenario_results]
    else:
        groups = [("weights as given", result.cc_final)]
    width = 0.8 / len(alternatives)
    positions = range(len(groups))
    for i, alt in enumerate(alternatives):
        ax.bar(
            [p + i * width for p in positions],
            [cc[i] for _, cc in groups],
            width=width,
            label=alt,
        )
    ax.set_xticks([p + width * (len(alternatives) - 1) / 2 for p in positions])
    ax.set_xticklabels([name for name, _ in groups], rotation=20, ha="right")
    ax.set_ylabel("final closeness coefficient")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def emit_report(
    bundle: ReportBundle,
    out_dir: str | Path,
    decimals: int = 3,
    emit_chart: bool = False,
    include_intermediates: bool = True,
) -> list[Path]:
    """Write every table of the bundle under ``out_dir``; returns written paths.

    CSVs are rounded to ``decimals`` (half away from zero); the JSON sidecar
    keeps full precision. Output is deterministic: identical inputs and
    options produce byte-identical files.
    """
    if str(out_dir) == "":
        raise FileNotFoundError("output directory path is empty")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    result = bundle.result
    written: list[Path] = []

    def emit(name: str, writer, *args):
        path = out / name
        writer(path, *args)
        written.append(path)

    if include_intermediates:
        emit("aggregated_matrix.csv", _fuzzy_csv, result.aggregated, decimals)
        emit("normalized_matrix.csv", _fuzzy_csv, result.normalized, decimals)
        emit("mean_matrix.csv", _crisp_csv, result.mean_values, decimals)
        emit("std_dev_matrix.csv", _crisp_csv, result.std_devs, decimals)

        ideal_rows = [
            ["mean_pis"] + [round_half_away(v, decimals) for v in result.mean_ideals.pis],
            ["mean_nis"] + [round_half_away(v, decimals) for v in result.mean_ideals.nis],
            ["std_pis"] + [round_half_away(v, decimals) for v in result.std_ideals.pis],
            ["std_nis"] + [round_half_away(v, decimals) for v in result.std_ideals.nis],
        ]
        emit(
            "ideal_values.csv",
            _rows_csv,
            [""] + list(result.mean_values.cols),
            ideal_rows,
        )

        separation_rows = [
            [alt]
            + [
                round_half_away(vec[i], decimals)
                for vec in (
                    result.d_mean_plus,
                    result.d_mean_minus,
                    result.d_std_plus,
                    result.d_std_minus,
                )
            ]
            for i, alt in enumerate(result.alternatives)
        ]
        emit(
            "separations.csv",
            _rows_csv,
            ["", "d_mean_plus", "d_mean_minus", "d_std_plus", "d_std_minus"],
            separation_rows,
        )

    closeness_rows = [
        [
            alt,
            round_half_away(result.cc_mean[i], decimals),
            round_half_away(result.cc_std[i], decimals),
            round_half_away(result.cc_final[i], decimals),
            result.ranks[i],
        ]
        for i, alt in enumerate(result.alternatives)
    ]
    emit(
        "closeness.csv",
        _rows_csv,
        ["", "cc_mean", "cc_std", "cc_final", "rank"],
        closeness_rows,
    )

    if bundle.scenario_results is not None:
        scenario_rows = [
            [name] + [res.ranks[i] for i in range(len(result.alternatives))]
            for name, res in bundle.scenario_results
        ]
        emit(
            "scenario_ranks.csv",
            _rows_csv,
            ["scenario"] + list(result.alternatives),
            scenario_rows,
        )

    summary = out / "ranking.txt"
    summary.write_text(_summary_text(result, decimals), encoding="utf-8")
    written.append(summary)

    sidecar = out / "full_precision.json"
    sidecar.write_text(
        json.dumps(_full_precision_payload(bundle), indent=2) + "\n", encoding="utf-8"
    )
    written.append(sidecar)

    if emit_chart:
        chart = out / "closeness_chart.svg"
        _write_chart(chart, bundle)
        written.append(chart)

    return written
