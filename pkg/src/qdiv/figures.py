"""Chart rendering for the command-line reports.

Every renderer takes the same normalized report dictionary the text formats
use (columns plus rows) and writes one figure file.  Charts stick to simple
bar and step plots so the figures stay readable at any parameter size.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _column(report: dict, name: str) -> list:
    idx = report["columns"].index(name)
    return [row[idx] for row in report["rows"]]


def _new_axes(title: str):
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.set_title(title)
    return fig, ax


def _param_line(report: dict) -> str:
    params = report.get("params", {})
    return " ".join(f"{k}={params[k]}" for k in sorted(params))


def _save(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _figure_dims(report: dict, path: str) -> None:
    fig, ax = _new_axes("component dimensions " + _param_line(report))
    ax.bar(_column(report, "s"), _column(report, "dim"), color="#4878a8")
    ax.set_xlabel("degree s")
    ax.set_ylabel("dimension")
    _save(fig, path)


def _figure_edeg(report: dict, path: str) -> None:
    fig, ax = _new_axes("energy bounds " + _param_line(report))
    s = _column(report, "s")
    ax.step(s, _column(report, "e_max"), where="mid", label="max energy")
    ax.step(s, _column(report, "e_min"), where="mid", label="min energy")
    ax.set_xlabel("degree s")
    ax.set_ylabel("energy")
    ax.legend()
    _save(fig, path)


def _figure_socle(report: dict, path: str) -> None:
    fig, ax = _new_axes("socle dimensions " + _param_line(report))
    s = _column(report, "s")
    ax.bar(s, _column(report, "dim"), color="#b0b8c0", label="component")
    ax.bar(s, _column(report, "socle_dim"), color="#4878a8", label="socle")
    ax.set_xlabel("degree s")
    ax.set_ylabel("dimension")
    ax.legend()
    _save(fig, path)


def _figure_loewy(report: dict, path: str) -> None:
    fig, ax = _new_axes("filtration layers " + _param_line(report))
    by_s: dict[int, list[tuple[int, int]]] = {}
    for s, layer, count in zip(
        _column(report, "s"), _column(report, "layer"), _column(report, "layer_dim")
    ):
        by_s.setdefault(s, []).append((layer, count))
    palette = ["#4878a8", "#d08848", "#58a868", "#a85858", "#8868a8", "#a8a848"]
    seen_layers = set()
    for s, parts in sorted(by_s.items()):
        base = 0
        for layer, count in sorted(parts):
            label = f"layer {layer}" if layer not in seen_layers else None
            seen_layers.add(layer)
            ax.bar(s, count, bottom=base, color=palette[layer % len(palette)], label=label)
            base += count
    ax.set_xlabel("degree s")
    ax.set_ylabel("dimension")
    ax.legend()
    _save(fig, path)


def _figure_rigidity(report: dict, path: str) -> None:
    fig, ax = _new_axes("filtration lengths " + _param_line(report))
    ax.bar(_column(report, "s"), _column(report, "loewy_length"), color="#4878a8")
    ax.set_xlabel("degree s")
    ax.set_ylabel("filtration length")
    _save(fig, path)


def _figure_cohomology(report: dict, path: str) -> None:
    fig, ax = _new_axes("cohomology dimensions " + _param_line(report))
    s = _column(report, "s")
    width = 0.4
    ax.bar([v - width / 2 for v in s], _column(report, "dim"), width, label="computed")
    ax.bar(
        [v + width / 2 for v in s],
        _column(report, "expected"),
        width,
        label="binomial",
    )
    ax.set_xlabel("wedge degree s")
    ax.set_ylabel("dimension")
    ax.legend()
    _save(fig, path)


def _figure_identity(report: dict, path: str) -> None:
    fig, ax = _new_axes("dimension identity " + _param_line(report))
    s = _column(report, "s")
    width = 0.4
    ax.bar([v - width / 2 for v in s], _column(report, "dim"), width, label="component")
    ax.bar(
        [v + width / 2 for v in s],
        _column(report, "layer_sum"),
        width,
        label="layer sum",
    )
    ax.set_xlabel("degree s")
    ax.set_ylabel("dimension")
    ax.legend()
    _save(fig, path)


def _figure_exactness(report: dict, path: str) -> None:
    fig, ax = _new_axes("weights checked " + _param_line(report))
    ax.bar(
        _column(report, "total_weight"),
        _column(report, "weights_checked"),
        color="#4878a8",
    )
    ax.set_xlabel("total weight")
    ax.set_ylabel("weights checked")
    _save(fig, path)


_RENDERERS = {
    "dims": _figure_dims,
    "edeg": _figure_edeg,
    "socle": _figure_socle,
    "loewy": _figure_loewy,
    "rigidity": _figure_rigidity,
    "cohomology": _figure_cohomology,
    "identity": _figure_identity,
    "exactness": _figure_exactness,
}


def render_figure(report: dict, path: str) -> None:
    """Write the chart for one report to the given file path."""
    command = report["command"]
    renderer = _RENDERERS.get(command)
    if renderer is None:
        raise ValueError(f"no figure renderer for command {command!r}")
    renderer(report, path)
