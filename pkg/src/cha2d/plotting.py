"""SVG line charts of sweep measures, one file per measure."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .hydrogen import STATE_ORDER  # noqa: E402

#: measures charted by `sweep --plot`
PLOT_COLUMNS = (
    "energy",
    "S_pos", "S_mom", "S_sum",
    "F_pos", "F_mom",
    "C_FS_pos", "C_LMC_pos", "C_LR_pos",
    "C_FS_mom", "C_LMC_mom", "C_LR_mom",
)


def write_line_charts(records, out_stem, columns=PLOT_COLUMNS):
    """Render one SVG per column, one series per state, vs r0.

    Returns the list of files written.
    """
    written = []
    by_state = {label: [r for r in records if r.state == label and r.flags[:5] != "error"]
                for label in STATE_ORDER}
    for column in columns:
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        for label, recs in by_state.items():
            if not recs:
                continue
            xs = [r.r0 for r in recs]
            ys = [getattr(r, column) for r in recs]
            ax.plot(xs, ys, marker="o", markersize=3, label=label)
        ax.set_xlabel("confinement radius r0 (a.u.)")
        ax.set_ylabel(column)
        ax.legend()
        fig.tight_layout()
        path = f"{out_stem}_{column}.svg"
        fig.savefig(path, format="svg")
        plt.close(fig)
        written.append(path)
    return written
