"""Figure rendering for the report path.

Matplotlib stays an import-on-demand: commands that never render skip
the cost entirely.  The Agg backend writes straight to files, so the
CLI works the same over ssh and in CI.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def braid_orbit_figure(report, path: str) -> None:
    """Bar chart of braid orbit sizes, labeled by class multiset."""
    plt = _pyplot()
    sizes = [orbit.size for orbit in report.orbits]
    labels = [" ".join(orbit.class_multiset) for orbit in report.orbits]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(sizes) + 1.5), 3.5))
    ax.bar(range(len(sizes)), sizes, color="#4878a8")
    ax.set_xticks(range(len(sizes)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("orbit size")
    ax.set_title(f"braid orbits of {report.tuple_count} tuples (r={report.r})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def noether_sweep_figure(rows, path: str) -> None:
    """Verdict timeline for a range of cyclic group orders.

    ``rows`` are (n, plans_bool, lenstra_status) triples.
    """
    plt = _pyplot()
    status_level = {"rational": 2, "unknown": 1, "not_rational": 0}
    ns = [n for n, _, _ in rows]
    lenstra = [status_level[s] for _, _, s in rows]
    plans = [2 if p else 0 for _, p, _ in rows]
    fig, ax = plt.subplots(figsize=(max(5.0, 0.11 * len(rows) + 2.0), 3.0))
    ax.step(ns, plans, where="mid", color="#c0c0c0", label="plans list")
    ax.scatter(ns, lenstra, s=14, c="#a84848", zorder=3, label="lenstra verdict")
    ax.set_yticks([0, 1, 2])
    ax.set_yticklabels(["not rational", "unknown", "rational"])
    ax.set_xlabel("n")
    ax.legend(loc="center right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
