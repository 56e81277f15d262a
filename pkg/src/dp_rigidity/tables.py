"""Markdown rendering of the threshold tables and example reports."""
from __future__ import annotations

from .anticanonical import survey
from .exact import rational_str
from .fibrations import EXAMPLES, load_examples, verify_example
from .lct import global_lct_bound
from .picard import BLOWUP, QUADRIC, fano_index_of

REPORT_PARAMS = (1, 2, 3, 5)


def threshold_rows() -> list[tuple[int, str, int, str]]:
    rows = []
    for d in range(1, 10):
        variants = (BLOWUP, QUADRIC) if d == 8 else (BLOWUP,)
        for v in variants:
            r, _ = fano_index_of(d, v)
            rows.append((d, v, r, rational_str(global_lct_bound(d, v))))
    return rows


def shape_census_rows() -> list[tuple[int, int, int, int, int]]:
    """``(d, candidates, index-excluded, intersection-excluded, realizable)``."""
    rows = []
    for d in range(1, 5):
        data = survey(d)
        empty = sum(1 for s in data["kept"] if not data["solved"][s])
        rows.append((d, len(data["shapes"]), len(data["excluded"]), empty,
                     len(data["kept"]) - empty))
    return rows


def example_rows():
    examples = load_examples()
    rows = []
    for name in EXAMPLES:
        spec = examples[name]
        values = REPORT_PARAMS if spec.params else (None,)
        for k in values:
            params = {p: k for p in spec.params}
            rows.append(verify_example(name, params))
    return rows


def emit_tables() -> str:
    out = ["# Anticanonical thresholds on del Pezzo surfaces", "",
           "## Global thresholds", "",
           "| degree | model | Fano index | threshold |",
           "|---:|:---|---:|---:|"]
    for d, v, r, tau in threshold_rows():
        out.append(f"| {d} | {v} | {r} | {tau} |")
    out += ["", "## Decomposition census", "",
            "| degree | candidates | index-excluded | intersection-excluded | realizable |",
            "|---:|---:|---:|---:|---:|"]
    for row in shape_census_rows():
        out.append("| " + " | ".join(str(x) for x in row) + " |")
    out += ["", "## Fibration examples", "",
            "| example | parameters | map valid | t-power | divisor image | fiber | local lct | expected | lc |",
            "|:---|:---|:---|---:|:---|:---|---:|---:|:---|"]
    for r in example_rows():
        params = ", ".join(f"{k}={v}" for k, v in r.params.items()) or "-"
        lct = rational_str(r.local_lct) if r.local_lct is not None else "-"
        exp = rational_str(r.expected_lct) if r.expected_lct is not None else "-"
        lc = "-" if r.is_lc is None else ("yes" if r.is_lc else "no")
        out.append(f"| {r.name} | {params} | {'yes' if r.map_valid else 'no'} | {r.t_power} | "
                   f"{r.transformed_divisor or '-'} | {r.fiber_configuration or '-'} | "
                   f"{lct} | {exp} | {lc} |")
    return "\n".join(out) + "\n"
