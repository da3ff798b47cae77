"""Exact covering statistics for coded grid subshifts.

The package models a family of planar sets built from a coded subshift over
an m-by-n digit grid: hub symbols loop freely, block symbols come in runs
whose lengths are powers of p, and each block run is followed by a tail run
of equal length.  It counts the word families exactly with big-integer
dynamic programming, computes the box-covering estimate and its scale ratio
series, realizes the set geometrically with exact rational rectangles, and
cross-validates every closed form against brute-force oracles.
"""

from .boxdim import (
    BoundCheck,
    ForcedHistogram,
    GapReport,
    ScaleRecord,
    check_large_scale_bound,
    column_count_brute,
    column_count_closed,
    dimension_constants,
    forced_histogram,
    gap_report,
    l_of_k,
    n_hat,
    paper_scales,
    ratio_series,
    scale_record,
)
from .counting import (
    FAMILIES,
    CountTable,
    count_ends_at_hub,
    count_loops,
    count_sigma,
    count_starts_at_hub,
    count_table,
    entropy_series,
    log_big,
    ordered_power_sums,
    reorder_count,
)
from .geometry import (
    Raster,
    Rect,
    cylinder_rect,
    export_csv,
    grid_box_count,
    ifs_map,
    rasterize,
    write_pnm,
)
from .grid import PRESETS, GridConfig, Symbol, load_config, preset, tau
from .scan import BudgetError, Census, Scanner, census, enumerate_words, live_classes
from .verify import VerifyFailure, verify
from .words import ParseOutcome, Word, classify, forced_distance, is_legal, parse

__version__ = "0.1.0"

__all__ = [
    "BoundCheck",
    "BudgetError",
    "Census",
    "CountTable",
    "FAMILIES",
    "ForcedHistogram",
    "GapReport",
    "GridConfig",
    "PRESETS",
    "ParseOutcome",
    "Raster",
    "Rect",
    "ScaleRecord",
    "Scanner",
    "Symbol",
    "VerifyFailure",
    "Word",
    "census",
    "check_large_scale_bound",
    "classify",
    "column_count_brute",
    "column_count_closed",
    "count_ends_at_hub",
    "count_loops",
    "count_sigma",
    "count_starts_at_hub",
    "count_table",
    "cylinder_rect",
    "dimension_constants",
    "entropy_series",
    "enumerate_words",
    "export_csv",
    "forced_distance",
    "forced_histogram",
    "gap_report",
    "grid_box_count",
    "ifs_map",
    "is_legal",
    "l_of_k",
    "live_classes",
    "load_config",
    "log_big",
    "n_hat",
    "ordered_power_sums",
    "paper_scales",
    "parse",
    "preset",
    "rasterize",
    "ratio_series",
    "reorder_count",
    "scale_record",
    "tau",
    "verify",
    "write_pnm",
]
