"""Exact root multiplicities for rank-2 symmetric hyperbolic Kac-Moody
algebras, with combinatorial upper bounds from filtered rational Dyck
paths (exact enumeration and Monte-Carlo estimation)."""

from .core_lattice import (
    ALPHA0,
    ALPHA1,
    Rank2Cartan,
    RootClass,
    Weight,
    bilinear_form,
    classify,
    dyck_count,
    mobius,
    simple_reflection,
)
from .counting import BoundReport, bound1, bound2, bound_report, enumerate_dyck
from .peterson import (
    ExactRational,
    MultiplicityTable,
    export_csv,
    kostant_count,
    multiplicity,
    peterson_c,
    positive_roots_up_to,
)
from .sampler import (
    EstimateReport,
    VisitsReport,
    estimate_bound,
    sample_uniform_dyck,
    visits_statistic,
)
from .stability_filters import FilterLevel, cond1, cond1_pair, cond2, passes_filters
from .string_data import (
    DyckPath,
    StringData,
    count_valid_string_data,
    is_dyck,
    littelmann_roots,
    littelmann_valid,
    runs_to_word,
    weight_of,
    word_to_runs,
)

__all__ = [
    "ALPHA0",
    "ALPHA1",
    "BoundReport",
    "DyckPath",
    "EstimateReport",
    "ExactRational",
    "FilterLevel",
    "MultiplicityTable",
    "Rank2Cartan",
    "RootClass",
    "StringData",
    "VisitsReport",
    "Weight",
    "bilinear_form",
    "bound1",
    "bound2",
    "bound_report",
    "classify",
    "cond1",
    "cond1_pair",
    "cond2",
    "count_valid_string_data",
    "dyck_count",
    "enumerate_dyck",
    "estimate_bound",
    "export_csv",
    "is_dyck",
    "kostant_count",
    "littelmann_roots",
    "littelmann_valid",
    "mobius",
    "multiplicity",
    "passes_filters",
    "peterson_c",
    "positive_roots_up_to",
    "runs_to_word",
    "sample_uniform_dyck",
    "simple_reflection",
    "visits_statistic",
    "weight_of",
    "word_to_runs",
]
