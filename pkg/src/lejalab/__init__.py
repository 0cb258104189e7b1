"""Intertwining Leja sequences and bidimensional Lagrange interpolation toolkit.

The package builds multidimensional node sequences by intertwining
one-dimensional Leja sequences under the graded-lexicographic numeration,
evaluates the explicit bidimensional fundamental Lagrange polynomials on
them, and measures stability quantities (Vandermonde factorizations,
per-basis-polynomial sups, Lebesgue constants) against grid brute force.
"""

from lejalab.numeration import (
    DegreeBlock,
    block_size,
    compare,
    degree_block,
    graded_lex_key,
    index_to_multi,
    multi_to_index,
    successor,
)
from lejalab.leja1d import (
    CompactDescriptor,
    DyadicAngle,
    Ellipse,
    NodeSequence1D,
    SampledBoundary,
    SectionCheck,
    UnitDisk,
    disk_leja_point,
    disk_leja_section,
    greedy_extend,
    verify_leja_section,
)
from lejalab.vdm import (
    FactorPolynomial,
    LogComplex,
    MultidimCheck,
    CounterexampleCheck,
    counterexample_section,
    factor_polynomial,
    intertwine,
    lagrange_basis_ratio,
    random_unimodular,
    schiffer_siciak,
    vdm_direct,
    vdm_telescoped,
    verify_multidim_leja,
)
from lejalab.flip2d import (
    FlipCase,
    FlipContext,
    IndexDecomposition,
    classify,
    decompose,
    flip_eval,
    flip_eval_oracle,
    flip_values,
    lagrange_interpolate,
    oracle_agreement,
)
from lejalab.lebesgue import (
    ConvergenceRow,
    EllipseMap,
    FLIP_UNIFORM_BOUND_SCALE,
    LebesgueReport,
    flip_sup_report,
    flip_uniform_bound,
    interpolant_grid,
    jackson_study,
    lagrange_sum_oracle,
    lebesgue_1d,
    lebesgue_2d,
    lebesgue_2d_mapped,
    mapped_nodes,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeBlock",
    "block_size",
    "compare",
    "degree_block",
    "graded_lex_key",
    "index_to_multi",
    "multi_to_index",
    "successor",
    "CompactDescriptor",
    "DyadicAngle",
    "Ellipse",
    "NodeSequence1D",
    "SampledBoundary",
    "SectionCheck",
    "UnitDisk",
    "disk_leja_point",
    "disk_leja_section",
    "greedy_extend",
    "verify_leja_section",
    "FactorPolynomial",
    "LogComplex",
    "MultidimCheck",
    "CounterexampleCheck",
    "counterexample_section",
    "factor_polynomial",
    "intertwine",
    "lagrange_basis_ratio",
    "random_unimodular",
    "schiffer_siciak",
    "vdm_direct",
    "vdm_telescoped",
    "verify_multidim_leja",
    "FlipCase",
    "FlipContext",
    "IndexDecomposition",
    "classify",
    "decompose",
    "flip_eval",
    "flip_eval_oracle",
    "flip_values",
    "lagrange_interpolate",
    "oracle_agreement",
    "ConvergenceRow",
    "EllipseMap",
    "FLIP_UNIFORM_BOUND_SCALE",
    "LebesgueReport",
    "flip_sup_report",
    "flip_uniform_bound",
    "interpolant_grid",
    "jackson_study",
    "lagrange_sum_oracle",
    "lebesgue_1d",
    "lebesgue_2d",
    "lebesgue_2d_mapped",
    "mapped_nodes",
    "__version__",
]
