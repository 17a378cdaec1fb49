"""Projective geometry of tetrahedral quartics built from explicit coefficients."""

from .coefficients import (
    COEFFICIENT_NAMES,
    COPLANAR_SAMPLE,
    EDGE_KEYS,
    REFERENCE_SAMPLE,
    QuarticCoefficients,
    coplanar_residual_sample,
    parse_input,
)
from .fibrations import PENCILS, FiberReport, all_fibrations, fibration_fibers, pencil_cubic, ternary_cubic_discriminant
from .lines import Line, LineEnumeration, enumerate_lines, lines_in_chart, named_lines
from .sextic import (
    PLANE,
    BranchSextic,
    branch_sextic,
    conic_parametrization,
    cusp_reports,
    edge_parametrization,
    line_parametrization,
    printed_branch_sextic,
    tangency_cubic_check,
    tritangency_check,
)
from .surface import (
    VARS,
    VERTICES,
    TetraQuartic,
    all_cross_ratio_oracles,
    build_quartic,
    classify_plane_point,
    classify_surface_point,
    cross_ratio_oracle,
    cross_ratio_relation,
    cross_ratios,
    edge_vanishes,
    singular_locus_count,
    symbolic_cross_ratio_relation,
)
