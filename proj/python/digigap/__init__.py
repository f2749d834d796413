"""Grid cell model census, gap detection and counting identities for digital objects."""

from ._core import (
    Cell,
    CellCensus,
    ClassificationOverlap,
    CoordinateOverflow,
    CurveCheck,
    DigitalObject,
    DimensionMismatch,
    DuplicateVoxel,
    GenerationFailure,
    Verdict,
    VerdictTable,
    adjacent_voxels,
    b_count,
    bounds,
    cell_from,
    census,
    cofaces_voxels,
    const_i_from_j,
    const_i_to_j,
    csi_identity_check,
    detect_hubs,
    faces_of,
    g0_closed_form,
    g1_closed_form,
    generate_curve,
    incident,
    intersection_cell,
    run_identity_suite,
    strictly_adjacent,
    validate_curve,
)

__all__ = [name for name in dir() if not name.startswith("_")]
