"""Tangent stiffness tensors for hypoelastic rate formulations.

Thin python layer over the C++ core. Tensors cross the boundary as nested
lists; reports come back as plain dicts mirroring the CLI JSON output.
"""

from ._corotan import (  # noqa: F401
    MANDEL_CONVENTION,
    ConfigError,
    InputAsymmetric,
    MaterialModel,
    MissingSpin,
    NonInvertible,
    NotIsochoric,
    NotMinorSymmetric,
    NotSPD,
    __version__,
    abaqus_ddsdde,
    apply4,
    build_tangent_set,
    det_scan,
    dlog_frechet,
    dlog_tensor,
    eig_sym6_of,
    hill_check,
    hzj_sigma_absolute,
    hzj_sigma_from_tau,
    hzj_tau_absolute,
    integrate_hypoelastic,
    make_model,
    make_state,
    mandel_vec,
    otimes_down,
    otimes_downup,
    otimes_up,
    outer,
    rate_identity_audit,
    rate_names,
    rate_value,
    spatial_tangent,
    spd_log,
    stability_sweep,
    symmetry_flags,
    to_mandel,
    transpose4,
    tsts_check,
    uniaxial_scan,
    wang_li_tensor,
)

__all__ = [name for name in dir() if not name.startswith("_")]
