"""khs: exact p-primary homotopy of K(S) and its trace-square constituents.

The headline operation assembles the torsion of pi_n K(S) at each odd
prime from four computable constituents (sphere, cokernel of J, the
suspended reduced stunted projective spectrum, and the complement of the
image of J inside K(Z)) and reproduces the published table for n <= 22.
"""

from .abgroups import GroupValue, HomotopyGroup, TorsionGroup, direct_sum, render
from .assemble import ks_group, ks_torsion_at_p, ks_total, table_generate
from .config import Config, load_config
from .cpbar import cp_discrepancy_report, cp_torsion
from .kzeta import ktz_torsion, kz_torsion, y_status
from .numtheory import (
    bernoulli_exact,
    bernoulli_mod,
    irregular_indices,
    is_prime,
    kv_status,
    scan_irregular,
    vp,
)
from .stems import classical_stem_row, coker_j_torsion, image_of_j_torsion, sphere_torsion
from .tcsplit import eigensummand, tc_s_torsion, tc_z_homotopy, trace_pairing

__version__ = "0.1.0"

__all__ = [
    "GroupValue",
    "HomotopyGroup",
    "TorsionGroup",
    "direct_sum",
    "render",
    "ks_group",
    "ks_torsion_at_p",
    "ks_total",
    "table_generate",
    "Config",
    "load_config",
    "cp_discrepancy_report",
    "cp_torsion",
    "ktz_torsion",
    "kz_torsion",
    "y_status",
    "bernoulli_exact",
    "bernoulli_mod",
    "irregular_indices",
    "is_prime",
    "kv_status",
    "scan_irregular",
    "vp",
    "classical_stem_row",
    "coker_j_torsion",
    "image_of_j_torsion",
    "sphere_torsion",
    "eigensummand",
    "tc_s_torsion",
    "tc_z_homotopy",
    "trace_pairing",
    "__version__",
]
