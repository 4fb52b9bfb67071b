"""Hook-removal operators on odd partitions of symmetric groups."""

from .partition import Partition, HookRef, BetaSet, parse_partition, conjugate, hooks, remove_hook
from .abacus import AbacusConfig, normalized_abacus, core, weight, quotient, from_core_and_quotient
from .tower import (
    quotient_tower,
    core_tower,
    k_data,
    k_type,
    is_odd,
    enumerate_odd,
    binary_digits,
    two_disjoint,
    odd_count,
)
from .operators import f, two_chain, odd_hook_data, R_component, in_G, in_T, classify_omega_type, extensions
from .characters import CycleType, mn_value, degree, omega, omega_variant, rho_gamma
from .counting import G0, Gk, Fkl, Tkl, T0l, omega_counts, unit_value_count
from .verify import VerificationReport, verify_all, verify_structure_lemmas

__version__ = "0.1.0"
