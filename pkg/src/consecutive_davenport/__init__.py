"""Exact computation of consecutive weighted Davenport constants of finite groups."""

__version__ = "0.1.0"

from .constructions import cyclic_free, extremal_free, metacyclic_free, product_interleave, rank_power_free
from .descriptors import DescriptorError, parse_group, parse_sequence, parse_weights
from .groups import Group, GroupError, MetacyclicParams, abelian, cyclic, dihedral, direct_product, metacyclic, quaternion8, symmetric3
from .sequences import (
    Certificate,
    OrderedSequence,
    WindowAutomaton,
    is_free,
    is_free_unweighted_fast,
    pi_a,
    pi_a_bullet,
    product_one_certificate,
    step,
    weighted_powers,
)
from .solver import (
    INFINITE,
    ConstantResult,
    SearchConfig,
    compute_consecutive,
    compute_consecutive_naive,
    compute_consecutive_unweighted,
    compute_davenport,
    compute_davenport_naive,
    conjecture_sweep,
    is_zero_sum_free,
    verify_value,
)
from .weights import WeightError, WeightSet, explicit_set, full_weight, punctured_set, revalidate, unit_nonsquares, unit_powers, unweighted
