"""Exact cohomology, Beilinson tables and Ulrich bundles on P^1 x P^2 and
rational normal scrolls."""
from __future__ import annotations

from .chow import (
    ChernCharacter,
    DivisorClass,
    HilbertPolynomial,
    Polynomial,
    ch_line,
    ch_omega_pi,
    compare_reduced,
    euler_pairing,
    hilbert_poly,
    reduced_hilbert_poly,
)
from .cohomology import (
    CohInterval,
    CohVector,
    ExtensionSheaf,
    FormalSheaf,
    LineBundle,
    OmegaPi,
    UndeterminedError,
    coh,
    coh_block,
    coh_extension,
    coh_formal,
    coh_p1,
    coh_p2_line,
    coh_p2_omega,
    coh_window,
    ext_blocks,
    is_acm,
    ulrich_init,
)
from .beilinson import (
    BeilinsonTable,
    Classification,
    beilinson_table,
    classify,
    dual_collection_check,
    normalize_twist,
    semistable_acm_types,
)
from .mutation import (
    UlrichDatum,
    a_seq,
    c_seq,
    is_numerically_rigid,
    left_mutation_class,
    right_mutation_class,
    serre_involution,
    ulrich_class,
)
from .scroll import (
    ScrollDescriptor,
    ScrollDivisor,
    chi_L_dual,
    dimext_bound,
    scroll_coh,
    scroll_ell,
    verify_wildness_cases,
)
from .wildness import (
    DelPezzoDatum,
    WildnessInput,
    cm_wild_criterion,
    dp_family_dim,
    dp_kernel_chi,
    dp_nonulrich_check,
    quasi_minimal_ext_table,
)
from .expr import ParseError, format_sheaf, parse

__version__ = "0.1.0"
