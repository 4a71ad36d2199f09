"""Exact computations in Heisenberg algebras of lattices and their Fock spaces."""

from .lattice import (
    ExtTable,
    GeneratorMap,
    Lattice,
    change_of_form,
    euler_matrix,
    numerical_quotient,
    pair,
    radical,
    smith_normal_form,
)
from .heisenberg import (
    AlgebraElement,
    HeisenbergAlgebra,
    Word,
    commutator,
    equal,
    expand_vector_generator,
    from_power_sums,
    generator,
    idempotent,
    mul,
    normal_order,
    s_binom,
    to_power_sums,
)
from .fock import FockVector, act, basis, faithfulness_report, graded_dim, partition_sum_dim, vacuum
from .diagram import (
    DcrossExpr,
    GroupAlgebraElement,
    cross_check,
    decategorify_qp,
    e_sign,
    e_triv,
    rewrite_link,
    verify_fg,
    verify_sdcross_lemma,
    young_symmetriser,
)

__version__ = "0.1.0"
