"""Exact HOMFLYPT, MFW and Hecke inner-product computations for positive braids."""

from .braidcore import (
    BraidWord, Permutation, perm_of_word, coxeter_length, is_simple_word,
    reduced_word, right_descent, reverse_word, cyclic_shift, embed,
    destabilize_simple, half_twist_word,
)
from .homfly import homfly_positive_closure, homfly_simple_closure
from .inner import gram_matrix, inner_product_def, inner_product_simple
from .mfwindex import (
    classify3, conjugation_normal_form3, corollary6_family, is_mfw_sharp,
    mfw_report, sharpness_certificate,
)
from .poly import Laurent2, coeff_of_v, delta_power, v_degree_bounds
from .resolve import (
    build_tree, collect_decomposition, find_square_split, hecke_decompose_iterative,
)

__version__ = "0.1.0"
