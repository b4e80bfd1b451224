"""Exact symmetric functions, lambda-ring operations and S_n character theory.

The generator of the free lambda-ring on one object is ``h[1]``; expanding in
N variables is the map sending it to x_1 + ... + x_N.
"""
from .partition import (Partition, conjugate, hook_dimension, make_partition,
                        partitions_of, z_factor)
from .symfunc import SymFunc, degree_components, equals, generator, linear_combine, multiply
from .bases import convert, dual_jacobi_trudi, jacobi_trudi, kostka_number
from .truncation import (LaurentPolyN, PolyN, collect, expand, is_symmetric,
                         laurent_include, splitting_injectivity_report, truncate_var)
from .lambda_ops import adams, lambda_power, omega, plethysm, sigma_power
from .repsn import (ClassFunction, VirtualRep, decompose, frobenius, inner_product,
                    inverse_frobenius, irreducible_character, k_of_F, sign_twist)
from .expr import evaluate, parse_expr, print_expr

__version__ = "0.1.0"

__all__ = [
    "Partition", "conjugate", "hook_dimension", "make_partition", "partitions_of", "z_factor",
    "SymFunc", "degree_components", "equals", "generator", "linear_combine", "multiply",
    "convert", "dual_jacobi_trudi", "jacobi_trudi", "kostka_number",
    "LaurentPolyN", "PolyN", "collect", "expand", "is_symmetric", "laurent_include",
    "splitting_injectivity_report", "truncate_var",
    "adams", "lambda_power", "omega", "plethysm", "sigma_power",
    "ClassFunction", "VirtualRep", "decompose", "frobenius", "inner_product",
    "inverse_frobenius", "irreducible_character", "k_of_F", "sign_twist",
    "evaluate", "parse_expr", "print_expr",
]
