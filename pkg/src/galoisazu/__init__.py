"""Exact construction and certification of Galois extensions of finite-dimensional algebras."""

from __future__ import annotations

from .brauer import class_product, hilbert_symbol, is_split, quaternion_class
from .errors import GaloisAzuError
from .exactfield import cyclotomic_field, element_of_order, extension_field, parse_field, prime_field, rationals
from .findimalg import (
    Algebra,
    centre,
    centralizer,
    char2_quaternion,
    function_algebra,
    is_azumaya_over_field,
    matrix_algebra,
    quaternion_algebra,
    symbol_algebra,
    tensor_algebra,
)
from .frobenius import frobenius_from_galois, is_symmetric, nakayama
from .galois import (
    Extension,
    base_change,
    certify_galois,
    check_morphism,
    fixed_ring_extension,
    ground_extension,
    opposite_extension,
    tensor_galois,
    trivial_extension,
)
from .groupaction import AlgebraAction, GroupSpec, quaternion_v_action, symbol_action, translation_action
from .rmatrix import braid_representation, check_fs_equation, check_yang_baxter, left_mult_operator, quaternion_blocks

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraAction",
    "Extension",
    "GaloisAzuError",
    "GroupSpec",
    "__version__",
    "base_change",
    "braid_representation",
    "centralizer",
    "centre",
    "certify_galois",
    "char2_quaternion",
    "check_fs_equation",
    "check_morphism",
    "check_yang_baxter",
    "class_product",
    "cyclotomic_field",
    "element_of_order",
    "extension_field",
    "fixed_ring_extension",
    "frobenius_from_galois",
    "function_algebra",
    "ground_extension",
    "hilbert_symbol",
    "is_azumaya_over_field",
    "is_split",
    "is_symmetric",
    "left_mult_operator",
    "matrix_algebra",
    "nakayama",
    "opposite_extension",
    "parse_field",
    "prime_field",
    "quaternion_algebra",
    "quaternion_blocks",
    "quaternion_class",
    "quaternion_v_action",
    "rationals",
    "symbol_action",
    "symbol_algebra",
    "tensor_algebra",
    "tensor_galois",
    "translation_action",
    "trivial_extension",
]
