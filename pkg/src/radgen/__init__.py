"""Exact polynomial ideals and certified up-to-radical generating sets."""

from .constructions import (
    MatrixCriterionInput,
    Prop1Input,
    SvPartition,
    check_sv_lemma1,
    check_sv_lemma2,
    corollary1,
    lift_in_ideal,
    prop1_construct,
    sv_combine,
    theorem1_construct,
)
from .field import GF, QQ, Field
from .ideal import (
    GroebnerBasis,
    Ideal,
    Limits,
    buchberger,
    dimension,
    eliminate,
    groebner,
    ideal_member,
    intersect,
    normal_form,
    radical_equal,
    radical_member,
    reduce_basis,
)
from .paper_suite import build_case, certify_case, verify_decomposition
from .poly import Polynomial, RingContext, cmp_monomials, divide_multi, format_poly, parse_poly

__version__ = "0.1.0"
