from .generators import (
    IDENTITY,
    TAU,
    Affine,
    Generator,
    Tau,
    Triangular,
    ZEndomorphism,
    apply_generator,
    apply_word,
    compose,
    invert_generator,
    invert_word,
    triangular,
)
from .jacobian import (
    ElementaryCertificate,
    NotInvertible,
    NotReducible,
    elementary,
    ge2_certificate,
    jacobian,
    mat,
    mat_det,
    mat_mul,
    mat_product,
    z_derivatives,
)
from .normal_form import NormalForm, is_identity, leading_case, normalize, predict_leading
