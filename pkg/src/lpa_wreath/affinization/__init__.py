from .banded import BandedOperator, banded_mul, dense_window_product
from .loop import (
    AffineElement,
    AffineLoop,
    AffineSpan,
    affine_span,
    generator_letters,
    loop_wreath,
    non_nil_witness,
    prop3_check,
    prop3_witness,
    relations_check,
)
from .radical import radical_matrix_quasi_inverse, radical_probe
