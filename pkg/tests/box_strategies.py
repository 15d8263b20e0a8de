import math

from hypothesis import strategies as st

from rotbox.domain.rotated_box import RotatedBox


def finite(low, high):
    return st.floats(min_value=low, max_value=high, allow_nan=False, allow_infinity=False)


@st.composite
def boxes(draw, center=(-20.0, 20.0), size=(0.5, 20.0)):
    return RotatedBox.create(draw(finite(*center)), draw(finite(*center)), draw(finite(*size)), draw(finite(*size)),
                             draw(finite(-math.pi / 2, math.pi / 2)))


@st.composite
def box_pairs(draw):
    """Pairs close enough to overlap in most draws."""
    gt = draw(boxes(center=(-5.0, 5.0), size=(1.0, 15.0)))
    prd = draw(boxes(center=(-5.0, 5.0), size=(1.0, 15.0)))
    return gt, prd
