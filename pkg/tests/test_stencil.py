"""Stencil-operator identities (jump / sum / wide variants)."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from allspeed.grid import jump, jump2, jump2c, ssum, ssum2

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False,
                   allow_infinity=False, width=64)
small_arrays = arrays(np.float64, st.tuples(st.integers(3, 8),
                                            st.integers(3, 8)),
                      elements=finite)


def test_jump_ssum_explicit():
    a = np.array([[1.0, 4.0, 9.0, 16.0]])
    assert np.array_equal(jump(a), [[3.0, 5.0, 7.0]])
    assert np.array_equal(ssum(a), [[5.0, 13.0, 25.0]])
    assert np.array_equal(jump2c(a), [[8.0, 12.0]])
    assert np.array_equal(ssum2(a), [[18.0, 38.0]])
    assert np.array_equal(jump2(a), [[2.0, 2.0]])


def test_axis_selection():
    a = np.arange(12.0).reshape(3, 4)
    assert np.array_equal(jump(a, axis=0), a[1:] - a[:-1])
    assert np.array_equal(jump(a, axis=1), a[:, 1:] - a[:, :-1])
    assert jump(a, axis=0).shape == (2, 4)
    assert ssum2(a, axis=1).shape == (3, 2)


@given(small_arrays)
@settings(max_examples=50)
def test_wide_operators_compose(a):
    # a_{i+1} - a_{i-1} = sum of adjacent jumps; 1-2-1 = sum of adjacent sums
    assert np.allclose(jump2c(a, 0), jump(a, 0)[1:] + jump(a, 0)[:-1])
    assert np.allclose(ssum2(a, 0), ssum(a, 0)[1:] + ssum(a, 0)[:-1])
    assert np.allclose(jump2(a, 0), jump(a, 0)[1:] - jump(a, 0)[:-1])


@given(small_arrays)
@settings(max_examples=50)
def test_linearity_and_constants(a):
    c = np.full_like(a, 3.5)
    assert np.all(jump(c, 0) == 0.0)
    assert np.all(jump2c(c, 1) == 0.0)
    assert np.all(jump2(c, 0) == 0.0)
    assert np.all(ssum(c, 0) == 7.0)
    assert np.all(ssum2(c, 1) == 14.0)
    assert np.allclose(jump(2.0 * a, 0), 2.0 * jump(a, 0))
    assert np.allclose(ssum(a + c, 0), ssum(a, 0) + ssum(c, 0))


@given(small_arrays)
@settings(max_examples=50)
def test_telescoping(a):
    # sum of jumps along an axis telescopes to the end-point difference
    assert np.allclose(np.sum(jump(a, 0), axis=0), a[-1] - a[0])
