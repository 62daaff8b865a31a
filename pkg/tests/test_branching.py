"""Branch-convention helpers: the upper-edge rules the whole catalog rests on."""

import math

import numpy as np

from malmsten import branching as br

PI = math.pi


def test_loglog_on_unit_interval_is_upper_branch():
    # pointwise exact: ln|ln x| + i pi, the convention the i*pi entry forces
    xs = np.array([0.01, 0.3, 0.5, 0.9, 0.999])
    vals = br.loglog(xs)
    assert np.allclose(vals.real, np.log(np.abs(np.log(xs))), rtol=0, atol=1e-15)
    assert np.all(vals.imag == PI)


def test_loglog_above_one_is_real():
    xs = np.array([1.5, 2.0, 10.0])
    vals = br.loglog(xs)
    assert np.all(vals.imag == 0.0)
    assert np.allclose(vals.real, np.log(np.log(xs)), rtol=1e-15)


def test_log_neg_is_upper_edge():
    v = br.log_neg(np.array([2.0]))[0]
    assert abs(v - (math.log(2.0) + 1j * PI)) < 1e-15


def test_negative_zero_imag_is_normalized():
    z = complex(-2.0, -0.0)  # would otherwise fall on the lower edge
    assert br.plog(z).item().imag == PI


def test_psqrt_upper():
    assert abs(br.psqrt(np.array([-4.0]))[0] - 2j) < 1e-15


def test_ppow_integer_matches_direct():
    z = np.array([-1.5 + 0.2j])
    assert np.allclose(br.ppow(z, 3), z ** 3)


def test_ppow_principal_fractional():
    got = br.ppow(np.array([-1.0]), 0.25)[0]
    assert abs(got - np.exp(1j * PI / 4)) < 1e-15


def test_cexpm1_small_and_large():
    # exact value frozen from arbitrary precision; the naive exp(z)-1 loses
    # eight digits here, which is the point of the helper
    small = br.cexpm1(np.array([1e-9 + 1e-9j]))[0]
    assert abs(small - (1.0000000000000002e-09 + 1.000000001e-09j)) < 1e-24
    big = br.cexpm1(np.array([2.0 - 1.0j]))[0]
    assert abs(big - (np.exp(2.0 - 1.0j) - 1)) < 1e-14


def test_upper_half_plane_continuity_of_loglog():
    # approaching (0,1) from above reproduces the on-axis convention
    x = 0.37
    lim = br.loglog(np.array([complex(x, 1e-12)]))[0]
    on_axis = br.loglog(np.array([x]))[0]
    assert abs(lim - on_axis) < 1e-9
