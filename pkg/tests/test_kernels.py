import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cigenus import _pykernels, kernels

compiled = pytest.importorskip("cigenus._ckernels", reason="compiled kernels not built")

coeff = st.builds(Fraction, st.integers(-(10**8), 10**8), st.integers(1, 1000))


@st.composite
def coeff_lists(draw, const=None, nonzero_const=False):
    order = draw(st.integers(0, 16))
    xs = draw(st.lists(coeff, min_size=order + 1, max_size=order + 1))
    if const is not None:
        xs[0] = Fraction(const)
    elif nonzero_const and xs[0] == 0:
        xs[0] = Fraction(1)
    return order, xs


@given(coeff_lists(), st.data())
def test_mul_parity(args, data):
    order, a = args
    b = data.draw(st.lists(coeff, min_size=order + 1, max_size=order + 1))
    assert compiled.mul(a, b, order) == _pykernels.mul(a, b, order)


@given(coeff_lists(nonzero_const=True))
def test_recip_parity(args):
    order, a = args
    assert compiled.recip(a, order) == _pykernels.recip(a, order)


@given(coeff_lists(const=0))
def test_exp_parity(args):
    order, a = args
    assert compiled.exp(a, order) == _pykernels.exp(a, order)


@given(coeff_lists(const=1))
def test_log_parity(args):
    order, a = args
    assert compiled.log(a, order) == _pykernels.log(a, order)


def test_outputs_are_reduced_fractions():
    out = compiled.mul([Fraction(1, 2), Fraction(1, 3)], [Fraction(2), Fraction(3, 4)], 1)
    assert out == [Fraction(1), Fraction(3, 8) + Fraction(2, 3)]
    assert all(isinstance(x, Fraction) for x in out)


def test_compiled_rejects_bad_constant_terms():
    with pytest.raises(ZeroDivisionError):
        compiled.recip([Fraction(0), Fraction(1)], 1)
    with pytest.raises(ValueError):
        compiled.exp([Fraction(1)], 0)
    with pytest.raises(ValueError):
        compiled.log([Fraction(2)], 0)


def test_backend_selection():
    assert kernels.BACKEND == ("python" if os.environ.get("CIGENUS_PURE_PYTHON") else "compiled")
    env = dict(os.environ, CIGENUS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from cigenus import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
