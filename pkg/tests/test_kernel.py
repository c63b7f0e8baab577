from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from b2crystal import kernel

nat4 = st.tuples(*[st.integers(0, 200)] * 4)


def test_known_values():
    assert kernel.r_transfer((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert kernel.r_transfer((1, 0, 0, 0)) == (0, 0, 0, 1)
    assert kernel.r_transfer((1, 1, 1, 1)) == (1, 1, 1, 1)
    assert kernel.r_transfer((1, 1, 1, 0)) == (1, 1, 0, 3)
    assert kernel.r_inverse((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert kernel.r_inverse((0, 0, 0, 1)) == (1, 0, 0, 0)
    assert kernel.r_inverse((1, 1, 0, 3)) == (1, 1, 1, 0)


def test_roundtrip_box():
    for a in product(range(9), repeat=4):
        x = kernel.r_transfer(a)
        assert all(v >= 0 for v in x)
        assert kernel.r_inverse(x) == a
    for x in product(range(9), repeat=4):
        a = kernel.r_inverse(x)
        assert all(v >= 0 for v in a)
        assert kernel.r_transfer(a) == x


@given(nat4)
def test_roundtrip_random(a):
    assert kernel.r_inverse(kernel.r_transfer(a)) == a


def test_backends_agree():
    impls = {name: kernel._IMPLS[name] for name in kernel.available_backends()}
    assert "python" in impls
    if len(impls) == 1:
        pytest.skip("compiled kernel not built")
    for a in product(range(7), repeat=4):
        results_f = {fwd(a) for fwd, _ in impls.values()}
        results_i = {inv(a) for _, inv in impls.values()}
        assert len(results_f) == 1, a
        assert len(results_i) == 1, a


def test_force_backend_roundtrip():
    start = kernel.BACKEND
    prev = kernel.force_backend("python")
    assert prev == start and kernel.BACKEND == "python"
    assert kernel.r_transfer((1, 1, 1, 0)) == (1, 1, 0, 3)
    kernel.force_backend(start)
    assert kernel.BACKEND == start
    with pytest.raises(ValueError):
        kernel.force_backend("fortran")
