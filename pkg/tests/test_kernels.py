import random

import pytest

from codegb import kernels
from codegb.code import BinaryCode, BinaryMatrix
from codegb.groebner import compute_gb

from conftest import random_code


def test_python_backend_always_available():
    assert "python" in kernels.BACKENDS


def test_set_default_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.set_default_backend("fortran")


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
def test_backends_agree_on_random_codes():
    rng = random.Random(1234)
    py, cy = kernels.BACKENDS["python"], kernels.BACKENDS["cython"]
    for _ in range(80):
        n = rng.randint(1, 14)
        code = random_code(rng, n, rng.randint(1, n))
        assert py.fglm(n, code.sigma_rows) == cy.fglm(n, code.sigma_rows)
        assert py.fglm(n, code.sigma_rows, True) == cy.fglm(n, code.sigma_rows, True)
        gb = compute_gb(code)
        words = [rng.getrandbits(n) for _ in range(50)]
        assert gb.reducer("python").reduce_many(words) == gb.reducer("cython").reduce_many(words)
        for w in words:
            assert gb.reducer("python").first_divisor(w) == gb.reducer("cython").first_divisor(w)


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
def test_wide_codes_fall_back_to_python():
    assert kernels.fglm_backend(40, "cython").NAME == "python"
    assert kernels.reduce_backend(70, "cython").NAME == "python"
    assert kernels.fglm_backend(20, "cython").NAME == "cython"


def test_python_fglm_handles_long_codes():
    # n = 40 is beyond the compiled kernel; redundancy stays small
    rows = []
    rng = random.Random(7)
    for i in range(37):
        rows.append((1 << i) | (rng.getrandbits(3) << 37))
    code = BinaryCode.from_generator(BinaryMatrix(tuple(rows), 40))
    assert code.k == 37
    gb = compute_gb(code)
    assert gb.backend == "python"
    assert gb.staircase_size == 8


def test_default_backend_switch():
    old = kernels.default_backend()
    try:
        kernels.set_default_backend("python")
        c = BinaryCode.from_generator(BinaryMatrix.from_rows(["110110", "011001"]))
        assert compute_gb(c).backend == "python"
    finally:
        kernels.set_default_backend(old)
