import os
import random
import subprocess
import sys

import numpy as np
import pytest

from cutscope import kernels
from cutscope.monomial import Monomial

from conftest import brute_rank_mod_p

BACKENDS = ["python"]
try:
    kernels.get_backend("cython")
    BACKENDS.append("cython")
except ImportError:
    pass


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_rank_against_row_space_count(backend, p):
    mod = kernels.get_backend(backend)
    rng = random.Random(p)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        a = [[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(rows)]
        want = brute_rank_mod_p(a, p)
        assert mod.rank_mod_p(np.array(a, dtype=np.int64), p) == want


@pytest.mark.parametrize("backend", BACKENDS)
def test_rank_edge_cases(backend):
    mod = kernels.get_backend(backend)
    assert mod.rank_mod_p(np.zeros((3, 4), dtype=np.int64), 7) == 0
    assert mod.rank_mod_p(np.eye(5, dtype=np.int64), 32003) == 5
    # full rank over Q, rank 1 over F_2
    assert mod.rank_mod_p(np.array([[1, 1], [1, -1]], dtype=np.int64), 2) == 1
    assert mod.rank_mod_p(np.array([[1, 1], [1, -1]], dtype=np.int64), 3) == 2


def test_backends_agree_on_larger_matrices():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    py, cy = (kernels.get_backend(b) for b in BACKENDS)
    rng = np.random.default_rng(7)
    for p in (2, 3, 32003, 2147483647):
        for _ in range(10):
            r, c = rng.integers(5, 60, size=2)
            a = rng.integers(-2, 3, size=(r, c)).astype(np.int64)
            a[rng.random((r, c)) < 0.6] = 0
            assert py.rank_mod_p(a, p) == cy.rank_mod_p(a, p)


@pytest.mark.parametrize("backend", BACKENDS)
def test_minimal_mask(backend):
    mod = kernels.get_backend(backend)
    rng = random.Random(3)
    for _ in range(50):
        gens = {tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(rng.randint(1, 10))}
        ordered = sorted(gens, key=lambda e: Monomial(e).sort_key())
        degrees = [sum(e) for e in ordered]
        keep = mod.minimal_mask(np.array(ordered, dtype=np.uint8), np.array(degrees, dtype=np.int64))
        want = [
            not any(o != e and all(x <= y for x, y in zip(o, e)) for o in ordered)
            for e in ordered
        ]
        assert [bool(k) for k in keep] == want


def test_pure_python_fallback_end_to_end():
    code = (
        "from cutscope import kernels, betti; from cutscope.cuts import cut_ideal; from cutscope.graph import cycle;"
        "print(kernels.BACKEND, betti.betti(cut_ideal(cycle(4))).totals())"
    )
    env = dict(os.environ, CUTSCOPE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python [8, 24, 24, 7]"
