"""Compiled vs pure-Python kernels: rank over F_p, minimal-generator mask, end to end.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import contextlib
import timeit

import numpy as np

from cutscope import betti as B
from cutscope import kernels
from cutscope.cuts import L_ideal, cut_ideal
from cutscope.graph import cycle
from cutscope.monomial import Monomial


@contextlib.contextmanager
def backend(name: str):
    saved = kernels.rank_mod_p, kernels.minimal_mask
    mod = kernels.get_backend(name)
    kernels.rank_mod_p, kernels.minimal_mask = mod.rank_mod_p, mod.minimal_mask
    try:
        yield mod
    finally:
        kernels.rank_mod_p, kernels.minimal_mask = saved


def boundary_like(rows: int, cols: int, seed: int) -> np.ndarray:
    # sparse +-1 matrix, a few nonzeros per column like a simplicial boundary map
    rng = np.random.default_rng(seed)
    a = np.zeros((rows, cols), dtype=np.int64)
    for c in range(cols):
        idx = rng.choice(rows, size=min(4, rows), replace=False)
        a[idx, c] = rng.choice([1, -1], size=len(idx))
    return a


def mask_input(count: int = 3000, width: int = 12, seed: int = 3):
    # mixed-degree exponent vectors in canonical order, as minimalize hands them over
    rng = np.random.default_rng(seed)
    rows = {tuple(int(x) for x in r) for r in rng.integers(0, 3, size=(count, width)) * (rng.random((count, width)) < 0.5)}
    rows.discard((0,) * width)
    ordered = sorted(rows, key=lambda e: Monomial(e).sort_key())
    exps = np.array(ordered, dtype=np.uint8)
    return exps, exps.sum(axis=1).astype(np.int64)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = ["python"]
    try:
        kernels.get_backend("cython")
        names.append("cython")
    except ImportError:
        print("compiled kernels not built; timing the pure-Python backend only")

    exps, degrees = mask_input()
    cases = {
        "rank 200x300 mod 32003": lambda mod: mod.rank_mod_p(boundary_like(200, 300, 1), 32003),
        "rank 400x400 mod 2": lambda mod: mod.rank_mod_p(boundary_like(400, 400, 2), 2),
        f"minimal_mask {len(exps)} monomials": lambda mod: mod.minimal_mask(exps, degrees),
        "betti I(C_6)": lambda mod: B.betti(cut_ideal(cycle(6))).totals(),
        "betti L(C_6)": lambda mod: B.betti(L_ideal(6)).totals(),
    }
    print(f"{'case':<34}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases.items():
        times, outputs = [], []
        for name in names:
            with backend(name) as mod:
                outputs.append(fn(mod))
                times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        if any(np.any(np.asarray(o) != np.asarray(outputs[0])) for o in outputs):
            raise SystemExit(f"backends disagree on {label}: {outputs}")
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
        print(f"{label:<34}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
