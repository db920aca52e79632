"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations


def rank_mod_p(matrix, p: int) -> int:
    """Rank over F_p by sparse row elimination keyed on the leading column."""
    rows = []
    for row in matrix:
        d = {j: int(x) % p for j, x in enumerate(row) if int(x) % p}
        if d:
            rows.append(d)
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        while row:
            lead = min(row)
            other = pivots.get(lead)
            if other is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: x * inv % p for j, x in row.items()}
                break
            f = row[lead]
            for j, x in other.items():
                y = (row.get(j, 0) - f * x) % p
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
    return len(pivots)


def minimal_mask(exps, degrees) -> list[bool]:
    exps = [tuple(int(x) for x in e) for e in exps]
    degrees = [int(d) for d in degrees]
    keep = [True] * len(exps)
    for i, ei in enumerate(exps):
        for j in range(i):
            if degrees[j] >= degrees[i]:
                break
            if keep[j] and all(a <= b for a, b in zip(exps[j], ei)):
                keep[i] = False
                break
    return keep
