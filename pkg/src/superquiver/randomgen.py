"""Seeded random instances for the verification sweeps.

Entries are weighted toward zero and +-1: dense quivers full of double
arrows have cluster variables whose size grows doubly exponentially with
the mutation count, which no exact engine can expand; sparse sampling keeps
the whole envelope reachable while the sweeps stay tractable.  See also the
step budget in verify.py.
"""

from __future__ import annotations

import random

from .quiver import ExtendedQuiver


def _clamped_choice(rng, population, bound):
    v = rng.choice(population)
    return max(-bound, min(bound, v))


def random_quiver(rng: random.Random, max_n=5, max_m=4, max_b=2, max_c=2):
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    b_population = [0] * 4 + [1, 1, -1, -1] + [2, -2]
    c_population = [0] * 4 + [1, 1, -1, -1] + [2, -2]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = _clamped_choice(rng, b_population, max_b)
            b[i][j] = v
            b[j][i] = -v
    c = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(1, n + 1):
                v = _clamped_choice(rng, c_population, max_c)
                if v:
                    c[(i, j, k)] = v
    return ExtendedQuiver(n, m, b, c)


def random_sequence(rng: random.Random, q: ExtendedQuiver, max_len=8):
    mutable = [k for k in range(1, q.n + 1) if k not in q.frozen]
    if not mutable:
        return []
    return [rng.choice(mutable) for _ in range(rng.randint(0, max_len))]


def instance(seed: int, index: int, max_n=5, max_m=4, max_b=2, max_c=2, max_len=8):
    """Deterministic (quiver, sequence) pair number `index` of a sweep."""
    rng = random.Random(seed * 0x1F123BB5 + index)
    q = random_quiver(rng, max_n, max_m, max_b, max_c)
    return q, random_sequence(rng, q, max_len)
