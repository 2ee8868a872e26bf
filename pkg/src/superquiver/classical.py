"""Self-contained classical cluster engine over plain exponent->coeff dicts.

Deliberately independent of the super polynomial kernel: this is the oracle
the super engine is compared against after killing the odd variables.
"""

from __future__ import annotations

from .errors import FrozenVertex, NotDivisible


def czero():
    return {}


def cone(n):
    return {(0,) * n: 1}


def cgen(n, a):
    exp = [0] * n
    exp[a - 1] = 1
    return {tuple(exp): 1}


def cadd(p, q):
    out = dict(p)
    for e, c in q.items():
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            del out[e]
    return out


def cmul(p, q):
    out = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            nc = out.get(e, 0) + ca * cb
            if nc:
                out[e] = nc
            else:
                del out[e]
    return out


def cpow(p, k):
    if k < 0:
        raise ValueError("negative power")
    out = None
    base = p
    while True:
        if k & 1:
            out = base if out is None else cmul(out, base)
        k >>= 1
        if not k:
            break
        base = cmul(base, base)
    if out is None:
        n = len(next(iter(p))) if p else 0
        return cone(n)
    return out


def cdiv_exact(p, q):
    """Exact Laurent quotient p/q via shifted leading-term elimination."""
    if not q:
        raise ZeroDivisionError
    if not p:
        return {}
    n = len(next(iter(q)))
    shift_p = [min(e[i] for e in p) for i in range(n)]
    shift_q = [min(e[i] for e in q) for i in range(n)]
    ps = {tuple(a - s for a, s in zip(e, shift_p)): c for e, c in p.items()}
    qs = {tuple(a - s for a, s in zip(e, shift_q)): c for e, c in q.items()}
    lead = max(qs, key=lambda e: (sum(e), e))
    lead_c = qs[lead]
    quo = {}
    while ps:
        top = max(ps, key=lambda e: (sum(e), e))
        mono = tuple(a - b for a, b in zip(top, lead))
        if any(v < 0 for v in mono) or ps[top] % lead_c:
            raise NotDivisible("classical division not exact")
        coeff = ps[top] // lead_c
        quo[mono] = coeff
        for e, c in qs.items():
            key = tuple(a + b for a, b in zip(mono, e))
            nc = ps.get(key, 0) - coeff * c
            if nc:
                ps[key] = nc
            else:
                del ps[key]
    delta = tuple(a - b for a, b in zip(shift_p, shift_q))
    return {tuple(a + b for a, b in zip(e, delta)): c for e, c in quo.items()}


def classical_mutate_matrix(b, k):
    n = len(b)
    kk = k - 1
    out = [list(row) for row in b]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                out[i][j] = -b[i][j]
            elif b[i][kk] > 0 and b[kk][j] > 0:
                out[i][j] = b[i][j] + b[i][kk] * b[kk][j]
            elif b[i][kk] < 0 and b[kk][j] < 0:
                out[i][j] = b[i][j] - b[i][kk] * b[kk][j]
    return [tuple(row) for row in out]


class ClassicalSeed:
    """b-matrix plus commutative Laurent cluster values in the initial basis."""

    def __init__(self, b, cluster=None, frozen=()):
        self.b = [tuple(row) for row in b]
        self.n = len(b)
        self.frozen = frozenset(frozen)
        if cluster is None:
            cluster = [cgen(self.n, a) for a in range(1, self.n + 1)]
        self.cluster = list(cluster)

    def mutate(self, k):
        if k in self.frozen:
            raise FrozenVertex(str(k))
        kk = k - 1
        out_prod = cone(self.n)
        in_prod = cone(self.n)
        for l in range(self.n):
            v = self.b[kk][l]
            if v > 0:
                out_prod = cmul(out_prod, cpow(self.cluster[l], v))
            elif v < 0:
                in_prod = cmul(in_prod, cpow(self.cluster[l], -v))
        new_val = cdiv_exact(cadd(out_prod, in_prod), self.cluster[kk])
        cluster = list(self.cluster)
        cluster[kk] = new_val
        seed = ClassicalSeed(self.b, cluster, self.frozen)
        seed.b = classical_mutate_matrix(self.b, k)
        return seed

    def run(self, ks):
        seed = self
        for k in ks:
            seed = seed.mutate(k)
        return seed
