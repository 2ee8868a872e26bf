"""Extended quivers: a skew-symmetric exchange matrix on even vertices plus
signed multiplicities of oriented 2-paths between odd vertices.

A 2-path multiplicity c[(i, j, k)] with i < j counts paths xi_i -> x_k -> xi_j
when positive and reversed paths when negative; storing one signed integer
per (i, j, k) makes opposite-orientation pairs cancel automatically.
"""

from __future__ import annotations

import json
import re

from .errors import (
    FrozenVertex,
    IndexOutOfRange,
    QuiverError,
    RequiresTwoOddVertices,
    UnknownName,
)


def quiver_diagnostics(n, m, b, c, frozen=()):
    """List of structural problems in raw quiver data; empty means valid."""
    problems = []
    if n < 0 or m < 0:
        problems.append("negative vertex counts")
        return problems
    if len(b) != n or any(len(row) != n for row in b):
        problems.append(f"b must be {n}x{n}")
        return problems
    for i in range(n):
        if b[i][i] != 0:
            problems.append(f"b[{i + 1}][{i + 1}] != 0 (loop)")
        for j in range(i + 1, n):
            if b[i][j] != -b[j][i]:
                problems.append(f"b not skew at ({i + 1},{j + 1})")
    for key in c:
        if len(key) != 3:
            problems.append(f"bad path key {key!r}")
            continue
        i, j, k = key
        if not (1 <= i < j <= m):
            problems.append(f"path key ({i},{j},{k}) must have 1 <= i < j <= {m}")
        if not 1 <= k <= n:
            problems.append(f"path key ({i},{j},{k}) has even vertex outside 1..{n}")
    for k in frozen:
        if not 1 <= k <= n:
            problems.append(f"frozen vertex {k} outside 1..{n}")
    return problems


class ExtendedQuiver:
    __slots__ = ("n", "m", "b", "_c", "frozen")

    def __init__(self, n, m, b, c=None, frozen=()):
        b = tuple(tuple(int(v) for v in row) for row in b)
        c = {tuple(k): int(v) for k, v in (c or {}).items() if int(v) != 0}
        frozen = frozenset(int(k) for k in frozen)
        problems = quiver_diagnostics(n, m, b, c, frozen)
        if problems:
            raise QuiverError("; ".join(problems))
        self.n = n
        self.m = m
        self.b = b
        self._c = c
        self.frozen = frozen

    # -- accessors -----------------------------------------------------------

    def path_mult(self, i, j, k):
        """Signed multiplicity of (xi_i -> x_k -> xi_j); i < j required."""
        return self._c.get((i, j, k), 0)

    def paths(self):
        return dict(self._c)

    def path_items(self):
        return sorted(self._c.items())

    def b_entry(self, i, j):
        return self.b[i - 1][j - 1]

    def arrows_out(self, k):
        """[(target, multiplicity)] for arrows leaving x_k."""
        return [(l + 1, v) for l, v in enumerate(self.b[k - 1]) if v > 0]

    def arrows_in(self, k):
        return [(l + 1, -v) for l, v in enumerate(self.b[k - 1]) if v < 0]

    def check_vertex(self, k):
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"even vertex {k} outside 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, ExtendedQuiver):
            return NotImplemented
        return (self.n, self.m, self.b, self._c, self.frozen) == (
            other.n,
            other.m,
            other.b,
            other._c,
            other.frozen,
        )

    def __hash__(self):
        return hash((self.n, self.m, self.b, tuple(sorted(self._c.items())), self.frozen))

    def __repr__(self):
        return f"<ExtendedQuiver n={self.n} m={self.m} paths={self.path_items()}>"

    # -- serialization -------------------------------------------------------

    def to_json_obj(self):
        return {
            "n": self.n,
            "m": self.m,
            "b": [list(row) for row in self.b],
            "paths": [
                {"i": i, "j": j, "k": k, "mult": v} for (i, j, k), v in self.path_items()
            ],
            "frozen": sorted(self.frozen),
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj):
        c = {(p["i"], p["j"], p["k"]): p["mult"] for p in obj.get("paths", ())}
        return cls(obj["n"], obj["m"], obj["b"], c, obj.get("frozen", ()))


def mutate(q: ExtendedQuiver, k: int) -> ExtendedQuiver:
    """Mutation at the even vertex k.

    The exchange matrix mutates classically; every 2-path through x_k is
    reversed, and each 2-path through x_k propagates to the targets of the
    arrows leaving x_k, weighted by arrow multiplicity.  All updates read the
    pre-mutation data.
    """
    q.check_vertex(k)
    if k in q.frozen:
        raise FrozenVertex(f"vertex {k} is frozen")
    n = q.n
    old = q.b
    kk = k - 1
    new_b = [list(row) for row in old]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                new_b[i][j] = -old[i][j]
            else:
                bik, bkj = old[i][kk], old[kk][j]
                if bik > 0 and bkj > 0:
                    new_b[i][j] = old[i][j] + bik * bkj
                elif bik < 0 and bkj < 0:
                    new_b[i][j] = old[i][j] - bik * bkj
    new_c = dict(q._c)
    for (i, j, kv), mult in q._c.items():
        if kv != k:
            continue
        new_c[(i, j, k)] = -mult
        for l in range(1, n + 1):
            arrows = old[kk][l - 1]
            if l == k or arrows <= 0:
                continue
            new_c[(i, j, l)] = new_c.get((i, j, l), 0) + arrows * mult
    return ExtendedQuiver(n, q.m, new_b, new_c, q.frozen)


def weight_function(q: ExtendedQuiver):
    """Per-vertex signed 2-path count, defined only for two odd vertices."""
    if q.m != 2:
        raise RequiresTwoOddVertices(f"m = {q.m}")
    return tuple(q.path_mult(1, 2, k) for k in range(1, q.n + 1))


def mutate_weight(w, b, k):
    """Weight on the mutated quiver: w'(i) = w(i) + [b_ki]_+ w(k), w'(k) = -w(k)."""
    n = len(w)
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"vertex {k} outside 1..{n}")
    out = list(w)
    for i in range(1, n + 1):
        if i == k:
            out[i - 1] = -w[k - 1]
        else:
            arrows = b[k - 1][i - 1]
            if arrows > 0:
                out[i - 1] = w[i - 1] + arrows * w[k - 1]
    return tuple(out)


def relabel(q: ExtendedQuiver, perm):
    """New quiver with even vertex k renamed to perm[k-1]; odd vertices fixed."""
    if sorted(perm) != list(range(1, q.n + 1)):
        raise QuiverError("perm must be a bijection on 1..n")
    n = q.n
    new_b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new_b[perm[i] - 1][perm[j] - 1] = q.b[i][j]
    new_c = {(i, j, perm[k - 1]): v for (i, j, k), v in q._c.items()}
    new_frozen = {perm[k - 1] for k in q.frozen}
    return ExtendedQuiver(n, q.m, new_b, new_c, new_frozen)


def is_period_one(q: ExtendedQuiver, k: int, perm) -> bool:
    """True when mutating at k and relabeling by perm returns the same quiver."""
    return relabel(mutate(q, k), perm) == q


# -- named builders ----------------------------------------------------------


def somos4_a():
    # arrows: x1->x2, x1->x4, x3->x4, x3->x1 (x2), x4->x2 (x2), x2->x3 (x3)
    b = [
        [0, 1, -2, 1],
        [-1, 0, 3, -2],
        [2, -3, 0, 1],
        [-1, 2, -1, 0],
    ]
    c = {(1, 2, 1): 1, (1, 2, 4): -1}
    return ExtendedQuiver(4, 2, b, c)


def somos4_b():
    a = somos4_a()
    b = [[-v for v in row] for row in a.b]
    c = {(1, 2, 1): 1, (1, 2, 2): 1, (1, 2, 3): -1, (1, 2, 4): -1}
    return ExtendedQuiver(4, 2, b, c)


def two_vertex_example():
    """One arrow x1 -> x2 and the 2-paths xi1 -> x1 -> xi2, xi1 -> x2 -> xi2."""
    return ExtendedQuiver(2, 2, [[0, 1], [-1, 0]], {(1, 2, 1): 1, (1, 2, 2): 1})


def osp_example():
    """Initial quiver for the OSp(1|2) coordinate ring: b <- a -> c with the
    2-path beta -> a -> alpha; b and c frozen."""
    b = [
        [0, 1, 1],
        [-1, 0, 0],
        [-1, 0, 0],
    ]
    return ExtendedQuiver(3, 2, b, {(1, 2, 1): 1}, frozen={2, 3})


def aquiv(m):
    """Path quiver x_1 -> ... -> x_m with m+1 odd vertices wired so that
    mutating x_1,...,x_m reproduces the frieze diagonal recurrence.

    At every even vertex k there is a reversed path xi_{k+1} -> x_k -> xi_k,
    and for k >= 2 also a direct path xi_{k-1} -> x_k -> xi_k.
    """
    if m < 1:
        raise QuiverError("aquiv needs m >= 1")
    b = [[0] * m for _ in range(m)]
    for k in range(m - 1):
        b[k][k + 1] = 1
        b[k + 1][k] = -1
    c = {}
    for k in range(1, m + 1):
        c[(k, k + 1, k)] = -1
        if k >= 2:
            c[(k - 1, k, k)] = 1
    return ExtendedQuiver(m, m + 1, b, c)


_AQUIV_RE = re.compile(r"^aquiv\((\d+)\)$")

_BUILDERS = {
    "somos4_a": somos4_a,
    "somos4_b": somos4_b,
    "osp_example": osp_example,
    "two_vertex_example": two_vertex_example,
}


def named_quiver(name: str) -> ExtendedQuiver:
    builder = _BUILDERS.get(name)
    if builder is not None:
        return builder()
    match = _AQUIV_RE.match(name)
    if match:
        return aquiv(int(match.group(1)))
    raise UnknownName(name)


def quiver_names():
    return sorted(_BUILDERS) + ["aquiv(m)"]
