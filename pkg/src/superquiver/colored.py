"""Reduction of extended quivers to classical quivers with frozen color
vertices y_ij standing for the units 1 + xi_i xi_j.

Classical mutation of the colored quiver, corrected by the monomial
transform at the mutated vertex, reproduces the extended mutation; running
the exchange classically and substituting the units afterwards reproduces
the super exchange.  This is the engine's strongest correctness oracle.
"""

from __future__ import annotations

from . import classical
from .errors import FrozenVertex, MalformedColoredQuiver
from .quiver import ExtendedQuiver, mutate as mutate_quiver
from .seed import Seed, mutate_seed, path_factor
from .poly import exact_div


def xv(k):
    return ("x", k)


def yv(i, j):
    return ("y", i, j)


class ColoredQuiver:
    """Classical quiver on x- and y-vertices; y's are always frozen.

    Arrows are stored with net multiplicity, one direction per pair.
    """

    __slots__ = ("n", "m", "arrows", "frozen_x")

    def __init__(self, n, m, arrows=None, frozen_x=()):
        self.n = n
        self.m = m
        self.arrows = {}
        self.frozen_x = frozenset(frozen_x)
        for (u, v), mult in (arrows or {}).items():
            self.add_arrow(u, v, mult)

    def add_arrow(self, u, v, mult):
        if mult == 0:
            return
        if mult < 0:
            u, v, mult = v, u, -mult
        back = self.arrows.get((v, u), 0)
        if back:
            net = mult - back
            if net > 0:
                del self.arrows[(v, u)]
                self.arrows[(u, v)] = net
            elif net < 0:
                self.arrows[(v, u)] = -net
            else:
                del self.arrows[(v, u)]
            return
        self.arrows[(u, v)] = self.arrows.get((u, v), 0) + mult

    def copy(self):
        out = ColoredQuiver(self.n, self.m, frozen_x=self.frozen_x)
        out.arrows = dict(self.arrows)
        return out

    def out_arrows(self, u):
        return sorted((v, m) for (a, v), m in self.arrows.items() if a == u)

    def in_arrows(self, u):
        return sorted((a, m) for (a, v), m in self.arrows.items() if v == u)

    def is_frozen(self, u):
        return u[0] == "y" or (u[0] == "x" and u[1] in self.frozen_x)

    def __eq__(self, other):
        if not isinstance(other, ColoredQuiver):
            return NotImplemented
        return (self.n, self.m, self.arrows, self.frozen_x) == (
            other.n,
            other.m,
            other.arrows,
            other.frozen_x,
        )

    def to_json_obj(self):
        return {
            "n": self.n,
            "m": self.m,
            "arrows": [
                {"from": list(u), "to": list(v), "mult": mult}
                for (u, v), mult in sorted(self.arrows.items())
            ],
            "frozen_x": sorted(self.frozen_x),
        }

    @classmethod
    def from_json_obj(cls, obj):
        out = cls(obj["n"], obj["m"], frozen_x=obj.get("frozen_x", ()))
        for arrow in obj.get("arrows", ()):
            out.add_arrow(tuple(arrow["from"]), tuple(arrow["to"]), arrow["mult"])
        return out


def to_colored(q: ExtendedQuiver) -> ColoredQuiver:
    cq = ColoredQuiver(q.n, q.m, frozen_x=q.frozen)
    for i in range(1, q.n + 1):
        for j in range(i + 1, q.n + 1):
            cq.add_arrow(xv(i), xv(j), q.b_entry(i, j))
    for (i, j, k), mult in q.path_items():
        cq.add_arrow(yv(i, j), xv(k), mult)
    return cq


def from_colored(cq: ColoredQuiver) -> ExtendedQuiver:
    b = [[0] * cq.n for _ in range(cq.n)]
    c = {}
    for (u, v), mult in cq.arrows.items():
        if u[0] == "x" and v[0] == "x":
            b[u[1] - 1][v[1] - 1] += mult
            b[v[1] - 1][u[1] - 1] -= mult
        elif u[0] == "y" and v[0] == "x":
            c[(u[1], u[2], v[1])] = c.get((u[1], u[2], v[1]), 0) + mult
        elif u[0] == "x" and v[0] == "y":
            c[(v[1], v[2], u[1])] = c.get((v[1], v[2], u[1]), 0) - mult
        else:
            raise MalformedColoredQuiver(f"arrow between color vertices: {u} -> {v}")
    return ExtendedQuiver(cq.n, cq.m, b, c, cq.frozen_x)


def classical_mutate(cq: ColoredQuiver, k: int) -> ColoredQuiver:
    """Standard quiver mutation at x_k; arrows between two frozen vertices
    are never created."""
    target = xv(k)
    if cq.is_frozen(target):
        raise FrozenVertex(str(k))
    out = cq.copy()
    ins = cq.in_arrows(target)
    outs = cq.out_arrows(target)
    for u, mu in ins:
        for w, mw in outs:
            if u[0] == "y" and w[0] == "y":
                continue
            out.add_arrow(u, w, mu * mw)
    for u, mu in ins:
        del out.arrows[(u, target)]
        out.add_arrow(target, u, mu)
    for w, mw in outs:
        del out.arrows[(target, w)]
        out.add_arrow(w, target, mw)
    return out


def monomial_transform(cq: ColoredQuiver, k: int, step3="all"):
    """Quiver surgery at x_k plus the recorded variable change.

    For every color vertex y ingoing at x_k: co-ingoing x's get an arrow into
    y, and y gets an arrow to every x outgoing from x_k.  The recorded map
    divides x_k by the ingoing y's -- all of them by default, or only the
    first under step3="first".
    """
    target = xv(k)
    ys_in = [(u, m) for u, m in cq.in_arrows(target) if u[0] == "y"]
    xs_in = [(u, m) for u, m in cq.in_arrows(target) if u[0] == "x"]
    xs_out = [(w, m) for w, m in cq.out_arrows(target) if w[0] == "x"]
    out = cq.copy()
    for y, my in ys_in:
        for u, mu in xs_in:
            out.add_arrow(u, y, mu * my)
        for w, mw in xs_out:
            out.add_arrow(y, w, my * mw)
    if step3 == "first":
        divisors = ys_in[:1]
    elif step3 == "all":
        divisors = ys_in
    else:
        raise ValueError("step3 must be 'all' or 'first'")
    return out, {k: divisors}


def oracle_mutate(s: Seed, k: int):
    """New cluster value at k computed by the classical route: exchange in
    the colored quiver over formal frozen y's, monomial correction for the
    y's that end up ingoing at x_k, then substitution y_ij -> 1 + xi_i xi_j
    and exact division by the old value."""
    q = s.quiver
    q.check_vertex(k)
    if k in q.frozen:
        raise FrozenVertex(str(k))
    y_pairs = sorted({(i, j) for (i, j, kv) in q.paths() if kv == k})
    slot = {pair: q.n + idx for idx, pair in enumerate(y_pairs)}
    nvars = q.n + len(y_pairs)

    out_exp = [0] * nvars
    in_exp = [0] * nvars
    for l in range(1, q.n + 1):
        v = q.b_entry(k, l)
        if v > 0:
            out_exp[l - 1] = v
        elif v < 0:
            in_exp[l - 1] = -v
    for (i, j) in y_pairs:
        mult = q.path_mult(i, j, k)
        if mult > 0:
            in_exp[slot[(i, j)]] = mult
        else:
            out_exp[slot[(i, j)]] = -mult
    formal = classical.cadd({tuple(out_exp): 1}, {tuple(in_exp): 1})
    # monomial transform: divide by each y that was outgoing before mutation
    shift = [0] * nvars
    for (i, j) in y_pairs:
        mult = q.path_mult(i, j, k)
        if mult < 0:
            shift[slot[(i, j)]] = mult
    formal = {tuple(e + d for e, d in zip(exp, shift)): c for exp, c in formal.items()}

    total = s.ring.zero
    for exp, coeff in formal.items():
        term = s.ring.int(coeff)
        for l in range(q.n):
            if exp[l]:
                term = term * s.value(l + 1) ** exp[l]
        for (i, j) in y_pairs:
            e = exp[slot[(i, j)]]
            if e:
                term = term * path_factor(s.ring, i, j, e)
        total = total + term
    return exact_div(total, s.value(k))


def check_reduction(q: ExtendedQuiver, k: int) -> bool:
    """Both halves of the reduction: the classically mutated colored quiver,
    corrected by the monomial transform, translates back to the extended
    mutation; and the classical exchange value matches the super one."""
    mutated_colored, _ = monomial_transform(classical_mutate(to_colored(q), k), k)
    if from_colored(mutated_colored) != mutate_quiver(q, k):
        return False
    s = Seed.initial(q)
    return oracle_mutate(s, k) == mutate_seed(s, k).value(k)
