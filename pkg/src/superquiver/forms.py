"""Mutation-invariant 2-form on extended quivers, over a small super de Rham
calculus with generators dlog x_a (even) and dxi_i (odd).

Sign conventions: for 1-form generators u, v of parities p, r the product
satisfies uv = (-1)^(1+pr) vu, and a function of parity p moves past a
generator of parity r with sign (-1)^(pr).  The exterior derivative is
parity-even and obeys d(fg) = (df)g + f(dg) on functions; in particular
d(xi_i xi_j) = dxi_i xi_j + xi_i dxi_j = -xi_j dxi_i + xi_i dxi_j.
Only this sign makes d a derivation (and the mutation invariance hold) on
products of overlapping odd pairs.
"""

from __future__ import annotations

from .errors import EngineError, FrozenVertex
from .poly import SuperRational, SuperRing
from .quiver import ExtendedQuiver
from .seed import Seed, exchange_numerator


class FormError(EngineError):
    pass


def dlog_gen(a):
    return ("d", a)


def dxi_gen(i):
    return ("t", i)


def gen_parity(g):
    return 1 if g[0] == "t" else 0


def _word_normalize(g1, g2):
    """Canonical word and reordering sign; None for a vanishing word."""
    k1, k2 = g1[0], g2[0]
    if k1 == "d" and k2 == "d":
        if g1 == g2:
            return None, 0
        return ((g1, g2), 1) if g1 < g2 else ((g2, g1), -1)
    if k1 == "t" and k2 == "d":
        return (g2, g1), -1
    if k1 == "d" and k2 == "t":
        return (g1, g2), 1
    # t with t: symmetric, squares survive
    return ((g1, g2), 1) if g1 <= g2 else ((g2, g1), 1)


class SuperForm2:
    """Homogeneous degree-2 form: fraction coefficients stored left of
    canonically ordered two-letter generator words."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SuperRing, terms=None):
        self.ring = ring
        self.terms = {}
        for word, coeff in (terms or {}).items():
            self.add_word(word, coeff)

    def _zero(self):
        return SuperRational(self.ring.zero)

    def add_word(self, word, coeff):
        g1, g2 = word
        norm, sign = _word_normalize(g1, g2)
        if norm is None:
            return
        if sign < 0:
            coeff = -coeff
        cur = self.terms.get(norm)
        total = coeff if cur is None else cur + coeff
        if total.is_zero():
            self.terms.pop(norm, None)
        else:
            self.terms[norm] = total

    def add(self, other):
        out = SuperForm2(self.ring, dict(self.terms))
        for word, coeff in other.terms.items():
            out.add_word(word, coeff)
        return out

    def scaled(self, coeff):
        """Left multiplication by a function-valued coefficient."""
        out = SuperForm2(self.ring)
        for word, c in self.terms.items():
            out.add_word(word, coeff * c)
        return out

    def component(self, kinds):
        """Sub-dictionary of words whose generator kinds equal the pair given,
        e.g. ("t", "t") for the purely odd block."""
        return {w: c for w, c in self.terms.items() if (w[0][0], w[1][0]) == tuple(kinds)}

    def render(self):
        if not self.terms:
            return "0"

        def gname(g):
            if g[0] == "d":
                return f"dlog({self.ring.even_names[g[1] - 1]})"
            return f"d({self.ring.odd_names[g[1] - 1]})"

        parts = []
        for (g1, g2), c in sorted(self.terms.items()):
            parts.append(f"[{c.render()}] {gname(g1)}^{gname(g2)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<SuperForm2 {self.render()}>"


def wedge_one_forms(ring, f1, f2):
    """Product of two coefficient-left 1-forms into a SuperForm2."""
    out = SuperForm2(ring)
    for g1, c1 in f1.items():
        p1 = gen_parity(g1)
        for g2, c2 in f2.items():
            coeff = c2
            if p1:
                par = c2.parity()
                if par is None and not c2.is_zero():
                    raise FormError("coefficient with indefinite parity in wedge")
                if par == 1:
                    coeff = -coeff
            out.add_word((g1, g2), c1 * coeff)
    return out


def d_poly(p):
    """Exterior derivative of a polynomial as a coefficient-left 1-form with
    polynomial coefficients; the dlog slot for x_a carries x_a * (d p / d x_a)."""
    ring = p.ring
    even = {}
    odd = {}
    for odd_idx, exp, c in p.terms():
        for a, e in enumerate(exp):
            if e:
                blk = even.setdefault(a + 1, ring.zero)
                even[a + 1] = blk + ring.term(c * e, exp, odd_idx)
        k = len(odd_idx)
        for t, i in enumerate(odd_idx):
            # move dxi_i to the right past k-1-t odd factors
            sign = -1 if (k - 1 - t) % 2 else 1
            rest = odd_idx[:t] + odd_idx[t + 1:]
            blk = odd.setdefault(i, ring.zero)
            odd[i] = blk + ring.term(c * sign, exp, rest)
    out = {}
    for a, v in even.items():
        if not v.is_zero():
            out[dlog_gen(a)] = SuperRational(v)
    for i, v in odd.items():
        if not v.is_zero():
            out[dxi_gen(i)] = SuperRational(v)
    return out


def dlog_form(p):
    """dp/p as a 1-form with fraction coefficients."""
    return {g: SuperRational(c.num, c.den * p) for g, c in d_poly(p).items()}


def form_of_quiver(q: ExtendedQuiver, ring=None) -> SuperForm2:
    """Sum of dlog x_i ^ dlog x_j over arrows plus d(xi_i xi_j) ^ dlog x_l
    over 2-paths, both weighted by signed multiplicities."""
    if ring is None:
        ring = SuperRing(q.n, q.m)
    omega = SuperForm2(ring)
    one = SuperRational(ring.one)
    for i in range(1, q.n + 1):
        for j in range(i + 1, q.n + 1):
            v = q.b_entry(i, j)
            if v:
                omega.add_word((dlog_gen(i), dlog_gen(j)), one * ring.int(v))
    for (i, j, l), mult in q.path_items():
        pair = d_poly(ring.xi(i) * ring.xi(j))
        dfactor = {dlog_gen(l): one}
        piece = wedge_one_forms(ring, {g: SuperRational(c.num) for g, c in pair.items()}, dfactor)
        omega = omega.add(piece.scaled(SuperRational(ring.int(mult))))
    return omega


def pullback_mutation(omega: SuperForm2, s: Seed, k: int) -> SuperForm2:
    """Express x_k through the exchange relation and the new variable, then
    substitute: dlog x_k becomes dE/E - dlog x_k' while all other generators
    stay fixed.  Intended for seeds whose cluster is the initial one."""
    if k in s.quiver.frozen:
        raise FrozenVertex(str(k))
    ring = omega.ring
    target = dlog_gen(k)
    numerator = exchange_numerator(s, k)
    eta = dlog_form(numerator)
    eta[target] = eta.get(target, SuperRational(ring.zero)) - SuperRational(ring.one)
    out = SuperForm2(ring)
    for (g1, g2), c in omega.terms.items():
        if g1 != target and g2 != target:
            out.add_word((g1, g2), c)
            continue
        f1 = eta if g1 == target else {g1: SuperRational(ring.one)}
        f2 = eta if g2 == target else {g2: SuperRational(ring.one)}
        out = out.add(wedge_one_forms(ring, f1, f2).scaled(c))
    return out


def forms_equal(a: SuperForm2, b: SuperForm2) -> bool:
    if a.ring != b.ring:
        return False
    zero_a = SuperRational(a.ring.zero)
    for word in set(a.terms) | set(b.terms):
        ca = a.terms.get(word, zero_a)
        cb = b.terms.get(word, zero_a)
        if not (ca == cb):
            return False
    return True


def check_invariance(q: ExtendedQuiver, k: int) -> bool:
    """Pull the quiver's form back through the mutation at k and compare with
    the mutated quiver's form; exact equality of every coefficient."""
    from .quiver import mutate

    ring = SuperRing(q.n, q.m)
    omega = form_of_quiver(q, ring)
    pulled = pullback_mutation(omega, Seed.initial(q, ring), k)
    return forms_equal(pulled, form_of_quiver(mutate(q, k), ring))
