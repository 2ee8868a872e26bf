"""Exact arithmetic in Z[x_1^{+-1},...,x_n^{+-1}] tensored with the exterior
algebra on xi_1,...,xi_m, plus the fraction layer used by the form calculus.

Elements are immutable once constructed; every operation returns a new value.
"""

from __future__ import annotations

import json

from . import kernel
from .errors import NotDivisible, NotUnit, SignatureError, SubstitutionError


def _mask_of(indices, m):
    mask = 0
    for i in indices:
        if not 1 <= i <= m:
            raise SignatureError(f"odd index {i} outside 1..{m}")
        bit = 1 << (i - 1)
        if mask & bit:
            return None  # repeated factor: the term is zero
        mask |= bit
    return mask


def _mask_indices(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class SuperRing:
    """Signature (n even, m odd) plus display names for the generators."""

    __slots__ = ("n", "m", "even_names", "odd_names")

    def __init__(self, n, m, even_names=None, odd_names=None):
        if n < 0 or m < 0:
            raise SignatureError("generator counts must be nonnegative")
        self.n = n
        self.m = m
        self.even_names = tuple(even_names) if even_names else tuple(f"x{i}" for i in range(1, n + 1))
        self.odd_names = tuple(odd_names) if odd_names else tuple(f"xi{i}" for i in range(1, m + 1))
        if len(self.even_names) != n or len(self.odd_names) != m:
            raise SignatureError("name lists do not match the signature")

    def __eq__(self, other):
        return isinstance(other, SuperRing) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"SuperRing(n={self.n}, m={self.m})"

    def compatible(self, other):
        if not isinstance(other, SuperRing) or (self.n, self.m) != (other.n, other.m):
            raise SignatureError(f"signature mismatch: {self!r} vs {other!r}")

    @property
    def zero_exp(self):
        return (0,) * self.n

    @property
    def zero(self):
        return SuperPoly(self, {})

    @property
    def one(self):
        return SuperPoly(self, {0: {self.zero_exp: 1}})

    def int(self, c):
        c = int(c)
        if not c:
            return self.zero
        return SuperPoly(self, {0: {self.zero_exp: c}})

    def term(self, coeff, xexp=None, odd=()):
        """Single term coeff * x^xexp * xi_{odd}; odd indices ascending."""
        coeff = int(coeff)
        if not coeff:
            return self.zero
        exp = tuple(xexp) if xexp is not None else self.zero_exp
        if len(exp) != self.n:
            raise SignatureError("exponent vector has wrong length")
        odd = tuple(odd)
        if list(odd) != sorted(set(odd)):
            raise SignatureError("odd indices must be strictly increasing")
        mask = _mask_of(odd, self.m)
        return SuperPoly(self, {mask: {exp: coeff}})

    def x(self, a):
        if not 1 <= a <= self.n:
            raise SignatureError(f"even index {a} outside 1..{self.n}")
        exp = [0] * self.n
        exp[a - 1] = 1
        return self.term(1, exp)

    def xi(self, i):
        return self.term(1, None, (i,))

    def even_gens(self):
        return [self.x(a) for a in range(1, self.n + 1)]

    def odd_gens(self):
        return [self.xi(i) for i in range(1, self.m + 1)]

    def odd_pair_unit(self, i, j):
        """1 + xi_i xi_j (sign-sensitive: i > j yields 1 - xi_j xi_i)."""
        return self.one + self.xi(i) * self.xi(j)


class SuperPoly:
    """Sparse sum of (integer coeff) * x^e * xi_S terms in canonical form."""

    __slots__ = ("ring", "_m")

    def __init__(self, ring, term_map):
        self.ring = ring
        self._m = term_map

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self._m

    def __bool__(self):
        return bool(self._m)

    def terms(self):
        """Canonically ordered (odd index tuple, xexp, coeff) triples."""
        out = []
        for mask, block in self._m.items():
            odd = tuple(_mask_indices(mask))
            for exp, c in block.items():
                out.append((odd, exp, c))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def term_count(self):
        return sum(len(b) for b in self._m.values())

    def body(self):
        """The xi-free part."""
        block = self._m.get(0)
        if not block:
            return self.ring.zero
        return SuperPoly(self.ring, {0: dict(block)})

    def soul(self):
        """Complement of the body: every term carries odd factors."""
        rest = {mask: dict(b) for mask, b in self._m.items() if mask}
        return SuperPoly(self.ring, rest)

    def parity(self):
        """0 if all masks even-sized, 1 if all odd-sized, None if mixed or 0."""
        par = None
        for mask in self._m:
            p = mask.bit_count() & 1
            if par is None:
                par = p
            elif par != p:
                return None
        return par

    def classical_projection(self):
        return self.body()

    def constant(self):
        """Coefficient of the unit monomial."""
        return self._m.get(0, {}).get(self.ring.zero_exp, 0)

    def max_exponents(self):
        out = [0] * self.ring.n
        for block in self._m.values():
            for e in block:
                for i, v in enumerate(e):
                    if v > out[i]:
                        out[i] = v
        return tuple(out)

    def min_exponents(self):
        out = [0] * self.ring.n
        for block in self._m.values():
            for e in block:
                for i, v in enumerate(e):
                    if v < out[i]:
                        out[i] = v
        return tuple(out)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SuperPoly):
            self.ring.compatible(other.ring)
            return other
        if isinstance(other, int):
            return self.ring.int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SuperPoly(self.ring, kernel.add_maps(self._m, other._m))

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly(self.ring, kernel.neg_map(self._m))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SuperPoly(self.ring, kernel.sub_maps(self._m, other._m))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SuperPoly(self.ring, kernel.sub_maps(other._m, self._m))

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperPoly(self.ring, kernel.scale_map(self._m, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SuperPoly(self.ring, kernel.mul_maps(self._m, other._m))

    def __rmul__(self, other):
        if isinstance(other, int):
            return SuperPoly(self.ring, kernel.scale_map(self._m, other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            return invert_unit(self) ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.int(other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.ring == other.ring and self._m == other._m

    def __hash__(self):
        items = tuple(sorted((mask, tuple(sorted(b.items()))) for mask, b in self._m.items()))
        return hash((self.ring.n, self.ring.m, items))

    # -- rendering and serialization ----------------------------------------

    def render(self):
        if not self._m:
            return "0"
        parts = []
        for odd, exp, c in self.terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                name = self.ring.even_names[i]
                factors.append(name if e == 1 else f"{name}^{e}")
            for i in odd:
                factors.append(self.ring.odd_names[i - 1])
            mag = abs(c)
            if factors:
                head = "*".join(factors)
                if mag != 1:
                    head = f"{mag}*{head}"
            else:
                head = str(mag)
            parts.append(("-" if c < 0 else "+", head))
        sign, head = parts[0]
        text = head if sign == "+" else f"-{head}"
        for sign, head in parts[1:]:
            text += f" {sign} {head}"
        return text

    def __repr__(self):
        return f"<SuperPoly {self.render()}>"

    def to_json_obj(self):
        return {
            "terms": [
                {"c": str(c), "x": list(exp), "xi": list(odd)}
                for odd, exp, c in self.terms()
            ]
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, ring, obj):
        total = ring.zero
        for t in obj["terms"]:
            total = total + ring.term(int(t["c"]), t.get("x") or None, tuple(t.get("xi", ())))
        return total


# -- module-level operations (the operation surface of the ring) ------------


def mul(p, q):
    return p * q


def classical_projection(p):
    return p.classical_projection()


def exact_div(p, q):
    """The unique r with r*q == p, via a mask-triangular solve.

    The xi-free quotient comes first (commutative exact division by the body
    of q), then each further mask layer subtracts the already-known cross
    terms.  Raises NotDivisible when no exact Laurent quotient exists.
    """
    p.ring.compatible(q.ring)
    if q.is_zero():
        raise ZeroDivisionError("division by zero")
    q0 = q._m.get(0)
    if not q0:
        raise NotDivisible("divisor has no xi-free part")
    universe = 0
    for mask in p._m:
        universe |= mask
    for mask in q._m:
        universe |= mask
    masks = [0]
    s = universe
    while s:
        masks.append(s)
        s = (s - 1) & universe
    masks.sort(key=lambda v: (v.bit_count(), v))
    solved = {}
    for s_mask in masks:
        rhs = dict(p._m.get(s_mask, ()))
        for b_mask, qb in q._m.items():
            if b_mask == 0 or (b_mask & s_mask) != b_mask:
                continue
            ra = solved.get(s_mask ^ b_mask)
            if not ra:
                continue
            sign = kernel.merge_sign(s_mask ^ b_mask, b_mask)
            kernel.block_addmul(rhs, ra, qb, -sign)
        if not rhs:
            continue
        quo = kernel.exact_div_blocks(rhs, q0)
        if quo is None:
            raise NotDivisible("no exact quotient")
        if quo:
            solved[s_mask] = quo
    return SuperPoly(p.ring, solved)


def invert_unit(u):
    """Inverse of c*x^a*(1 + N) with c = +-1 and N nilpotent."""
    body = u._m.get(0)
    if not body or len(body) != 1:
        raise NotUnit("body is not a single monomial")
    (aexp, c), = body.items()
    if c not in (1, -1):
        raise NotUnit("body coefficient is not +-1")
    ring = u.ring
    lead_inv = ring.term(c, tuple(-v for v in aexp))  # c^{-1} = c
    n_part = (u - ring.term(c, aexp)) * lead_inv
    total = ring.one
    power = ring.one
    while True:
        power = -(power * n_part)
        if power.is_zero():
            break
        total = total + power
    return lead_inv * total


def equals_rational(a, b):
    """a/b == c/d by cross multiplication on canonical polynomials."""
    return (a.num * b.den) == (b.num * a.den)


def fraction_is_laurent(r):
    """True iff the fraction reduces to an honest Laurent polynomial."""
    try:
        exact_div(r.num, r.den)
        return True
    except NotDivisible:
        return False


class SuperRational:
    """Unnormalized fraction num/den with an even, body-nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        num.ring.compatible(den.ring)
        if den.is_zero() or not den._m.get(0):
            raise SubstitutionError("denominator must have a nonzero xi-free part")
        if den.parity() == 1:
            raise SubstitutionError("denominator must have even parity")
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value, ring=None):
        if isinstance(value, SuperRational):
            return value
        if isinstance(value, SuperPoly):
            return cls(value)
        if isinstance(value, int):
            if ring is None:
                raise SubstitutionError("integer fraction needs a ring")
            return cls(ring.int(value))
        raise TypeError(f"cannot build a fraction from {value!r}")

    @property
    def ring(self):
        return self.num.ring

    def __add__(self, other):
        other = SuperRational.of(other, self.ring)
        if self.den == other.den:
            return SuperRational(self.num + other.num, self.den)
        return SuperRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return SuperRational(-self.num, self.den)

    def __sub__(self, other):
        other = SuperRational.of(other, self.ring)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperRational(self.num * other, self.den)
        other = SuperRational.of(other, self.ring)
        return SuperRational(self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        if isinstance(other, int):
            return SuperRational(self.num * other, self.den)
        return NotImplemented

    def inverse(self):
        return SuperRational(self.den, self.num)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        out = SuperRational(self.ring.one)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (SuperPoly, int)):
            other = SuperRational.of(other, self.ring)
        if not isinstance(other, SuperRational):
            return NotImplemented
        return equals_rational(self, other)

    def __hash__(self):
        raise TypeError("fractions compare by cross multiplication; not hashable")

    def is_zero(self):
        return self.num.is_zero()

    def parity(self):
        return self.num.parity()

    def to_poly(self):
        """Exact Laurent value of the fraction (raises NotDivisible otherwise)."""
        return exact_div(self.num, self.den)

    def render(self):
        if self.den == self.ring.one:
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"<SuperRational {self.render()}>"


def substitute(p, mapping, target_ring=None):
    """Homomorphic image of p under even-variable -> fraction assignments.

    Every even variable occurring in p with a nonzero exponent must be
    mapped; images must be even-parity fractions over a common ring with the
    same odd signature.  Odd generators are carried over untouched.
    """
    ring = p.ring
    if target_ring is None:
        for value in mapping.values():
            target_ring = value.ring
            break
        else:
            target_ring = ring
    if target_ring.m != ring.m:
        raise SubstitutionError("target ring must keep the odd signature")
    images = {}
    for a, value in mapping.items():
        frac = SuperRational.of(value, target_ring)
        if frac.parity() == 1:
            raise SubstitutionError(f"image of x{a} must be even")
        images[a] = frac
    total = SuperRational(target_ring.zero, target_ring.one)
    for odd, exp, c in p.terms():
        part = SuperRational(target_ring.term(c, None, odd))
        for i, e in enumerate(exp):
            if e == 0:
                continue
            frac = images.get(i + 1)
            if frac is None:
                raise SubstitutionError(f"no image for occurring variable index {i + 1}")
            part = part * (frac ** e)
        total = total + part
    return total
