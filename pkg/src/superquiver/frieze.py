"""Superfrieze generation and validation.

Index scheme: even entries f(i, j) carry integer indices with row r = j - i;
interior rows are 0..width-1, bounded by rows of 1's (r = -1 and r = width)
and 0's (r = -2 and r = width+1).  Odd entries carry either integer or
half-integer index pairs; both flavors are stored under doubled indices
(i2, j2) = (2i, 2j), live in regions r = (j2 - i2)/2 from 0 to width, and
vanish on the boundary regions r = -1 and r = width+1.

An elementary diamond with top entry f(i, j) consists of

            f(i,j)
    phi(i-1/2,j+1/2)  phi(i,j+1)
    f(i-1,j)              f(i,j+1)
    phi(i-1,j+1)  phi(i-1/2,j+3/2)
            f(i-1,j+1)

read (top; upper-left, upper-right; left, right; lower-left, lower-right;
bottom), and the generator fills south-east diagonals one at a time.
"""

from __future__ import annotations

from .errors import CoefficientExtractionFailure, InvalidWidth
from .osp import SchrodingerSystem, minus_one_monodromy, monodromy
from .poly import SuperPoly, SuperRing, exact_div


class SuperFrieze:
    __slots__ = ("width", "ring", "even", "odd", "diagonals")

    def __init__(self, width, ring, even, odd, diagonals):
        self.width = width
        self.ring = ring
        self.even = even  # {(i, j): SuperPoly}, interior rows only
        self.odd = odd  # {(i2, j2): SuperPoly}, doubled indices, regions 0..m
        self.diagonals = diagonals  # even diagonals 0..diagonals-1 stored

    @property
    def period(self):
        return self.width + 3

    # -- entry access with synthesized boundary rows -------------------------

    def f(self, i, j):
        r = j - i
        if r in (-1, self.width):
            return self.ring.one
        if r in (-2, self.width + 1):
            return self.ring.zero
        return self.even[(i, j)]

    def phi2(self, i2, j2):
        r2 = j2 - i2
        if r2 % 2:
            raise KeyError("odd-entry indices must share the half/integer flavor")
        r = r2 // 2
        if r in (-1, self.width + 1):
            return self.ring.zero
        return self.odd[(i2, j2)]

    def has_diagonal(self, i):
        return 0 <= i < self.diagonals

    # -- serialization --------------------------------------------------------

    def to_json_obj(self):
        d = self.diagonals
        return {
            "width": self.width,
            "period": self.period,
            "diagonals": d,
            "even": [
                [self.even[(i, i + r)].to_json_obj() for i in range(d)]
                for r in range(self.width)
            ],
            "odd": [
                [self.odd[(i2, i2 + 2 * r)].to_json_obj() for i2 in range(2 * d)]
                for r in range(self.width + 1)
            ],
            "offsets": {"even_first_i": 0, "odd_first_i2": 0},
        }

    @classmethod
    def from_json_obj(cls, obj, ring=None):
        width = obj["width"]
        d = obj["diagonals"]
        if ring is None:
            ring = SuperRing(width, width + 1)
        even = {}
        for r, row in enumerate(obj["even"]):
            for i, poly in enumerate(row):
                even[(i, i + r)] = SuperPoly.from_json_obj(ring, poly)
        odd = {}
        for r, row in enumerate(obj["odd"]):
            for i2, poly in enumerate(row):
                odd[(i2, i2 + 2 * r)] = SuperPoly.from_json_obj(ring, poly)
        return cls(width, ring, even, odd, d)

    # -- text rendering --------------------------------------------------------

    def render_text(self, diagonals=None):
        """Staggered layout over the stored window, boundary rows included."""
        d = diagonals if diagonals is not None else min(self.diagonals, self.period + 2)
        cells = {}
        for r in range(-2, self.width + 2):
            for i in range(d):
                j = i + r
                try:
                    val = self.f(i, j)
                except KeyError:
                    continue
                cells[(2 * (i + j), 2 * r)] = val.render()
        for r in range(-1, self.width + 2):
            for i2 in range(2 * d):
                j2 = i2 + 2 * r
                try:
                    val = self.phi2(i2, j2)
                except KeyError:
                    continue
                # horizontal position of phi(i,j) is i + j - 1/2
                cells[(i2 + j2 - 1, 2 * r - 1)] = val.render()
        if not cells:
            return ""
        colw = max(len(s) for s in cells.values()) + 2
        xs = sorted({x for x, _ in cells})
        ys = sorted({y for _, y in cells})
        xpos = {x: idx for idx, x in enumerate(xs)}
        lines = []
        for y in ys:
            row = [" " * colw] * len(xs)
            for (x, yy), text in cells.items():
                if yy == y:
                    row[xpos[x]] = text.center(colw)
            lines.append("".join(row).rstrip())
        return "\n".join(line for line in lines if line.strip())


def generate(width, diagonals=None, ring=None, even_values=None, odd_values=None):
    """Generate a frieze from one initial south-east diagonal.

    The initial data is x_1..x_m down the diagonal and xi_1..xi_{m+1} on its
    upper-right companions; by default these are the ring generators, giving
    the universal symbolic frieze.  Every division is exact.
    """
    if width < 1:
        raise InvalidWidth(str(width))
    m = width
    n = m + 3
    if diagonals is None:
        diagonals = 2 * n + 1
    if ring is None:
        ring = SuperRing(m, m + 1)
    if even_values is None:
        xs = [ring.x(a) for a in range(1, m + 1)]
    else:
        xs = [v if isinstance(v, SuperPoly) else ring.int(v) for v in even_values]
    if odd_values is None:
        xis = [ring.xi(t) for t in range(1, m + 2)]
    else:
        xis = [v if isinstance(v, SuperPoly) else ring.int(v) for v in odd_values]
        if any(v.parity() == 0 and not v.is_zero() for v in xis):
            raise InvalidWidth("odd initial entries must have odd parity or vanish")
    if len(xs) != m or len(xis) != m + 1:
        raise InvalidWidth("need m even and m+1 odd initial entries")

    fr = SuperFrieze(m, ring, {}, {}, diagonals)
    for k in range(1, m + 1):
        fr.even[(0, k - 1)] = xs[k - 1]
    for t in range(1, m + 2):
        fr.odd[(1, 2 * t - 1)] = xis[t - 1]
    # integer odd companions of the initial diagonal
    for j in range(-1, m):
        val = fr.f(0, j) * fr.phi2(1, 2 * j + 3) - fr.f(0, j + 1) * fr.phi2(1, 2 * j + 1)
        fr.odd[(0, 2 * (j + 1))] = val

    for i in range(diagonals - 1):
        # next even diagonal via the diamond determinant relation
        for j in range(i, i + m):
            u_hi = fr.phi2(2 * i + 1, 2 * j + 3)
            u_lo = fr.phi2(2 * i + 1, 2 * j + 1)
            num = ring.one + fr.f(i + 1, j) * fr.f(i, j + 1) + u_hi * u_lo
            fr.even[(i + 1, j + 1)] = exact_div(num, fr.f(i, j))
        # next half-integer odd series; the offset is the first entry of the
        # current series (the difference of adjacent series is proportional
        # to the new even diagonal)
        kappa = fr.phi2(2 * i + 1, 2 * i + 1)
        for t in range(i + 1, i + m + 2):
            fr.odd[(2 * i + 3, 2 * t + 1)] = fr.phi2(2 * i + 1, 2 * t + 1) - kappa * fr.f(i + 1, t)
        # integer odd series of the new diagonal
        for j in range(i, i + m + 1):
            val = fr.f(i + 1, j) * fr.phi2(2 * i + 3, 2 * j + 3) - fr.f(i + 1, j + 1) * fr.phi2(
                2 * i + 3, 2 * j + 1
            )
            fr.odd[(2 * (i + 1), 2 * (j + 1))] = val
    return fr


def diamond_entries(fr: SuperFrieze, i, j):
    """The nine entries of the elementary diamond with top entry f(i, j)."""
    return {
        "top": fr.f(i, j),
        "left": fr.f(i - 1, j),
        "right": fr.f(i, j + 1),
        "bottom": fr.f(i - 1, j + 1),
        "upper_left": fr.phi2(2 * i - 1, 2 * j + 1),
        "upper_right": fr.phi2(2 * i, 2 * j + 2),
        "lower_left": fr.phi2(2 * i - 2, 2 * j + 2),
        "lower_right": fr.phi2(2 * i - 1, 2 * j + 3),
    }


def check_diamonds(fr: SuperFrieze) -> bool:
    """Frieze rule (plus the two derived relations) on every stored diamond,
    boundary rows included."""
    one = fr.ring.one
    for i in range(1, fr.diagonals):
        for j in range(i - 2, i + fr.width):
            e = diamond_entries(fr, i, j)
            b, a, d, c = e["top"], e["left"], e["right"], e["bottom"]
            xi, psi = e["upper_left"], e["upper_right"]
            phi, sigma = e["lower_left"], e["lower_right"]
            if a * d - b * c != one + sigma * xi:
                return False
            if b * phi - a * psi != xi:
                return False
            if b * sigma - d * xi != psi:
                return False
            if a * sigma - c * xi != phi:
                return False
            if d * phi - c * psi != sigma:
                return False
    return True


def check_glide(fr: SuperFrieze) -> bool:
    """Glide identities and the resulting period of m + 3.

    f(i,j) = f(j-m-1, i-2); integer odd entries glide to half-integer ones
    without sign, half-integer ones glide to integer ones with a sign flip;
    composing gives f-period n and odd antiperiod n.
    """
    m = fr.width
    n = fr.period
    checked = 0
    for (i, j) in fr.even:
        gi, gj = j - m - 1, i - 2
        if fr.has_diagonal(gi) and 0 <= gj - gi <= m - 1:
            if fr.f(i, j) != fr.f(gi, gj):
                return False
            checked += 1
        if fr.has_diagonal(i + n):
            if fr.f(i, j) != fr.f(i + n, j + n):
                return False
            checked += 1
    for (i2, j2) in fr.odd:
        # phi(i,j) = phi(j-m-3/2, i-3/2) for integer pairs and
        # phi(i+1/2, j+1/2) = -phi(j-m-1, i-1) for half pairs: under doubled
        # indices both read (i2, j2) -> (j2 - 2m - 3, i2 - 3), sign by flavor.
        gi2, gj2 = j2 - 2 * m - 3, i2 - 3
        sign = 1 if i2 % 2 == 0 else -1
        if (gi2, gj2) in fr.odd:
            if fr.phi2(i2, j2) != sign * fr.phi2(gi2, gj2):
                return False
            checked += 1
        if (i2 + 2 * n, j2 + 2 * n) in fr.odd:
            if fr.phi2(i2, j2) != -fr.phi2(i2 + 2 * n, j2 + 2 * n):
                return False
            checked += 1
    return checked > 0


def extract_schrodinger(fr: SuperFrieze) -> SchrodingerSystem:
    """Coefficients from the first rows (a_p = f(p,p), beta_p = -phi(p,p)),
    verified: every stored south-east diagonal solves the recursion with
    V_j = f(i,j) and W_j = -phi(i,j)."""
    m = fr.width
    n = fr.period
    if fr.diagonals < n + m + 2:
        raise CoefficientExtractionFailure("domain too small for one period")

    def a_of(p):
        return fr.f(p, p)

    def beta_of(p):
        return -fr.phi2(2 * p, 2 * p)

    for p in range(1, n + 1):
        if fr.phi2(2 * p, 2 * p) != fr.phi2(2 * p + 1, 2 * p + 1):
            raise CoefficientExtractionFailure("first-row odd entries do not pair up")
    for i in range(fr.diagonals - m - 1):
        for j in range(i, i + m + 2):
            v_now = fr.f(i, j)
            v_1 = fr.f(i, j - 1)
            v_2 = fr.f(i, j - 2)
            w_now = -fr.phi2(2 * i, 2 * j)
            w_1 = -fr.phi2(2 * i, 2 * j - 2)
            a_j, beta_j = a_of(j), beta_of(j)
            if v_now != -v_2 + a_j * v_1 - beta_j * w_1:
                raise CoefficientExtractionFailure(f"even recursion fails at ({i},{j})")
            if w_now != beta_j * v_1 + w_1:
                raise CoefficientExtractionFailure(f"odd recursion fails at ({i},{j})")
    return SchrodingerSystem(
        fr.ring,
        tuple(a_of(p) for p in range(1, n + 1)),
        tuple(beta_of(p) for p in range(1, n + 1)),
    )


def check_monodromy(fr: SuperFrieze) -> bool:
    sys = extract_schrodinger(fr)
    return monodromy(sys) == minus_one_monodromy(fr.ring)


def frieze_vs_seed(width: int) -> bool:
    """Mutating the path quiver at x_1..x_m from the symbolic initial seed
    must reproduce the frieze's next diagonal, and the next odd series must
    match its reconstruction from the initial odd entries."""
    from .quiver import aquiv
    from .seed import Seed, mutation_sequence

    fr = generate(width, diagonals=3)
    ring = fr.ring
    seed = mutation_sequence(Seed.initial(aquiv(width), ring), range(1, width + 1))
    for k in range(1, width + 1):
        if seed.value(k) != fr.f(1, k):
            return False
    xi1 = ring.xi(1)
    for k in range(1, width + 2):
        xi_next = ring.xi(k + 1) if k + 1 <= width + 1 else ring.zero
        if fr.phi2(3, 2 * k + 1) != xi_next - xi1 * fr.f(1, k):
            return False
    return True
