"""OSp(1|2) supermatrices over the super Laurent ring, the supersymmetric
discrete Schrodinger step matrices, monodromy, and the diamond dictionary.

Matrix layout (rows x columns):

    [ a     b     gamma ]
    [ c     d     delta ]
    [ alpha beta  e     ]

with a,b,c,d,e even and alpha,beta,gamma,delta odd, subject to
ad = 1 + bc - alpha beta,  e = 1 + alpha beta,
gamma = a beta - b alpha,  delta = c beta - d alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInGroup, ParityError, RelationViolation
from .poly import SuperPoly, SuperRing

_EVEN_SLOTS = {(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)}


class OspMatrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring: SuperRing, rows, check_parity=True):
        self.ring = ring
        self.rows = tuple(tuple(self._lift(v) for v in row) for row in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ParityError("matrix must be 3x3")
        if check_parity:
            self._check_parity()

    def _lift(self, v):
        if isinstance(v, SuperPoly):
            return v
        return self.ring.int(v)

    def _check_parity(self):
        for i in range(3):
            for j in range(3):
                par = self.rows[i][j].parity()
                if par is None:
                    if self.rows[i][j].is_zero():
                        continue
                    raise ParityError(f"entry ({i},{j}) has mixed parity")
                want = 0 if (i, j) in _EVEN_SLOTS else 1
                if par != want:
                    raise ParityError(f"entry ({i},{j}) has parity {par}, want {want}")

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        if not isinstance(other, OspMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(v.render() for v in row) for row in self.rows)
        return f"<OspMatrix [{body}]>"

    def to_json_obj(self):
        return {
            "entries": [[v.to_json_obj() for v in row] for row in self.rows],
            "parity": [[0 if (i, j) in _EVEN_SLOTS else 1 for j in range(3)] for i in range(3)],
        }


def identity(ring: SuperRing) -> OspMatrix:
    one, zero = ring.one, ring.zero
    return OspMatrix(ring, [[one, zero, zero], [zero, one, zero], [zero, zero, one]])


def is_osp(m: OspMatrix) -> bool:
    a, b, gamma = m.rows[0]
    c, d, delta = m.rows[1]
    alpha, beta, e = m.rows[2]
    one = m.ring.one
    return (
        a * d == one + b * c - alpha * beta
        and e == one + alpha * beta
        and gamma == a * beta - b * alpha
        and delta == c * beta - d * alpha
    )


def mul_osp(m: OspMatrix, n: OspMatrix, check=True) -> OspMatrix:
    if check and not (is_osp(m) and is_osp(n)):
        raise NotInGroup("operands must satisfy the group relations")
    rows = [
        [
            sum((m.rows[i][t] * n.rows[t][j] for t in range(3)), m.ring.zero)
            for j in range(3)
        ]
        for i in range(3)
    ]
    return OspMatrix(m.ring, rows)


def inverse_osp(m: OspMatrix) -> OspMatrix:
    """Inverse from the orthosymplectic structure: J^-1 M^st J."""
    a, b, gamma = m.rows[0]
    c, d, delta = m.rows[1]
    alpha, beta, e = m.rows[2]
    return OspMatrix(
        m.ring,
        [
            [d, -b, -beta],
            [-c, a, alpha],
            [delta, -gamma, e],
        ],
    )


def schrodinger_matrix(ring: SuperRing, a, beta) -> OspMatrix:
    """Step matrix of the discrete Schrodinger recursion:
    (V_{i-1}, V_i, W_i) = A (V_{i-2}, V_{i-1}, W_{i-1})."""
    a = a if isinstance(a, SuperPoly) else ring.int(a)
    beta = beta if isinstance(beta, SuperPoly) else ring.int(beta)
    if a.parity() == 1 or (beta.parity() == 0 and not beta.is_zero()):
        raise ParityError("coefficient parities must be (even, odd)")
    one, zero = ring.one, ring.zero
    return OspMatrix(ring, [[zero, one, zero], [-one, a, -beta], [zero, beta, one]])


@dataclass(frozen=True)
class SchrodingerSystem:
    """Period-n coefficient data: a periodic, beta antiperiodic."""

    ring: SuperRing
    a: tuple
    beta: tuple

    @property
    def period(self):
        return len(self.a)

    def coefficient(self, i):
        """(a_i, beta_i) for any integer step index i >= 1, with wrapping."""
        n = self.period
        q, r = divmod(i - 1, n)
        a = self.a[r]
        beta = self.beta[r] if q % 2 == 0 else -self.beta[r]
        return a, beta

    def step_matrix(self, i):
        a, beta = self.coefficient(i)
        return schrodinger_matrix(self.ring, a, beta)


def monodromy(sys: SchrodingerSystem) -> OspMatrix:
    """Ordered product A_n ... A_1 over one period."""
    total = identity(sys.ring)
    for i in range(1, sys.period + 1):
        total = mul_osp(sys.step_matrix(i), total, check=False)
    return total


def minus_one_monodromy(ring: SuperRing) -> OspMatrix:
    one, zero = ring.one, ring.zero
    return OspMatrix(ring, [[-one, zero, zero], [zero, -one, zero], [zero, zero, one]])


@dataclass(frozen=True)
class Diamond:
    """Local frieze configuration: even entries top/left/right/bottom and the
    four odd entries between them."""

    top: SuperPoly
    left: SuperPoly
    right: SuperPoly
    bottom: SuperPoly
    upper_left: SuperPoly
    upper_right: SuperPoly
    lower_left: SuperPoly
    lower_right: SuperPoly


def diamond_rule_holds(dia: Diamond) -> bool:
    """The three defining relations plus the two derived ones."""
    one = dia.top.ring.one
    b, a, d, c = dia.top, dia.left, dia.right, dia.bottom
    xi, psi, phi, sigma = dia.upper_left, dia.upper_right, dia.lower_left, dia.lower_right
    return (
        a * d - b * c == one + sigma * xi
        and b * phi - a * psi == xi
        and b * sigma - d * xi == psi
        and a * sigma - c * xi == phi
        and d * phi - c * psi == sigma
    )


def diamond_from_osp(m: OspMatrix) -> Diamond:
    a, b, gamma = m.rows[0]
    c, d, delta = m.rows[1]
    alpha, beta, _ = m.rows[2]
    return Diamond(
        top=-a,
        left=b,
        right=-c,
        bottom=d,
        upper_left=gamma,
        upper_right=alpha,
        lower_left=-beta,
        lower_right=delta,
    )


def osp_from_diamond(dia: Diamond) -> OspMatrix:
    if not diamond_rule_holds(dia):
        raise RelationViolation("diamond does not satisfy the frieze rule")
    ring = dia.top.ring
    a = -dia.top
    b = dia.left
    c = -dia.right
    d = dia.bottom
    gamma = dia.upper_left
    alpha = dia.upper_right
    beta = -dia.lower_left
    delta = dia.lower_right
    e = ring.one + alpha * beta
    m = OspMatrix(ring, [[a, b, gamma], [c, d, delta], [alpha, beta, e]])
    if not is_osp(m):
        raise RelationViolation("diamond entries violate the group relations")
    return m
