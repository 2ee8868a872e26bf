import pytest

from superquiver.errors import ParityError, RelationViolation
from superquiver.osp import (
    Diamond,
    OspMatrix,
    SchrodingerSystem,
    diamond_from_osp,
    diamond_rule_holds,
    identity,
    inverse_osp,
    is_osp,
    minus_one_monodromy,
    monodromy,
    mul_osp,
    osp_from_diamond,
    schrodinger_matrix,
)
from superquiver.poly import SuperRing


def coeff_ring(pairs=2):
    # even a_1..a_p and odd b_1..b_p coefficient generators
    return SuperRing(pairs, pairs, even_names=[f"a{i}" for i in range(1, pairs + 1)])


def generic_element(ring):
    m1 = schrodinger_matrix(ring, ring.x(1), ring.xi(1))
    m2 = schrodinger_matrix(ring, ring.x(2), ring.xi(2))
    return mul_osp(m1, m2)


class TestRelations:
    def test_identity(self):
        assert is_osp(identity(SuperRing(1, 1)))

    def test_schrodinger_matrix_in_group(self):
        r = coeff_ring(1)
        assert is_osp(schrodinger_matrix(r, r.x(1), r.xi(1)))

    def test_e_relation_violated(self):
        r = SuperRing(0, 2)
        alpha, beta = r.xi(1), r.xi(2)
        m = OspMatrix(
            r,
            [
                [r.one, r.zero, r.one * beta],
                [r.zero, r.one + beta * alpha, -alpha],
                [alpha, beta, r.one],
            ],
        )
        assert not is_osp(m)

    def test_parity_pattern_enforced(self):
        r = SuperRing(1, 2)
        with pytest.raises(ParityError):
            OspMatrix(r, [[r.xi(1), r.zero, r.zero], [r.zero, r.one, r.zero], [r.zero, r.zero, r.one]])


class TestProductAndInverse:
    def test_times_identity(self):
        r = coeff_ring(2)
        m = generic_element(r)
        assert mul_osp(m, identity(r)) == m
        assert mul_osp(identity(r), m) == m

    def test_closure(self):
        r = coeff_ring(2)
        m = generic_element(r)
        assert is_osp(m)

    def test_inverse_roundtrip(self):
        r = coeff_ring(2)
        m = generic_element(r)
        inv = inverse_osp(m)
        assert is_osp(inv)
        assert mul_osp(m, inv) == identity(r)
        assert mul_osp(inv, m) == identity(r)

    def test_step_action(self):
        # the middle row realizes V_i = -V_{i-2} + a V_{i-1} - beta W_{i-1}
        r = SuperRing(4, 2, even_names=("a", "v0", "v1", "w"))
        a = r.x(1)
        beta = r.xi(1)
        m = schrodinger_matrix(r, a, beta)
        v0, v1, w = r.x(2), r.x(3), r.x(4) * r.xi(2)
        vec = (v0, v1, w)
        out = [sum((m.rows[i][t] * vec[t] for t in range(3)), r.zero) for i in range(3)]
        assert out[0] == v1
        assert out[1] == -v0 + a * v1 - beta * w
        assert out[2] == beta * v1 + w


class TestSchrodingerSystem:
    def test_coefficient_wrapping(self):
        r = coeff_ring(2)
        sys = SchrodingerSystem(r, (r.x(1), r.x(2)), (r.xi(1), r.xi(2)))
        assert sys.coefficient(1) == (r.x(1), r.xi(1))
        assert sys.coefficient(3) == (r.x(1), -r.xi(1))
        assert sys.coefficient(5) == (r.x(1), r.xi(1))

    def test_monodromy_trivial_period(self):
        # a = 0, beta = 0: A = [[0,1,0],[-1,0,0],[0,0,1]]; A^4 = Id, A^2 = -Id block
        r = SuperRing(0, 0)
        sys = SchrodingerSystem(r, (r.zero, r.zero), (r.zero, r.zero))
        m = monodromy(sys)
        assert m == minus_one_monodromy(r)

    def test_classical_width_one(self):
        # classical 1,2,1,2 frieze row: coefficients 2,1,... hmm use x=1 data:
        # a-row of the width-1 integer frieze is (1,2,1,2) -> monodromy -Id
        r = SuperRing(0, 0)
        sys = SchrodingerSystem(
            r, (r.int(2), r.int(1), r.int(2), r.int(1)), (r.zero,) * 4
        )
        assert monodromy(sys) == minus_one_monodromy(r)


class TestDiamond:
    def test_identity_diamond(self):
        r = SuperRing(1, 1)
        dia = diamond_from_osp(identity(r))
        assert dia.top == -r.one
        assert dia.left == r.zero
        assert dia.bottom == r.one
        assert diamond_rule_holds(dia)

    def test_roundtrip(self):
        r = coeff_ring(2)
        m = generic_element(r)
        assert osp_from_diamond(diamond_from_osp(m)) == m

    def test_rule_equivalence_and_sigma_xi(self):
        r = coeff_ring(2)
        dia = diamond_from_osp(generic_element(r))
        assert diamond_rule_holds(dia)
        assert dia.upper_left * dia.lower_right == dia.lower_left * dia.upper_right

    def test_violation_raises(self):
        r = SuperRing(1, 1)
        dia = diamond_from_osp(identity(r))
        broken = Diamond(
            top=dia.top + r.one,
            left=dia.left,
            right=dia.right,
            bottom=dia.bottom,
            upper_left=dia.upper_left,
            upper_right=dia.upper_right,
            lower_left=dia.lower_left,
            lower_right=dia.lower_right,
        )
        with pytest.raises(RelationViolation):
            osp_from_diamond(broken)
