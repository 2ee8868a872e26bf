import pytest

from superquiver.errors import CoefficientExtractionFailure, InvalidWidth
from superquiver.frieze import (
    SuperFrieze,
    check_diamonds,
    check_glide,
    check_monodromy,
    extract_schrodinger,
    frieze_vs_seed,
    generate,
)
from superquiver.osp import minus_one_monodromy, monodromy
from superquiver.poly import SuperRing


def width1_ring():
    return SuperRing(1, 2, even_names=("x",), odd_names=("xi", "eta"))


def pentagramma_ring():
    return SuperRing(2, 3, even_names=("x", "y"), odd_names=("xi", "eta", "zeta"))


class TestWidthOne:
    def test_closed_forms(self):
        ring = width1_ring()
        fr = generate(1, ring=ring)
        x, xi, eta = ring.x(1), ring.xi(1), ring.xi(2)
        xinv = ring.term(1, (-1,))
        assert fr.f(1, 1) == 2 * xinv + xinv * eta * xi
        assert fr.phi2(3, 3) == eta - 2 * xinv * xi

    def test_classical_values(self):
        fr = generate(1, even_values=[1], odd_values=[0, 0])
        ring = fr.ring
        row = [fr.f(i, i) for i in range(8)]
        assert row == [ring.int(1 + (i % 2)) for i in range(8)]
        # classical frieze oracle: f(i+1,j+1) = (1 + f(i+1,j) f(i,j+1)) / f(i,j)
        vals = {}
        for i in range(6):
            vals[(i, i - 1)] = 1
            vals[(i, i + 1)] = 1
        vals[(0, 0)] = 1
        for i in range(5):
            num = 1 + vals[(i + 1, i)] * vals[(i, i + 1)]
            assert num % vals[(i, i)] == 0
            vals[(i + 1, i + 1)] = num // vals[(i, i)]
        for i in range(6):
            assert fr.f(i, i) == ring.int(vals[(i, i)])

    def test_glide_and_period(self):
        fr = generate(1)
        assert check_glide(fr)
        assert fr.period == 4


class TestPentagramma:
    def test_all_entries(self):
        ring = pentagramma_ring()
        fr = generate(2, ring=ring)
        x, y = ring.even_gens()
        xi, eta, zeta = ring.odd_gens()
        one = ring.one
        xinv = ring.term(1, (-1, 0))
        yinv = ring.term(1, (0, -1))
        assert fr.f(1, 1) == xinv * (one + y) + xinv * eta * xi
        assert fr.f(1, 2) == xinv * yinv * (one + x + y + eta * xi) + yinv * zeta * eta
        assert fr.f(2, 2) == yinv * (one + x + eta * xi) + xi * zeta + x * yinv * zeta * eta
        # odd entries on the two next diagonals (defining relations)
        assert fr.phi2(3, 3) == eta - fr.f(1, 1) * xi
        assert fr.phi2(3, 5) == zeta - fr.f(1, 2) * xi
        assert fr.phi2(3, 7) == -xi
        # other side of the initial diagonal
        assert fr.phi2(6, 6) == eta - y * zeta
        assert fr.phi2(4, 6) == xi - x * zeta
        assert -fr.phi2(8, 8) == -zeta
        # in-between entries
        assert fr.phi2(4, 4) == xi + zeta - (one + x) * yinv * eta
        assert fr.phi2(0, 2) == x * eta - y * xi
        assert fr.phi2(2, 4) == fr.f(1, 1) * zeta - fr.f(1, 2) * eta

    def test_glide_with_period_five(self):
        fr = generate(2)
        assert check_glide(fr)
        assert fr.period == 5


class TestDiamonds:
    @pytest.mark.parametrize("width", [1, 2, 3])
    def test_generated_friezes_pass(self, width):
        assert check_diamonds(generate(width))

    def test_perturbed_entry_fails(self):
        fr = generate(1)
        fr.even[(1, 1)] = fr.even[(1, 1)] + fr.ring.one
        assert not check_diamonds(fr)

    def test_classical_projection_is_determinant_rule(self):
        fr = generate(2, even_values=[1, 1], odd_values=[0, 0, 0])
        for i in range(1, fr.diagonals):
            for j in range(i - 1, i + fr.width):
                lhs = fr.f(i - 1, j) * fr.f(i, j + 1) - fr.f(i, j) * fr.f(i - 1, j + 1)
                assert lhs == fr.ring.one


class TestSchrodinger:
    def test_width1_extraction(self):
        fr = generate(1)
        sys = extract_schrodinger(fr)
        assert sys.period == 4
        assert sys.a[0] == fr.f(1, 1)

    def test_classical_reduction_three_term(self):
        fr = generate(1, even_values=[2], odd_values=[0, 0])
        sys = extract_schrodinger(fr)
        assert all(b.is_zero() for b in sys.beta)
        # V_j = a_j V_{j-1} - V_{j-2} on an interior diagonal
        ring = fr.ring
        for i in (1, 2):
            for j in range(i, i + 3):
                a_j = fr.f(j, j)
                assert fr.f(i, j) == a_j * fr.f(i, j - 1) - fr.f(i, j - 2)

    @pytest.mark.parametrize("width", [1, 2])
    def test_monodromy(self, width):
        assert check_monodromy(generate(width))

    def test_monodromy_value_is_minus_one_block(self):
        fr = generate(1)
        m = monodromy(extract_schrodinger(fr))
        assert m == minus_one_monodromy(fr.ring)

    def test_small_domain_rejected(self):
        fr = generate(1, diagonals=3)
        with pytest.raises(CoefficientExtractionFailure):
            extract_schrodinger(fr)


class TestFriezeVsSeed:
    @pytest.mark.parametrize("width", [1, 2, 3])
    def test_equivalence(self, width):
        assert frieze_vs_seed(width)


class TestHousekeeping:
    def test_invalid_width(self):
        with pytest.raises(InvalidWidth):
            generate(0)

    def test_json_roundtrip(self):
        fr = generate(2, diagonals=7)
        back = SuperFrieze.from_json_obj(fr.to_json_obj(), fr.ring)
        assert back.even == fr.even
        assert back.odd == fr.odd
        assert back.width == fr.width

    def test_render_text(self):
        fr = generate(1, even_values=[1], odd_values=[0, 0])
        text = fr.render_text()
        lines = text.splitlines()
        assert any("2" in line for line in lines)
        assert lines[0].strip().replace(" ", "") .count("0") >= 2


class TestWidthThreeMonodromy:
    def test_monodromy_still_minus_one_block(self):
        # beyond the acceptance scope, but cheap and a strong consistency check
        assert check_monodromy(generate(3))


class TestDiamondOspBridge:
    def test_generated_diamonds_are_group_elements(self):
        from superquiver.frieze import diamond_entries
        from superquiver.osp import Diamond, is_osp, osp_from_diamond

        fr = generate(2)
        for i in range(1, 4):
            for j in range(i - 2, i + fr.width):
                dia = Diamond(**diamond_entries(fr, i, j))
                assert is_osp(osp_from_diamond(dia))
