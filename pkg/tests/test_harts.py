import pytest

from frobcirc.circulant import iso_multiplier
from frobcirc.classifier import FrobeniusClass, verify_first_kind_frobenius
from frobcirc.errors import SizeTooSmall
from frobcirc.harts import (
    harts_graph,
    harts_iso_tl,
    tl_diameter_check,
    tl_graph,
    tl_vertex_count,
)
from frobcirc.numtheory import multiplicative_order


class TestTLGraph:
    def test_k2(self):
        g = tl_graph(2)
        assert g.n == 19
        assert g.conn == (1, 7, 8, 11, 12, 18)

    def test_k3(self):
        g = tl_graph(3)
        assert g.n == 37
        assert g.conn == (1, 10, 11, 26, 27, 36)

    def test_rejects_k1(self):
        with pytest.raises(SizeTooSmall):
            tl_graph(1)

    def test_root_congruence(self):
        # 3k+2 solves x^2 - x + 1 = 0 mod n_k
        for k in range(2, 51):
            n = tl_vertex_count(k)
            x = 3 * k + 2
            assert (x * x - x + 1) % n == 0

    @pytest.mark.parametrize("k", range(2, 21))
    def test_degree6_frobenius(self, k):
        g = tl_graph(k)
        h = 3 * k + 2
        assert multiplicative_order(h, g.n) == 6
        c = FrobeniusClass(g.n, 6, h, g.conn, (1,))
        assert verify_first_kind_frobenius(c).ok


class TestHartsGraph:
    def test_k3(self):
        g = harts_graph(3)
        assert g.n == 19
        assert g.conn == (2, 3, 5, 14, 16, 17)

    def test_k2_complete(self):
        g = harts_graph(2)
        assert g.n == 7
        assert g.conn == (1, 2, 3, 4, 5, 6)

    def test_vertex_count(self):
        for k in range(2, 21):
            assert harts_graph(k).n == 3 * k * k - 3 * k + 1

    def test_rejects_k1(self):
        with pytest.raises(SizeTooSmall):
            harts_graph(1)


class TestIsomorphism:
    def test_k3_multiplier(self):
        assert harts_iso_tl(3) == 9
        mapped = sorted(9 * s % 19 for s in harts_graph(3).conn)
        assert mapped == list(tl_graph(2).conn)

    def test_k4(self):
        assert harts_iso_tl(4) == 12

    def test_k2(self):
        assert harts_iso_tl(2) == 6

    @pytest.mark.parametrize("k", range(3, 21))
    def test_cross_checked_by_exhaustive_scan(self, k):
        sigma = iso_multiplier(harts_graph(k), tl_graph(k - 1))
        assert sigma is not None


class TestDiameters:
    @pytest.mark.parametrize("k", [2, 3, 5, 10])
    def test_tl_diameter(self, k):
        assert tl_diameter_check(k)

    @pytest.mark.parametrize("k", [2, 3, 5, 10])
    def test_harts_diameter(self, k):
        assert harts_graph(k).diameter() == k - 1
