import pytest

from planacyclic import (brute_force_min_fvs, construct, digirth,
                         euler_characteristic, max_acyclic_set, min_fvs,
                         pad_to_order, pair_in_some_min_fvs, theorem_bound)
from planacyclic.errors import InvalidParameterError


class TestConstruct:
    def test_base_case_is_directed_triangle(self):
        cert = construct(3, 1)
        assert cert.digraph.arcs == ((0, 1), (1, 2), (2, 0))
        assert cert.claimed_min_fvs == 1 and cert.claimed_max_acyclic == 2
        assert (cert.x, cert.y) == (0, 1)

    def test_order_arithmetic(self):
        cert = construct(3, 3)
        assert cert.digraph.n == 7 == cert.claimed_order
        assert cert.claimed_min_fvs == 3 and cert.claimed_max_acyclic == 4

    def test_solver_confirms_claims_g5_f2(self):
        cert = construct(5, 2)
        assert cert.digraph.n == 9
        assert max_acyclic_set(cert.digraph).size == 7 == cert.claimed_max_acyclic

    def test_designated_pair_on_face(self):
        for g, f in [(3, 1), (3, 4), (4, 2), (6, 3)]:
            cert = construct(g, f)
            assert cert.x != cert.y
            assert cert.x in cert.face and cert.y in cert.face

    @pytest.mark.parametrize("g,f", [(g, f) for g in (3, 4, 5, 6) for f in (1, 2, 3)])
    def test_invariant_grid(self, g, f):
        cert = construct(g, f)
        d = cert.digraph
        assert d.n == f * (g - 1) + 1
        assert d.m == g + (f - 1) * (g + 2)
        assert digirth(d) == g
        assert euler_characteristic(cert.embedding) == 2
        assert min_fvs(d).size == f
        assert max_acyclic_set(d).size == f * (g - 2) + 1 == theorem_bound(d.n, g)
        assert not pair_in_some_min_fvs(d, cert.x, cert.y)

    def test_brute_force_agreement_small(self):
        # every construction that fits the brute-force subset search
        pairs = [(g, f) for g in range(3, 9) for f in range(1, 8)
                 if f * (g - 1) + 1 <= 16]
        for g, f in pairs:
            d = construct(g, f).digraph
            assert brute_force_min_fvs(d).size == f == min_fvs(d).size

    def test_level_bookkeeping(self):
        cert = construct(4, 3)
        levels = [cert.level_of(v) for v in range(cert.digraph.n)]
        assert levels == [1, 1, 1, 1, 2, 2, 2, 3, 3, 3]

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError):
            construct(2, 1)
        with pytest.raises(InvalidParameterError):
            construct(3, 0)


class TestTheoremBound:
    def test_values(self):
        assert theorem_bound(11, 3) == 6
        assert theorem_bound(3, 3) == 2
        assert theorem_bound(9, 5) == 7
        assert theorem_bound(10, 5) == 8  # ceil(31/4)

    def test_g3_matches_half_rounding(self):
        for n in range(1, 60):
            assert theorem_bound(n, 3) == -(-(n + 1) // 2)

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError):
            theorem_bound(0, 3)
        with pytest.raises(InvalidParameterError):
            theorem_bound(5, 2)


class TestPadToOrder:
    def test_pad_by_one_raises_mas_by_one(self):
        cert = construct(3, 2)
        padded = pad_to_order(cert, 6)
        assert padded.n == 6
        assert max_acyclic_set(padded).size == 4  # 6/2 + 1

    def test_pad_to_same_order_is_identity(self):
        cert = construct(3, 2)
        assert pad_to_order(cert, cert.claimed_order) == cert.digraph

    def test_pad_3_4_to_ten(self):
        padded = pad_to_order(construct(3, 4), 10)
        assert max_acyclic_set(padded).size == 6  # ceil(11/2)

    def test_digirth_preserved(self):
        padded = pad_to_order(construct(4, 2), 9)
        assert digirth(padded) == 4

    def test_below_order_rejected(self):
        with pytest.raises(InvalidParameterError):
            pad_to_order(construct(3, 2), 4)
