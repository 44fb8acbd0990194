import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcinv.errors import InfiniteRing, MixedRings, NoInvolution, TableValidationError
from bcinv.rings import (
    Element,
    Involution,
    MatrixRing,
    ModularRing,
    TableRing,
    parse_ring,
)

from conftest import GF4_ADD, GF4_MUL, GF4_STAR


def small_rationals():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def q_matrices(k):
    return st.lists(
        st.lists(small_rationals(), min_size=k, max_size=k), min_size=k, max_size=k
    )


class TestArithmetic:
    def test_modular_mul(self, z6):
        assert (z6.element(2) * z6.element(4)).literal() == "2"

    def test_matrix_star_is_transpose(self, mq2):
        m = mq2.parse("[[1,2],[3,4]]")
        assert m.star().literal() == "[[1,3],[2,4]]"

    def test_modular_star_is_identity(self, z6):
        assert z6.element(5).star() == z6.element(5)

    def test_is_unit(self, z6, mq2):
        assert z6.element(5).inverse() == z6.element(5)
        assert z6.element(2).inverse() is None
        inv = mq2.parse("[[1,1],[0,1]]").inverse()
        assert inv.literal() == "[[1,-1],[0,1]]"

    def test_pow(self, z6):
        assert z6.element(2) ** 3 == z6.element(2)
        assert z6.element(2) ** 0 == z6.one

    def test_mixed_rings_rejected(self, z6, z4):
        with pytest.raises(MixedRings):
            z6.element(1) + z4.element(1)

    def test_no_involution(self):
        ring = ModularRing(6, involution=Involution.NONE)
        with pytest.raises(NoInvolution):
            ring.element(2).star()

    def test_zero_one(self, z6):
        assert z6.zero.is_zero() and z6.one.is_one()
        assert not z6.element(3).is_one()


def _axioms_hold(ring):
    elems = list(ring.elements())
    zero, one = ring.zero, ring.one
    for x in elems:
        assert x + zero == x and x * one == x and one * x == x
        assert x + (-x) == zero
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
    for x, y, z in itertools.product(elems, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z


def _involution_holds(ring):
    elems = list(ring.elements())
    for x in elems:
        assert x.star().star() == x
    for x, y in itertools.product(elems, repeat=2):
        assert (x * y).star() == y.star() * x.star()
        assert (x + y).star() == x.star() + y.star()


class TestFiniteAxioms:
    def test_zn6(self, z6):
        _axioms_hold(z6)
        _involution_holds(z6)

    def test_matrix_ring_z2(self, m2z2):
        _axioms_hold(m2z2)
        _involution_holds(m2z2)

    def test_gf4_table(self, gf4):
        _axioms_hold(gf4)
        _involution_holds(gf4)

    def test_composite_matrix_ring(self):
        ring = parse_ring("mat:zn:4:1")
        _axioms_hold(ring)


class TestMatrixInvolutionProperties:
    @settings(max_examples=40, deadline=None)
    @given(q_matrices(3), q_matrices(3))
    def test_involution_axioms(self, m1, m2):
        ring = parse_ring("mat:q:3")
        a, b = ring.element(m1), ring.element(m2)
        assert a.star().star() == a
        assert (a * b).star() == b.star() * a.star()
        assert (a + b).star() == a.star() + b.star()


class TestLiterals:
    @pytest.mark.parametrize("spec", ["zn:6", "zn:12", "mat:zp:2:2", "mat:zn:4:1"])
    def test_round_trip_all_elements(self, spec):
        ring = parse_ring(spec)
        for e in ring.elements():
            assert ring.parse(e.literal()) == e

    @settings(max_examples=40, deadline=None)
    @given(q_matrices(2))
    def test_round_trip_rational_matrices(self, m):
        ring = parse_ring("mat:q:2")
        e = ring.element(m)
        assert ring.parse(e.literal()) == e

    def test_out_of_range_rejected(self, z6, m2z2):
        with pytest.raises(ValueError):
            z6.parse("6")
        with pytest.raises(ValueError):
            z6.parse("-1")
        with pytest.raises(ValueError):
            m2z2.parse("[[2,0],[0,0]]")

    def test_wrong_shape_rejected(self, mq2):
        with pytest.raises(ValueError):
            mq2.parse("[[1,2,3],[4,5,6]]")
        with pytest.raises(ValueError):
            mq2.parse("[[1,2],[3,4]")
        with pytest.raises(ValueError):
            mq2.parse("[[1,2],[3,4]]x")

    def test_rational_entries(self, mq2):
        m = mq2.parse("[[1/2,-3],[0,7/3]]")
        assert m.literal() == "[[1/2,-3],[0,7/3]]"


class TestRingSpecs:
    def test_parse_specs(self):
        assert parse_ring("zn:6").spec == "zn:6"
        assert parse_ring("mat:q:2").spec == "mat:q:2"
        assert parse_ring("mat:zp:5:2").spec == "mat:zp:5:2"
        assert parse_ring("mat:zn:4:2").spec == "mat:zn:4:2"

    @pytest.mark.parametrize(
        "bad",
        ["zn:1", "zn:x", "mat:q", "mat:zp:4:2", "mat:zp:2", "zq:3", "", "mat:r:2"],
    )
    def test_bad_specs(self, bad):
        with pytest.raises(ValueError):
            parse_ring(bad)

    def test_infinite_ring_enumeration(self, mq2):
        with pytest.raises(InfiniteRing):
            list(mq2.elements())

    def test_structural_equality(self):
        assert parse_ring("zn:6") == parse_ring("zn:6")
        assert parse_ring("zn:6") != parse_ring("zn:7")


class TestTableValidation:
    def test_gf4_loads(self, gf4):
        assert gf4.order == 4
        assert (gf4.element(2) * gf4.element(2)).literal() == "3"
        assert gf4.element(2).star() == gf4.element(3)

    def test_non_associative_mul_rejected(self):
        mul = [row[:] for row in GF4_MUL]
        mul[2][3] = 2  # break x*(x+1)
        with pytest.raises(TableValidationError):
            TableRing(GF4_ADD, mul, 0, 1)

    def test_broken_distributivity_rejected(self):
        # multiplication of Z4 with addition of the Klein group
        z4_mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 0, 2], [0, 3, 2, 1]]
        with pytest.raises(TableValidationError):
            TableRing(GF4_ADD, z4_mul, 0, 1)

    def test_bad_star_rejected(self):
        with pytest.raises(TableValidationError):
            TableRing(GF4_ADD, GF4_MUL, 0, 1, [0, 1, 2, 2])

    def test_zero_equals_one_rejected(self):
        with pytest.raises(TableValidationError):
            TableRing([[0]], [[0]], 0, 0)

    def test_from_json(self, tmp_path):
        import json

        path = tmp_path / "gf4.json"
        path.write_text(
            json.dumps(
                {
                    "order": 4,
                    "add": GF4_ADD,
                    "mul": GF4_MUL,
                    "zero": 0,
                    "one": 1,
                    "star": GF4_STAR,
                }
            )
        )
        ring = TableRing.from_json(str(path))
        assert ring.order == 4
        assert ring.involution is Involution.TABLE
        loaded = parse_ring(f"table:{path}")
        assert loaded.order == 4

    def test_no_star_means_no_involution(self):
        ring = TableRing(GF4_ADD, GF4_MUL, 0, 1)
        assert ring.involution is Involution.NONE
        with pytest.raises(NoInvolution):
            ring.element(2).star()
