import itertools

import pytest

from bcinv.errors import (
    CardinalityGuard,
    InfiniteRing,
    NotAdditivelyClosed,
    NotRegular,
)
from bcinv.finite import (
    ElementSet,
    FiniteEnumeration,
    brute_force_bc,
    finite_ops,
    first_inner_inverse,
    inner_inverses,
    is_direct_sum,
    is_regular,
    left_annihilator,
    left_ideal,
    product_set,
    right_annihilator,
    right_ideal,
)
from bcinv.rings import parse_ring


def lits(es):
    return [e.literal() for e in es]


class TestIdeals:
    def test_right_ideal_examples(self, z6):
        assert lits(right_ideal(z6.element(2))) == ["0", "2", "4"]
        assert lits(right_ideal(z6.element(0))) == ["0"]
        assert lits(right_ideal(z6.element(5))) == ["0", "1", "2", "3", "4", "5"]

    def test_annihilator_examples(self, z6):
        assert lits(right_annihilator(z6.element(2))) == ["0", "3"]
        assert lits(right_annihilator(z6.element(0))) == ["0", "1", "2", "3", "4", "5"]
        assert lits(right_annihilator(z6.element(1))) == ["0"]
        assert z6.zero in right_annihilator(z6.element(4))

    def test_left_right_agree_in_commutative(self, z6):
        for e in z6.elements():
            assert lits(left_ideal(e)) == lits(right_ideal(e))
            assert lits(left_annihilator(e)) == lits(right_annihilator(e))

    def test_noncommutative_sides_differ(self, m2z2):
        e = m2z2.parse("[[1,1],[0,0]]")
        assert right_ideal(e).members != left_ideal(e).members

    def test_infinite_ring_errors(self, mq2):
        with pytest.raises(InfiniteRing):
            right_ideal(mq2.one)


class TestProductSet:
    def test_rcab(self, z6):
        out = product_set([], [z6.element(4), z6.element(2), z6.element(4)])
        assert lits(out) == ["0", "2", "4"]

    def test_zero_suffix(self, z6):
        assert lits(product_set([z6.element(3)], [z6.element(0)])) == ["0"]

    def test_ones_give_everything(self, z6):
        assert len(product_set([z6.one], [z6.one])) == 6

    def test_needs_ring_when_empty(self, z6):
        with pytest.raises(ValueError):
            product_set([], [])
        assert len(product_set([], [], ring=z6)) == 6


class TestDirectSum:
    def test_examples(self, z6):
        two = right_ideal(z6.element(2))
        three = right_ideal(z6.element(3))
        full = right_ideal(z6.element(1))
        zero = right_ideal(z6.element(0))
        assert is_direct_sum(two, three)
        assert not is_direct_sum(two, two)
        assert is_direct_sum(full, zero)

    def test_not_additively_closed(self, z6):
        bad = ElementSet.from_payloads(z6, [0, 2, 3])
        with pytest.raises(NotAdditivelyClosed):
            is_direct_sum(bad, right_ideal(z6.element(2)))


class TestInnerInverses:
    def test_examples(self, z6):
        assert lits(inner_inverses(z6.element(2))) == ["2", "5"]
        assert lits(inner_inverses(z6.element(1))) == ["1"]
        assert len(inner_inverses(z6.element(0))) == 6
        assert is_regular(z6.element(2))

    def test_not_regular_in_z4(self, z4):
        assert not is_regular(z4.element(2))
        assert inner_inverses(z4.element(2)) == []
        with pytest.raises(NotRegular):
            first_inner_inverse(z4.element(2))


class TestBruteForce:
    def test_examples(self, z6):
        assert brute_force_bc(z6.element(2), z6.element(4), z6.element(4)) == z6.element(2)
        assert brute_force_bc(z6.element(2), z6.element(3), z6.element(3)) is None

    def test_unit_case(self, z6, gf4):
        for ring in (z6, gf4):
            for a in ring.elements():
                inv = a.inverse()
                if inv is not None:
                    assert brute_force_bc(a, ring.one, ring.one) == inv

    def test_degenerate_triple(self, z6):
        for a in z6.elements():
            assert brute_force_bc(a, z6.zero, z6.zero) == z6.zero


class TestGuards:
    def test_cardinality_guard(self):
        ring = parse_ring("mat:zn:4:3")  # 4^9 = 262144 elements
        with pytest.raises(CardinalityGuard):
            FiniteEnumeration(ring)

    def test_enumeration_canonical(self, m2z2):
        enum = FiniteEnumeration(m2z2)
        assert enum.count == 16
        assert enum.element_at(0) == m2z2.zero
        for i in range(16):
            assert enum.index_of(enum.element_at(i)) == i


class TestSetInvariants:
    @pytest.mark.parametrize("spec", ["zn:2", "zn:4", "zn:6", "zn:8"])
    def test_annihilator_duality(self, spec):
        ring = parse_ring(spec)
        for a, b in itertools.product(ring.elements(), repeat=2):
            a_r = set(right_ideal(a).members)
            b_r = set(right_ideal(b).members)
            lann_a = set(left_annihilator(a).members)
            lann_b = set(left_annihilator(b).members)
            if a_r <= b_r:
                assert lann_b <= lann_a
            if is_regular(b) and lann_b <= lann_a:
                assert a_r <= b_r

    @pytest.mark.parametrize("spec", ["zn:6", "zn:8"])
    def test_regularity_transfer(self, spec):
        ring = parse_ring(spec)
        for a, b in itertools.product(ring.elements(), repeat=2):
            if right_ideal(a).members == right_ideal(b).members and is_regular(a):
                assert is_regular(b)

    def test_outer_inverse_intersections(self, z6):
        ops = finite_ops(z6)
        for a, y in itertools.product(range(6), repeat=2):
            if ops.mul3(y, a, y) != y:
                continue
            assert ops.rid(ops.mul(y, a)) == ops.rid(y)
            assert ops.lid(ops.mul(a, y)) == ops.lid(y)
            assert len(ops.rann(a) & ops.rid(y)) == 1
            assert len(ops.lann(a) & ops.lid(y)) == 1

    @pytest.mark.parametrize("spec", ["zn:6", "zn:8", "mat:zp:2:2"])
    def test_eq1_uniqueness(self, spec):
        ring = parse_ring(spec)
        ops = finite_ops(ring)
        for tpl in itertools.product(range(ops.n), repeat=3):
            assert len(ops.eq1_solutions(*tpl)) <= 1


class TestElementSet:
    def test_canonical_equality(self, z6):
        s1 = ElementSet.from_payloads(z6, [4, 0, 2, 2])
        s2 = ElementSet.from_payloads(z6, [0, 2, 4])
        assert s1 == s2
        assert s1.members == (0, 2, 4)
        assert z6.element(2) in s1
        assert z6.element(1) not in s1
        assert len(s1) == 3
