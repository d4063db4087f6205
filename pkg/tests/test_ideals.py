import json
from random import Random

import pytest

from quadring import (
    FieldMismatch,
    Ideal,
    ZeroIdeal,
    factor_ideal,
    ideal_from_json,
    make_field,
)
from quadring.sampling import random_element, random_ideal

from conftest import lattice_hnf_oracle


class TestFromGenerators:
    def test_two_generators(self):
        f = make_field(2)
        A = Ideal.from_generators(f, [f.element(7, 0), f.element(3, 1)])
        assert A.hnf() == (7, 3, 1)
        assert A.hnf() == lattice_hnf_oracle(2, [(7, 0), (3, 1)])

    def test_single_irrational_generator(self):
        f = make_field(2)
        A = Ideal.from_generators(f, [f.element(0, 1)])
        assert A.hnf() == (2, 0, 1)
        assert A.hnf() == lattice_hnf_oracle(2, [(0, 1)])

    def test_zero_generators(self):
        f = make_field(2)
        with pytest.raises(ZeroIdeal):
            Ideal.from_generators(f, [f.element(0, 0)])

    def test_canonical_regeneration(self, field):
        # regenerating an ideal from its own basis returns the same triple
        rng = Random(11)
        for _ in range(50):
            A = random_ideal(field, rng)
            assert Ideal.from_generators(field, list(A.basis())) == A


class TestPrincipal:
    def test_rational_generator(self):
        f = make_field(2)
        assert Ideal.principal(f.element(2, 0)).hnf() == (2, 0, 2)

    def test_gaussian_generator(self):
        # (2+i) has HNF (5, 2, 1): membership of 2+i forces b = 2
        f = make_field(-1)
        A = Ideal.principal(f.element(2, 1))
        assert A.hnf() == (5, 2, 1)
        assert A.hnf() == lattice_hnf_oracle(-1, [(2, 1)])
        assert A.contains(f.element(2, 1))
        assert A.norm() == 5

    def test_unit_generator(self):
        f = make_field(2)
        assert Ideal.principal(f.one()).hnf() == (1, 0, 1)

    def test_zero(self):
        with pytest.raises(ZeroIdeal):
            Ideal.principal(make_field(2).element(0, 0))

    def test_norm_is_element_norm(self, field):
        rng = Random(5)
        for _ in range(50):
            a = random_element(field, rng)
            assert Ideal.principal(a).norm() == abs(a.norm())


class TestMultiplication:
    def test_ramified_square(self):
        f = make_field(2)
        P = Ideal(f, 2, 0, 1)
        assert (P * P).hnf() == (2, 0, 2)

    def test_conjugate_pair_product(self):
        f = make_field(2)
        A = Ideal(f, 7, 3, 1)
        B = Ideal(f, 7, 4, 1)
        assert (A * B).hnf() == (7, 0, 7)

    def test_unit_ideal_is_identity(self, field):
        rng = Random(7)
        for _ in range(20):
            A = random_ideal(field, rng)
            assert A * Ideal.unit_ideal(field) == A

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            Ideal.unit_ideal(make_field(2)) * Ideal.unit_ideal(make_field(3))

    def test_norm_multiplicative(self, field):
        rng = Random(13)
        for _ in range(60):
            A, B = random_ideal(field, rng), random_ideal(field, rng)
            assert (A * B).norm() == A.norm() * B.norm()

    def test_principal_respects_products(self, field):
        rng = Random(17)
        for _ in range(60):
            a, b = random_element(field, rng), random_element(field, rng)
            assert Ideal.principal(a * b) == Ideal.principal(a) * Ideal.principal(b)


class TestNormAndBase:
    def test_norm_examples(self):
        f = make_field(2)
        assert Ideal(f, 7, 3, 1).norm() == 7
        assert Ideal.principal(f.element(3, 0)).norm() == 9
        assert Ideal.unit_ideal(f).norm() == 1

    def test_intersect_base_examples(self):
        f = make_field(2)
        assert Ideal(f, 7, 3, 1).intersect_base() == 7
        assert Ideal(f, 2, 0, 1).intersect_base() == 2
        assert Ideal.unit_ideal(f).intersect_base() == 1

    def test_base_divides_norm_divides_base_squared(self, field):
        rng = Random(19)
        for _ in range(60):
            A = random_ideal(field, rng)
            a, n = A.intersect_base(), A.norm()
            assert n % a == 0
            assert (a * a) % n == 0


class TestDivides:
    def test_ramified_divides_two(self):
        f = make_field(2)
        assert Ideal(f, 2, 0, 1).divides(Ideal.principal(f.element(2, 0)))

    def test_coprime_norms(self):
        f = make_field(2)
        three = Ideal.principal(f.element(3, 0))
        assert not three.divides(Ideal.principal(f.element(3, 1)))

    def test_reflexive(self, field):
        rng = Random(23)
        for _ in range(20):
            A = random_ideal(field, rng)
            assert A.divides(A)

    def test_divides_iff_cofactor_exists(self, field):
        # cross-check containment against factorization exponents
        rng = Random(29)
        for _ in range(25):
            A = random_ideal(field, rng, max_norm=2000)
            B = random_ideal(field, rng, max_norm=2000)
            fa = {(P.ideal): k for P, k in factor_ideal(A).factors}
            fb = {(P.ideal): k for P, k in factor_ideal(B).factors}
            cofactor_exists = all(fb.get(P, 0) >= k for P, k in fa.items())
            assert A.divides(B) == cofactor_exists


class TestConjugate:
    def test_example(self):
        f = make_field(2)
        assert Ideal(f, 7, 3, 1).conjugate().hnf() == (7, 4, 1)

    def test_rational_ideal_fixed(self):
        f = make_field(2)
        A = Ideal.principal(f.element(3, 0))
        assert A.conjugate() == A

    def test_involution_and_norm(self, field):
        rng = Random(31)
        for _ in range(40):
            A = random_ideal(field, rng)
            assert A.conjugate().conjugate() == A
            assert A.conjugate().norm() == A.norm()


class TestJson:
    def test_round_trip(self, field):
        rng = Random(37)
        for _ in range(25):
            A = random_ideal(field, rng)
            assert ideal_from_json(A.to_json()) == A

    def test_format(self):
        f = make_field(2)
        assert json.loads(Ideal(f, 7, 3, 1).to_json()) == {"d": 2, "hnf": [7, 3, 1]}

    @pytest.mark.parametrize(
        "payload",
        [
            '{"d": 2, "hnf": [7, 5, 1]}',    # not w-closed: 7 does not divide N(5+w)
            '{"d": 2, "hnf": [7, -1, 1]}',   # b out of range
            '{"d": 2, "hnf": [7, 3, 2]}',    # c does not divide a
            '{"d": 2, "hnf": [6, 2, 2]}',    # 12 does not divide N(2+2w) = -4
            '{"d": 2, "hnf": [3, 1, 1]}',    # 3 does not divide N(1+w) = -1
            '{"d": 2, "hnf": [0, 0, 1]}',    # a must be positive
            '{"d": 2, "hnf": [2, 0]}',       # wrong arity
            '{"d": 12, "hnf": [2, 0, 1]}',   # d not squarefree
            '{"hnf": [2, 0, 1]}',            # missing d
        ],
    )
    def test_rejects_non_canonical(self, payload):
        with pytest.raises(Exception):
            ideal_from_json(payload)

    def test_accepts_canonical_non_maximal(self):
        # 2 * (2, w) has the perfectly canonical triple (4, 0, 2)
        assert ideal_from_json('{"d": 2, "hnf": [4, 0, 2]}').hnf() == (4, 0, 2)
