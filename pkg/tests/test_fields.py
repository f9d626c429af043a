import pytest

from bundlecalc import CapExceededError, DomainError, make_field
from bundlecalc.fields import default_modulus


class TestConstruction:
    def test_prime_field(self):
        f = make_field(2, 1)
        assert f.q == 2 and f.modulus == (0, 1)

    def test_f4_with_explicit_modulus(self):
        f = make_field(2, 2, [1, 1, 1])  # x^2 + x + 1
        assert f.q == 4

    def test_reducible_modulus_rejected(self):
        # x^2 + 1 = (x + 1)^2 over F_2
        with pytest.raises(DomainError, match="reducible"):
            make_field(2, 2, [1, 0, 1])

    def test_default_modulus_is_deterministic(self):
        assert default_modulus(2, 2) == (1, 1, 1)
        assert make_field(3, 2).modulus == make_field(3, 2).modulus

    def test_nonprime_characteristic(self):
        with pytest.raises(DomainError, match="prime"):
            make_field(6, 1)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            make_field(2, 7)  # 128 > 81
        make_field(3, 4)  # 81 is allowed

    def test_bad_modulus_degree(self):
        with pytest.raises(DomainError, match="monic"):
            make_field(2, 2, [1, 1])


class TestArithmetic:
    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (7, 1)])
    def test_field_axioms_spot_checks(self, p, e):
        f = make_field(p, e)
        one, zero = f.one, f.zero
        for a in f.elements():
            assert f.add(a, zero) == a
            assert f.mul(a, one) == a
            assert f.add(a, f.neg(a)) == zero
            if a != zero:
                assert f.mul(a, f.inv(a)) == one
        # commutativity and distributivity on all triples of a small field
        if f.q <= 9:
            for a in f.elements():
                for b in f.elements():
                    assert f.add(a, b) == f.add(b, a)
                    assert f.mul(a, b) == f.mul(b, a)
                    for c in f.elements():
                        lhs = f.mul(a, f.add(b, c))
                        rhs = f.add(f.mul(a, b), f.mul(a, c))
                        assert lhs == rhs

    def test_canonical_order_is_lexicographic(self):
        f = make_field(2, 2)
        assert [f.coeffs(i) for i in f.elements()] == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_index_round_trip(self):
        f = make_field(3, 2)
        for i in f.elements():
            assert f.index(f.coeffs(i)) == i

    def test_from_int(self):
        f = make_field(5, 1)
        assert f.coeffs(f.from_int(7)) == (2,)

    def test_division_by_zero(self):
        f = make_field(3, 1)
        with pytest.raises(DomainError, match="zero"):
            f.inv(f.zero)

    def test_describe(self):
        d = make_field(2, 2).describe()
        assert d == {"p": 2, "e": 2, "q": 4, "modulus": [1, 1, 1]}
