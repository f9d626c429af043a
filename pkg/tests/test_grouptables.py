import pytest

from bundlecalc import (
    CapExceededError,
    DomainError,
    FiniteGroupTable,
    FqMatrix,
    JordanMode,
    group_from_generators,
    jordan_constant,
    jordan_verify,
    make_field,
    sl2_generate,
    table_from_matrix_group,
)


def cyclic_table(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroupTable(n, tuple(tuple(r) for r in table), tuple(str(i) for i in range(n)))


class TestFiniteGroupTable:
    def test_cyclic(self):
        t = cyclic_table(5)
        assert t.identity == 0 and t.is_abelian() and t.exponent() == 5

    def test_sl2_f2_is_symmetric_group_like(self):
        t = table_from_matrix_group(sl2_generate(make_field(2, 1)))
        assert t.order == 6
        assert not t.is_abelian()
        assert t.exponent() == 6

    def test_trivial_table(self):
        t = FiniteGroupTable(1, ((0,),), ("e",))
        assert t.identity == 0 and t.is_abelian()

    def test_one_transvection_closure_is_cyclic(self):
        field = make_field(3, 1)
        u = FqMatrix.from_ints(field, [[1, 1], [0, 1]])
        t = table_from_matrix_group(group_from_generators([u]))
        assert t.order == 3 and t.is_abelian()

    def test_broken_associativity_rejected(self):
        table = ((0, 1, 2), (1, 2, 0), (2, 1, 0))
        with pytest.raises(DomainError):
            FiniteGroupTable(3, table, ("a", "b", "c"))

    def test_missing_identity_rejected(self):
        table = ((1, 1), (1, 1))
        with pytest.raises(DomainError, match="identity"):
            FiniteGroupTable(2, table, ("a", "b"))

    def test_identity_may_sit_anywhere(self):
        # C2 with the identity labeled 1 instead of 0
        t = FiniteGroupTable(2, ((1, 0), (0, 1)), ("g", "e"))
        assert t.identity == 1

    def test_conjugacy_classes_of_sl2_f2(self):
        t = table_from_matrix_group(sl2_generate(make_field(2, 1)))
        sizes = sorted(len(c) for c in t.conjugacy_classes())
        assert sizes == [1, 2, 3]


class TestJordanVerify:
    def test_s3_has_index_two(self):
        field = make_field(7, 1)
        s3 = group_from_generators([
            FqMatrix.from_ints(field, [[0, 1], [1, 0]]),
            FqMatrix.from_ints(field, [[0, -1], [1, -1]]),
        ])
        cert = jordan_verify(table_from_matrix_group(s3), 2, 384064)
        assert cert.order == 3 and cert.index == 2 and cert.holds

    def test_abelian_group_takes_itself(self):
        cert = jordan_verify(cyclic_table(12), 2, 1)
        assert cert.order == 12 and cert.index == 1 and cert.holds

    def test_sl2_f3_center_is_the_best(self):
        table = table_from_matrix_group(sl2_generate(make_field(3, 1)))
        cert = jordan_verify(table, 2, jordan_constant(2, JordanMode.schur()))
        assert cert.index == 12 and cert.order == 2 and cert.holds

    def test_bound_failure_is_reported_not_raised(self):
        field = make_field(7, 1)
        s3 = group_from_generators([
            FqMatrix.from_ints(field, [[0, 1], [1, 0]]),
            FqMatrix.from_ints(field, [[0, -1], [1, -1]]),
        ])
        cert = jordan_verify(table_from_matrix_group(s3), 2, 1)
        assert cert.index == 2 and not cert.holds

    def test_order_cap(self):
        with pytest.raises(CapExceededError):
            jordan_verify(cyclic_table(361), 2, 10)

    def test_certificate_json(self):
        cert = jordan_verify(cyclic_table(4), 1, 12)
        assert cert.to_json() == {"N_order": "4", "index": "1", "bound": "12", "holds": True}
