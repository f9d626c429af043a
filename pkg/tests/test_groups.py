import pytest

from bundlecalc import (
    CapExceededError,
    DomainError,
    FqMatrix,
    FreeGroupRep,
    associated_rep,
    burnside_irreducible,
    group_from_generators,
    holonomy,
    make_field,
    sl2_generate,
)
from bundlecalc.groups import apply_matrix_functor, sl2_elementary_generators
from bundlecalc.matrices import dual_matrix, kronecker, sym_matrix, wedge_matrix
from bundlecalc.oracles import reducible_by_common_eigenvector, sl2_by_filter


class TestSl2Generation:
    @pytest.mark.parametrize(
        "p,e,order", [(2, 1, 6), (3, 1, 24), (2, 2, 60), (5, 1, 120)]
    )
    def test_orders(self, p, e, order):
        field = make_field(p, e)
        group = sl2_generate(field)
        assert group.order == order == field.q ** 3 - field.q

    def test_prime_field_uses_the_two_classical_generators(self):
        field = make_field(5, 1)
        gens = sl2_elementary_generators(field)
        assert len(gens) == 2
        assert gens[0] == FqMatrix.from_ints(field, [[1, 1], [0, 1]])
        assert gens[1] == FqMatrix.from_ints(field, [[1, 0], [1, 1]])

    def test_every_element_is_unimodular(self):
        field = make_field(3, 1)
        for m in sl2_generate(field).elements:
            assert m.det() == field.one

    def test_matches_filter_enumeration(self):
        field = make_field(2, 2)
        assert tuple(sl2_generate(field).elements) == sl2_by_filter(field)

    def test_enumeration_is_reproducible(self):
        field = make_field(3, 1)
        assert sl2_generate(field).elements == sl2_generate(field).elements

    def test_closure_cap(self):
        field = make_field(7, 1)
        with pytest.raises(CapExceededError):
            sl2_generate(field, cap=100)


class TestClosure:
    def test_singular_generator_rejected(self):
        field = make_field(2, 1)
        singular = FqMatrix.from_ints(field, [[1, 0], [0, 0]])
        with pytest.raises(DomainError, match="invertible"):
            group_from_generators([singular])

    def test_cyclic_closure(self):
        field = make_field(3, 1)
        u = FqMatrix.from_ints(field, [[1, 1], [0, 1]])
        assert group_from_generators([u]).order == 3

    def test_closure_is_a_subgroup(self):
        field = make_field(3, 1)
        group = sl2_generate(field)
        elements = group.element_set()
        assert FqMatrix.identity(field, 2) in elements
        for m in group.elements:
            assert m.inverse() in elements
            for g in group.generators:
                assert m * g in elements


class TestBurnside:
    def test_natural_module_is_absolutely_irreducible(self):
        result = burnside_irreducible(sl2_elementary_generators(make_field(3, 1)))
        assert result.irreducible and result.span_dim == 4

    def test_diagonal_group_is_reducible(self):
        field = make_field(5, 1)
        result = burnside_irreducible([FqMatrix.from_ints(field, [[2, 0], [0, 3]])])
        assert not result.irreducible and result.span_dim == 2

    def test_trivial_group(self):
        result = burnside_irreducible([FqMatrix.identity(make_field(5, 1), 2)])
        assert not result.irreducible and result.span_dim == 1

    def test_matches_eigenvector_oracle_on_borel(self):
        field = make_field(3, 1)
        upper = [
            FqMatrix.from_ints(field, [[1, 1], [0, 1]]),
            FqMatrix.from_ints(field, [[2, 1], [0, 2]]),
        ]
        assert not burnside_irreducible(upper).irreducible
        assert reducible_by_common_eigenvector(upper)


class TestFreeGroupReps:
    def test_holonomy_reaches_the_full_group(self):
        field = make_field(3, 1)
        rep = FreeGroupRep.of(sl2_elementary_generators(field))
        result = holonomy(rep, sl2_generate(field))
        assert result.group.order == 24 and result.full is True

    def test_trivial_images(self):
        field = make_field(3, 1)
        ident = FqMatrix.identity(field, 2)
        result = holonomy(FreeGroupRep.of([ident, ident]), sl2_generate(field))
        assert result.group.order == 1 and result.full is False

    def test_upper_triangular_images_are_a_proper_reducible_subgroup(self):
        field = make_field(3, 1)
        rep = FreeGroupRep.of([
            FqMatrix.from_ints(field, [[1, 1], [0, 1]]),
            FqMatrix.from_ints(field, [[2, 0], [0, 2]]),
        ])
        result = holonomy(rep, sl2_generate(field))
        assert result.full is False
        assert not burnside_irreducible(list(rep.images)).irreducible

    def test_images_must_be_invertible(self):
        field = make_field(2, 1)
        with pytest.raises(DomainError):
            FreeGroupRep.of([FqMatrix.from_ints(field, [[1, 1], [1, 1]])])


class TestAssociatedReps:
    def setup_method(self):
        self.field = make_field(3, 1)
        self.rep = FreeGroupRep.of(sl2_elementary_generators(self.field))

    def test_dual_is_an_involution(self):
        assert associated_rep(associated_rep(self.rep, "dual"), "dual").images == self.rep.images

    def test_sym2_is_three_dimensional_and_irreducible(self):
        sym2 = associated_rep(self.rep, "sym", 2)
        assert sym2.dim == 3
        assert burnside_irreducible(list(sym2.images)).irreducible

    def test_wedge2_is_the_trivial_determinant_line(self):
        wedge2 = associated_rep(self.rep, "wedge", 2)
        ident = FqMatrix.identity(self.field, 1)
        assert all(m == ident for m in wedge2.images)

    def test_tensor_with_doubles_the_dimension_multiplicatively(self):
        prod = associated_rep(self.rep, "tensor_with", other=self.rep)
        assert prod.dim == 4

    @pytest.mark.parametrize("functor,n", [("dual", 0), ("sym", 2), ("sym", 3), ("wedge", 2)])
    def test_functoriality_of_holonomy(self, functor, n):
        image = holonomy(self.rep).group
        lhs = holonomy(associated_rep(self.rep, functor, n)).group.element_set()
        rhs = frozenset(apply_matrix_functor(m, functor, n) for m in image.elements)
        assert lhs == rhs

    def test_functoriality_for_diagonal_tensor(self):
        image = holonomy(self.rep).group
        doubled = associated_rep(self.rep, "tensor_with", other=self.rep)
        lhs = holonomy(doubled).group.element_set()
        rhs = frozenset(kronecker(m, m) for m in image.elements)
        assert lhs == rhs

    def test_unknown_functor(self):
        with pytest.raises(DomainError):
            associated_rep(self.rep, "adjoint")


class TestMatrixFunctors:
    @pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (2, 2)])
    def test_functors_are_multiplicative(self, p, e):
        field = make_field(p, e)
        a = FqMatrix.from_ints(field, [[1, 1], [0, 1]])
        b = FqMatrix.from_ints(field, [[0, 1], [-1, 0]])
        ab = a * b
        assert dual_matrix(ab) == dual_matrix(a) * dual_matrix(b)
        for n in (0, 1, 2, 3):
            assert sym_matrix(ab, n) == sym_matrix(a, n) * sym_matrix(b, n)
        for n in (0, 1, 2):
            assert wedge_matrix(ab, n) == wedge_matrix(a, n) * wedge_matrix(b, n)
        assert kronecker(a, b) * kronecker(b, a) == kronecker(a * b, b * a)

    def test_inverse(self):
        field = make_field(7, 1)
        m = FqMatrix.from_ints(field, [[1, 2], [3, 4]])
        assert m * m.inverse() == FqMatrix.identity(field, 2)

    def test_wedge_top_is_the_determinant(self):
        field = make_field(5, 1)
        m = FqMatrix.from_ints(field, [[1, 2], [3, 4]])
        top = wedge_matrix(m, 2)
        assert top.rows == ((m.det(),),)

    def test_coefficient_row_wire_format_round_trips(self):
        field = make_field(2, 2)
        m = FqMatrix.from_coeff_rows(field, [[[0, 1], [1, 0]], [[0, 0], [1, 1]]])
        assert FqMatrix.from_coeff_rows(field, m.to_coeff_rows()) == m
