from braidedforms.braiding import (
    braided_line,
    diagonal_space,
    swap_space,
)
from braidedforms.cyclotomic import MINUS_ONE, ONE, Scalar
from braidedforms.graded import all_pass, check_graded_structure
from braidedforms.matrix import Matrix, kron
from braidedforms.tensor_hopf import (
    antisymmetrizer,
    build_tensor_hopf,
    build_wedge,
    check_antisym_hopf_morphism,
    closed_form_antipode,
    wedge_vs_quadratic,
)


def binomial(n, k):
    from math import comb

    return comb(n, k)


class TestTensorHopf:
    def test_both_variants_are_hopf(self):
        for x in (swap_space(2), braided_line(Scalar.zeta(3))):
            for variant in ("shuffle_coproduct", "shuffle_product"):
                t = build_tensor_hopf(x, variant, 3).algebra
                assert all_pass(check_graded_structure(t, "hopf")), (variant, x.dim)

    def test_closed_form_antipode_matches_recursive(self):
        from braidedforms.graded import antipode_recursive

        for x in (swap_space(2), braided_line(Scalar.zeta(4))):
            t = build_tensor_hopf(x, "shuffle_coproduct", 3).algebra
            rec = antipode_recursive(t)
            for n in range(4):
                assert rec[n] == closed_form_antipode(x, n), n

    def test_degree_zero_and_one_structure(self):
        x = swap_space(2)
        t = build_tensor_hopf(x, "shuffle_coproduct", 3).algebra
        assert t.dims == (1, 2, 4, 8)
        # degree-1 comultiplication is primitive: cm(0,1) and cm(1,0) are id
        assert t.cm(0, 1) == Matrix.identity(2)
        assert t.cm(1, 0) == Matrix.identity(2)


class TestAntisymmetrizer:
    def test_is_hopf_morphism(self):
        for x in (swap_space(2), diagonal_space([[Scalar.zeta(5)]])):
            report = check_antisym_hopf_morphism(x, 3)
            assert all(v["pass"] for v in report.values())

    def test_blocks_are_braided_factorials(self):
        from braidedforms.braiding import braided_factorial
        from braidedforms.braiding import BraidedSpace

        x = swap_space(3)
        xm = BraidedSpace(x.dim, x.psi, MINUS_ONE, check=False)
        a = antisymmetrizer(x, 3)
        for n in range(4):
            assert a.blocks[n] == braided_factorial(n, xm)


class TestWedge:
    def test_swap_dims_are_binomials(self):
        for d in (2, 3):
            w = build_wedge(swap_space(d), 4)
            assert list(w.dims) == [binomial(d, n) for n in range(5)]

    def test_braided_line_zeta3_dims(self):
        w = build_wedge(braided_line(Scalar.zeta(3)), 4)
        assert list(w.dims) == [1, 1, 1, 0, 0]

    def test_wedge_is_hopf(self):
        w = build_wedge(swap_space(2), 3)
        assert all_pass(check_graded_structure(w.algebra, "hopf"))

    def test_epi_mono_factorization(self):
        # coim o im = id on the wedge; im o coim = the antisymmetrizer up to
        # the factorization through its image
        x = swap_space(2)
        w = build_wedge(x, 3)
        a = antisymmetrizer(x, 3)
        for n in range(4):
            assert w.coim[n].compose(w.im[n]).rank() == w.dims[n]
            assert w.im[n].compose(w.coim[n]).column_echelon_basis()[0].cols == \
                a.blocks[n].rank()

    def test_wedge_multiplication_compatible_with_projection(self):
        # coim is an algebra morphism T -> wedge; this determines the wedge
        # product uniquely since coim is surjective
        x = swap_space(2)
        w = build_wedge(x, 3)
        t = build_tensor_hopf(
            type(x)(x.dim, x.psi, MINUS_ONE, check=False), "shuffle_coproduct", 3
        ).algebra
        for k in range(4):
            for l in range(4 - k):
                lhs = w.coim[k + l].compose(t.m(k, l))
                rhs = w.algebra.m(k, l).compose(kron(w.coim[k], w.coim[l]))
                assert lhs == rhs, (k, l)

    def test_quadratic_comparison_braided_line(self):
        cmp = wedge_vs_quadratic(braided_line(Scalar.zeta(3)), 4)
        assert cmp["wedge_dims"] == [1, 1, 1, 0, 0]
        assert cmp["quadratic_dims"] == [1, 1, 1, 1, 1]
        assert not cmp["equal"] and cmp["first_unequal_degree"] == 3

    def test_quadratic_comparison_swap(self):
        cmp = wedge_vs_quadratic(swap_space(2), 3)
        assert cmp["equal"] and cmp["first_unequal_degree"] is None
