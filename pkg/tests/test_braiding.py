import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidedforms.braiding import (
    BraidedSpace,
    braided_factorial,
    braided_line,
    check_yang_baxter,
    diagonal_space,
    multinomial,
    swap_matrix,
    swap_space,
)
from braidedforms.cyclotomic import MINUS_ONE, ONE, Scalar
from braidedforms.errors import ShapeError, TooLarge
from braidedforms.matrix import Matrix, compose_all
from braidedforms.permutations import Partition, Permutation, all_permutations

perms4 = st.permutations(list(range(1, 5))).map(Permutation)


def corpus_spaces():
    z5 = Scalar.zeta(5)
    return [
        swap_space(2),
        swap_space(3),
        diagonal_space([[z5, z5 * z5], [ONE, z5]]),
        braided_line(Scalar.zeta(3)),
    ]


def q_int(q, n):
    return sum((q**k for k in range(1, n)), ONE)


def q_factorial(q, n):
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(q, k)
    return out


class TestYangBaxter:
    def test_corpus_satisfies_yb(self):
        for x in corpus_spaces():
            ok, witness = check_yang_baxter(x.psi)
            assert ok and witness is None

    def test_failing_braiding_has_witness(self):
        bad = Matrix.from_rows(
            [[ONE, ONE, 0, 0], [0, ONE, 0, 0], [0, 0, ONE, ONE], [0, 0, ONE, 0]]
        )
        ok, witness = check_yang_baxter(bad)
        assert not ok and witness is not None

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            check_yang_baxter(Matrix.zero(3, 4))
        with pytest.raises(ShapeError):
            check_yang_baxter(Matrix.identity(3))  # 3 is not a perfect square

    def test_constructor_validates(self):
        bad = Matrix.from_rows(
            [[ONE, ONE, 0, 0], [0, ONE, 0, 0], [0, 0, ONE, ONE], [0, 0, ONE, 0]]
        )
        with pytest.raises(Exception):
            BraidedSpace(2, bad)


class TestRepresentation:
    @settings(max_examples=25, deadline=None)
    @given(perms4, st.sampled_from(corpus_spaces()))
    def test_well_defined_on_reduced_words(self, p, x):
        words = [p.reduced_expression(), p.reduced_expression_left()]
        mats = [
            compose_all(*[x.elementary(4, a) for a in w], Matrix.identity(x.dim**4))
            for w in words
        ]
        assert mats[0] == mats[1] == x.rep(p)

    @settings(max_examples=25, deadline=None)
    @given(perms4, perms4)
    def test_multiplicative_when_length_additive(self, p, q):
        x = swap_space(2)
        if (p * q).length() == p.length() + q.length():
            assert x.rep(p * q) == x.rep(p).compose(x.rep(q))

    def test_identity_and_transposition(self):
        x = swap_space(2)
        assert x.rep(Permutation.identity(3)) == Matrix.identity(8)
        assert x.rep(Permutation.transposition(2, 1)) == swap_matrix(2, 2)

    def test_braided_line_rep_is_q_power(self):
        x = braided_line(Scalar.zeta(5), ONE)  # psi = [zeta_5]
        q = Scalar.zeta(5)
        for p in all_permutations(4):
            assert x.rep(p) == Matrix(1, 1, [q ** p.length()])


class TestMultinomials:
    def test_two_over_one_one(self):
        for x in corpus_spaces():
            got = multinomial(Partition([1, 1]), x, "upper")
            assert got == Matrix.identity(x.dim**2) + x.psi.scale(x.lam)

    def test_j_over_j_is_identity(self):
        for x in corpus_spaces():
            for j in (0, 1, 2, 3):
                assert multinomial(Partition([j]), x, "upper") == Matrix.identity(x.dim**j)
                assert multinomial(Partition([j]), x, "lower") == Matrix.identity(x.dim**j)

    def test_braided_line_factorial_is_gaussian(self):
        # effective parameter mu: [n]! = [n]_mu! as 1x1 matrices
        for mu in (Scalar.zeta(3), Scalar.zeta(5), Scalar.rational(2)):
            x = braided_line(mu)
            for n in range(6):
                assert braided_factorial(n, x) == Matrix(1, 1, [q_factorial(mu, n)])

    def test_braided_line_zeta3_kernel(self):
        x = braided_line(Scalar.zeta(3))
        assert braided_factorial(2, x).rank() == 1  # [2]! = 1 + zeta_3 != 0
        assert braided_factorial(3, x).rank() == 0  # [3]! = [3]_q! = 0

    def test_swap_antisymmetrizer_ranks(self):
        x = swap_space(2, MINUS_ONE)
        assert braided_factorial(2, x).rank() == 1  # dim Lambda^2(k^2)
        assert braided_factorial(3, x).rank() == 0  # Lambda^3 vanishes

    def test_classical_multinomial_at_lambda_one(self):
        x = swap_space(2, ONE)
        pi = Partition([2, 1])
        got = multinomial(pi, x, "upper")
        direct = Matrix.zero(8, 8)
        from braidedforms.permutations import shuffle_set

        for sigma in shuffle_set(pi, "upper"):
            direct = direct + x.rep(sigma)
        assert got == direct

    def test_resource_bound(self):
        x = swap_space(4)
        with pytest.raises(TooLarge):
            x.guard(7)  # 4^7 > 4096
        x.guard(6)
