import pytest

from braidedforms import io
from braidedforms.cyclotomic import ONE, Scalar
from braidedforms.errors import InvalidBaseHopf
from braidedforms.hopf import (
    HopfAlgebraData,
    check_hopf,
    corpus,
    cyclic_group_algebra,
    make_hopf,
    sweedler_algebra,
    symmetric_group_algebra_s3,
    taft_algebra,
)
from braidedforms.matrix import Matrix, kron


def all_pass(report):
    return all(v["pass"] for v in report.values())


class TestCorpus:
    def test_group_algebras_fresh(self):
        for n in (2, 3, 4, 5, 6):
            h = cyclic_group_algebra(n)
            assert h.dim == n
            assert all_pass(check_hopf(h))

    def test_s3(self):
        h = symmetric_group_algebra_s3()
        assert h.dim == 6
        assert all_pass(check_hopf(h))
        # noncommutative multiplication
        m = h.mult
        tau_inputs = [
            kron(Matrix.identity(6).col(i), Matrix.identity(6).col(j))
            for i, j in [(1, 2), (2, 1)]
        ]
        assert m.compose(tau_inputs[0]) != m.compose(tau_inputs[1])

    def test_sweedler(self):
        h = sweedler_algebra()
        assert h.dim == 4 and all_pass(check_hopf(h))
        # antipode has order 4 (S^2 = conjugation by g, not the identity)
        s2 = h.antipode.compose(h.antipode)
        assert s2 != h.eye()
        assert s2.compose(s2) == h.eye()

    def test_taft3(self):
        h = taft_algebra(3)
        assert h.dim == 9 and all_pass(check_hopf(h))
        s2 = h.antipode.compose(h.antipode)
        # S has order 2n = 6
        assert s2 != h.eye()
        assert s2.compose(s2).compose(s2) == h.eye()

    def test_group_antipode_inverts(self):
        h = cyclic_group_algebra(5)
        # S(g^a) = g^(-a): the antipode permutes the basis accordingly
        for a in range(5):
            col = h.antipode.col(a)
            expected = Matrix.zero(5, 1)
            expected.entries[(-a) % 5] = ONE
            assert col == expected

    def test_corpus_builder_names(self):
        built = corpus(["kz2", "sweedler"])
        assert set(built) == {"kz2", "sweedler"}
        assert built["kz2"].dim == 2


class TestSerialization:
    def test_roundtrip_bit_exact(self, sweedler):
        obj = sweedler.to_obj()
        again = HopfAlgebraData.from_obj(obj)
        assert again.to_obj() == obj
        assert again.mult == sweedler.mult and again.antipode == sweedler.antipode

    def test_bundled_files_match_fresh_build(self):
        # the shipped corpus files are exactly what the constructors produce
        fresh = cyclic_group_algebra(3)
        bundled = io.hopf_from_obj(io.load_json(io.bundled_path("kz3")))
        assert bundled.to_obj() == fresh.to_obj()

    def test_bundled_corpus_all_valid(self):
        for name in ("kz2", "kz4", "ks3", "sweedler", "taft3"):
            h = io.hopf_from_obj(io.load_json(io.bundled_path(name)))
            assert all_pass(check_hopf(h)), name


class TestValidation:
    def test_no_antipode_rejected(self):
        # the "group-like without inverses" bialgebra on the 2-element monoid
        # {1, e} with e^2 = e has no antipode
        n = 2
        mult = Matrix.zero(n, n * n)
        mult.entries[0 * n * n + 0] = ONE          # 1*1 = 1
        mult.entries[1 * n * n + 1] = ONE          # 1*e = e
        mult.entries[1 * n * n + n] = ONE          # e*1 = e
        mult.entries[1 * n * n + n + 1] = ONE      # e*e = e
        unit = Matrix.zero(n, 1)
        unit.entries[0] = ONE
        comult = Matrix.zero(n * n, n)
        comult.entries[0] = ONE                    # Delta(1) = 1(x)1
        comult.entries[3 * n + 1] = ONE            # Delta(e) = e(x)e
        counit = Matrix(1, n, [ONE, ONE])
        with pytest.raises(InvalidBaseHopf):
            make_hopf(n, mult, unit, comult, counit, "monoid")

    def test_broken_associativity_rejected(self):
        h = cyclic_group_algebra(2)
        bad_mult = h.mult + Matrix.zero(2, 4)
        bad_mult.entries[0 * 4 + 3] = bad_mult.entries[0 * 4 + 3] + ONE
        with pytest.raises(InvalidBaseHopf):
            make_hopf(2, bad_mult, h.unit, h.comult, h.counit, "broken")
