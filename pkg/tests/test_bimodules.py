import pytest

from braidedforms.bimodules import (
    BialgebraProjection,
    TensorCache,
    adjoint_crossed,
    all_pass,
    check_crossed_module,
    check_hopf_bimodule,
    coadjoint_crossed,
    coinvariants,
    crossed_iso_smash,
    hexagon_identities,
    hopf_bimodule_braiding,
    hopf_bimodule_braiding_inverse,
    is_bimodule_morphism,
    lam_sections,
    projection_to_bimodule,
    projection_to_plain,
    regular_bimodule,
    relative_antipode,
    relative_antipode_commutes,
    rho_lambda_formula,
    smash,
    square_bimodule,
    tensor_over_H,
    theta,
    trivial_crossed,
    yd_braiding,
)
from braidedforms.braiding import check_yang_baxter
from braidedforms.cyclotomic import ONE
from braidedforms.matrix import Matrix, kron


class TestAxioms:
    def test_regular_and_square(self, kz2, kz3, sweedler):
        for h in (kz2, kz3, sweedler):
            assert all_pass(check_hopf_bimodule(regular_bimodule(h)))
            assert all_pass(check_hopf_bimodule(square_bimodule(h)))

    def test_crossed_examples(self, kz3, sweedler):
        for h in (kz3, sweedler):
            for mc in (trivial_crossed(h), adjoint_crossed(h), coadjoint_crossed(h)):
                assert all_pass(check_crossed_module(mc)), mc.name

    def test_smash_is_hopf_bimodule(self, kz3, sweedler):
        for h in (kz3, sweedler):
            for mc in (trivial_crossed(h), adjoint_crossed(h)):
                assert all_pass(check_hopf_bimodule(smash(h, mc)))

    def test_broken_bimodule_detected(self, kz2):
        # twisting the left action by a basis permutation breaks an axiom
        bad = regular_bimodule(kz2)
        bad.mu_l = bad.mu_l.permute_cols([2, 3, 0, 1])
        assert not all_pass(check_hopf_bimodule(bad))


class TestCoinvariantsAndSmash:
    def test_projection_splits(self, kz3, sweedler):
        for h in (kz3, sweedler):
            mc, p, i = coinvariants(square_bimodule(h))
            assert p.compose(i) == Matrix.identity(mc.dim)
            assert mc.dim == h.dim
            assert all_pass(check_crossed_module(mc))

    def test_regular_coinvariants_trivial(self, sweedler):
        mc, _, _ = coinvariants(regular_bimodule(sweedler))
        assert mc.dim == 1

    def test_equivalence_roundtrip(self, kz2, kz3, sweedler):
        # coinvariants of the smash product recover the crossed module
        for h in (kz2, kz3, sweedler):
            for mc in (trivial_crossed(h), adjoint_crossed(h), coadjoint_crossed(h)):
                got, alpha, beta = crossed_iso_smash(mc)
                assert got.dim == mc.dim
                assert alpha.compose(beta) == Matrix.identity(mc.dim)
                assert beta.compose(alpha) == Matrix.identity(mc.dim)
                ea = Matrix.identity(h.dim)
                # alpha conjugates the structure maps
                assert alpha.compose(mc.mu_r) == got.mu_r.compose(kron(alpha, ea))
                assert got.nu_r.compose(alpha) == kron(alpha, ea).compose(mc.nu_r)


class TestTensorOverH:
    def test_lam_rho_and_formula(self, kz2, sweedler):
        for h in (kz2, sweedler):
            reg, sq = regular_bimodule(h), square_bimodule(h)
            for x, y in [(reg, reg), (reg, sq), (sq, reg)]:
                t = tensor_over_H(x, y)
                assert t.lam.rank() == t.z.dim          # lam surjective
                assert t.rho.rank() == t.z.dim          # rho injective
                assert t.rho.compose(t.lam) == rho_lambda_formula(x, y)
                assert all_pass(check_hopf_bimodule(t.z))

    def test_unit_constraint(self, sweedler):
        # X (x)_H H: lam coincides with the right action under the iso
        h = sweedler
        x = regular_bimodule(h)
        t = tensor_over_H(x, regular_bimodule(h))
        # coinv(H) is one-dimensional; lam = mu_r up to the unit column
        mc = t.coinv
        assert mc.dim == 1

    def test_sections_exist_and_differ(self, kz2):
        t = tensor_over_H(regular_bimodule(kz2), square_bimodule(kz2))
        s1, s2 = lam_sections(t)
        eye = Matrix.identity(t.z.dim)
        assert t.lam.compose(s1) == eye and t.lam.compose(s2) == eye
        assert s1 != s2


class TestBraiding:
    def test_defining_equation_and_invertibility(self, kz2, sweedler):
        for h in (kz2, sweedler):
            reg, sq = regular_bimodule(h), square_bimodule(h)
            for x, y in [(reg, reg), (reg, sq)]:
                txy = tensor_over_H(x, y)
                tyx = tensor_over_H(y, x)
                b = hopf_bimodule_braiding(x, y, txy, tyx)
                assert tyx.rho.compose(b).compose(txy.lam) == theta(x, y)
                binv = hopf_bimodule_braiding_inverse(x, y, txy, tyx)
                assert b.compose(binv) == Matrix.identity(tyx.z.dim)
                assert binv.compose(b) == Matrix.identity(txy.z.dim)

    def test_section_independence(self, sweedler):
        x = regular_bimodule(sweedler)
        y = square_bimodule(sweedler)
        txy = tensor_over_H(x, y)
        tyx = tensor_over_H(y, x)
        s1, s2 = lam_sections(txy)
        b1 = hopf_bimodule_braiding(x, y, txy, tyx, section=s1)
        b2 = hopf_bimodule_braiding(x, y, txy, tyx, section=s2)
        assert s1 != s2 and b1 == b2
        assert b1 == hopf_bimodule_braiding(x, y, txy, tyx)

    def test_braiding_is_bimodule_morphism(self, kz2):
        x = regular_bimodule(kz2)
        y = square_bimodule(kz2)
        txy = tensor_over_H(x, y)
        tyx = tensor_over_H(y, x)
        b = hopf_bimodule_braiding(x, y, txy, tyx)
        assert is_bimodule_morphism(txy.z, tyx.z, b)

    def test_hexagons_kz2(self, kz2):
        reg = regular_bimodule(kz2)
        sq = square_bimodule(kz2)
        sm = smash(kz2, adjoint_crossed(kz2))
        cache = TensorCache()
        for triple in [(reg, reg, reg), (reg, sq, sm)]:
            rep = hexagon_identities(*triple, cache)
            assert all(v["pass"] for v in rep.values()), rep

    def test_yd_braiding_satisfies_yang_baxter(self, kz3, sweedler):
        for h in (kz3, sweedler):
            mc = adjoint_crossed(h)
            psi = yd_braiding(mc, mc)
            ok, _ = check_yang_baxter(psi)
            assert ok


class TestRelativeAntipode:
    def test_regular_case_is_antipode(self, kz3, sweedler):
        for h in (kz3, sweedler):
            assert relative_antipode(regular_bimodule(h)) == h.antipode

    def test_twisted_commutation(self, kz2, sweedler, ks3):
        for h in (kz2, sweedler, ks3):
            for x in (regular_bimodule(h), square_bimodule(h),
                      smash(h, trivial_crossed(h))):
                assert relative_antipode_commutes(x), (h.name, x.name)


class TestProjectionTransfer:
    def _sweedler_to_kz2(self, sweedler, kz2):
        # eps_bar: g^a x^b -> g^a [b=0], eta_bar: group-like inclusion
        eta = Matrix.zero(4, 2)
        eta.entries[0 * 2 + 0] = ONE   # 1 -> 1
        eta.entries[2 * 2 + 1] = ONE   # g -> g  (basis g^a x^b at index 2a+b)
        eps = Matrix.zero(2, 4)
        eps.entries[0 * 4 + 0] = ONE
        eps.entries[1 * 4 + 2] = ONE
        return BialgebraProjection(kz2, sweedler, eta, eps)

    def test_roundtrip(self, sweedler, kz2):
        pr = self._sweedler_to_kz2(sweedler, kz2)
        transferred = projection_to_bimodule(pr)
        plain = projection_to_plain(kz2, transferred)
        assert plain["mult"] == sweedler.mult
        assert plain["comult"] == sweedler.comult
        assert plain["unit"] == sweedler.unit
        assert plain["counit"] == sweedler.counit

    def test_identity_projection(self, kz3):
        eye = Matrix.identity(3)
        pr = BialgebraProjection(kz3, kz3, eye, eye)
        transferred = projection_to_bimodule(pr)
        plain = projection_to_plain(kz3, transferred)
        assert plain["mult"] == kz3.mult and plain["comult"] == kz3.comult
