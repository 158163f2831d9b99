"""Tensor Hopf algebras T(X), T°(X), the antisymmetrizer, and the wedge.

T(X) has concatenation product and shuffle coproduct [n+m over (n,m)];
T°(X) has shuffle product [(n,m) over n+m] and deconcatenation coproduct;
both share the closed-form antipode S_n = (-1)^n lam^C(n,2) rep(reversal).
The antisymmetrizer is the braided factorial at lam = -1; its degreewise
epi-mono factorization T -> T^wedge -> T° induces the wedge Hopf structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braiding import BraidedSpace, block_swap_rep, braided_factorial, multinomial
from .cyclotomic import MINUS_ONE, Scalar
from .graded import GradedBialgebra, GradedMap, GradedSpace, check_graded_structure, ideal_quotient
from .matrix import Matrix, kron, solve_epi, solve_mono
from .permutations import Partition, Permutation


def reversal(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def closed_form_antipode(x: BraidedSpace, n: int) -> Matrix:
    """S_n = (-1)^n lam^C(n,2) rep(sigma_n^0)."""
    if n == 0:
        return Matrix.identity(1)
    sign = Scalar.rational(-1) ** n
    weight = sign * x.lam ** (n * (n - 1) // 2)
    mat = x.rep(reversal(n))
    return mat.scale(weight)


def _braid_blocks(x: BraidedSpace):
    def blocks(k, l):
        m = block_swap_rep(k, l, x)
        w = x.lam ** (k * l)
        return m if w == 1 else m.scale(w)

    return blocks


@dataclass
class TensorHopf:
    space: BraidedSpace
    variant: str
    N: int
    algebra: GradedBialgebra


def build_tensor_hopf(x: BraidedSpace, variant: str, N: int) -> TensorHopf:
    """variant "shuffle_coproduct" builds T(X); "shuffle_product" builds T°(X)."""
    x.guard(N)
    d = x.dim
    dims = [d**n for n in range(N + 1)]
    mult = {}
    comult = {}
    for k in range(N + 1):
        for l in range(N + 1 - k):
            if variant == "shuffle_coproduct":
                mult[(k, l)] = Matrix.identity(d ** (k + l))
                comult[(k, l)] = multinomial(Partition([k, l]), x, "upper")
            elif variant == "shuffle_product":
                mult[(k, l)] = multinomial(Partition([k, l]), x, "lower")
                comult[(k, l)] = Matrix.identity(d ** (k + l))
            else:
                raise ValueError(f"unknown variant {variant!r}")
    antipode = [closed_form_antipode(x, n) for n in range(N + 1)]
    alg = GradedBialgebra(
        GradedSpace(dims), mult, Matrix.identity(1), comult, Matrix.identity(1),
        _braid_blocks(x), antipode=antipode, lam=x.lam,
    )
    return TensorHopf(x, variant, N, alg)


def antisymmetrizer(x: BraidedSpace, N: int) -> GradedMap:
    """Graded endomorphism with degree-n block [n|X]! at lam = -1."""
    xm = BraidedSpace(x.dim, x.psi, MINUS_ONE, check=False)
    space = GradedSpace([x.dim**n for n in range(N + 1)])
    return GradedMap(space, space, [braided_factorial(n, xm) for n in range(N + 1)])


def check_antisym_hopf_morphism(x: BraidedSpace, N: int) -> dict:
    """Blockwise check that A: T(X) -> T°(X) is a Hopf algebra morphism
    (at lam = -1)."""
    xm = BraidedSpace(x.dim, x.psi, MINUS_ONE, check=False)
    t = build_tensor_hopf(xm, "shuffle_coproduct", N).algebra
    t0 = build_tensor_hopf(xm, "shuffle_product", N).algebra
    a = antisymmetrizer(x, N).blocks
    report = {}
    ok_m = ok_c = ok_s = True
    fail_m = fail_c = fail_s = None
    for k in range(N + 1):
        for l in range(N + 1 - k):
            if t0.m(k, l).compose(kron(a[k], a[l])) != a[k + l].compose(t.m(k, l)):
                if ok_m:
                    ok_m, fail_m = False, (k, l)
            if kron(a[k], a[l]).compose(t.cm(k, l)) != t0.cm(k, l).compose(a[k + l]):
                if ok_c:
                    ok_c, fail_c = False, (k, l)
    for n in range(N + 1):
        if t0.antipode[n].compose(a[n]) != a[n].compose(t.antipode[n]):
            if ok_s:
                ok_s, fail_s = False, (n,)
    report["multiplicative"] = {"pass": ok_m, "first_failure": fail_m}
    report["comultiplicative"] = {"pass": ok_c, "first_failure": fail_c}
    report["antipode"] = {"pass": ok_s, "first_failure": fail_s}
    return report


@dataclass
class WedgeAlgebra:
    space: BraidedSpace
    N: int
    algebra: GradedBialgebra
    im: list = field(default_factory=list)  # inclusion blocks into X^(tensor n)
    coim: list = field(default_factory=list)  # projection blocks
    dims: tuple = ()


def build_wedge(x: BraidedSpace, N: int) -> WedgeAlgebra:
    """The antisymmetric tensor algebra T^wedge(X): images of the
    antisymmetrizer with the unique structure making coim/im bialgebra
    morphisms from T and into T°."""
    xm = BraidedSpace(x.dim, x.psi, MINUS_ONE, check=False)
    xm.guard(N)
    t = build_tensor_hopf(xm, "shuffle_coproduct", N).algebra
    t0 = build_tensor_hopf(xm, "shuffle_product", N).algebra
    im = []
    coim = []
    for n in range(N + 1):
        a_n = braided_factorial(n, xm)
        _, image, coimage, _ = a_n.kernel_image()
        im.append(image)
        coim.append(coimage)
    dims = tuple(b.cols for b in im)
    mult = {}
    comult = {}
    for k in range(N + 1):
        for l in range(N + 1 - k):
            mult[(k, l)] = solve_mono(im[k + l], t0.m(k, l).compose(kron(im[k], im[l])))
            comult[(k, l)] = solve_epi(kron(coim[k], coim[l]).compose(t.cm(k, l)), coim[k + l])
    antipode = [solve_mono(im[n], t0.antipode[n].compose(im[n])) for n in range(N + 1)]

    braid_cache = {}

    def braid_q(k, l):
        if (k, l) not in braid_cache:
            braid_cache[(k, l)] = solve_mono(
                kron(im[l], im[k]), t._braid(k, l).compose(kron(im[k], im[l]))
            )
        return braid_cache[(k, l)]

    alg = GradedBialgebra(
        GradedSpace(dims), mult, coim[0].compose(Matrix.identity(1)),
        comult, Matrix.identity(1).compose(im[0]), braid_q,
        antipode=antipode, lam=MINUS_ONE,
    )
    return WedgeAlgebra(xm, N, alg, im, coim, dims)


def wedge_vs_quadratic(x: BraidedSpace, N: int) -> dict:
    """Compare T/(Ker [2]!) with T^wedge degree by degree (lam = -1)."""
    xm = BraidedSpace(x.dim, x.psi, MINUS_ONE, check=False)
    wedge = build_wedge(x, N)
    t = build_tensor_hopf(xm, "shuffle_coproduct", N).algebra
    two_bang = braided_factorial(2, xm)
    generators = two_bang.kernel_basis()
    quad = ideal_quotient(t, generators, 2)
    equal_from = None
    for n in range(N + 1):
        if quad.dims[n] != wedge.dims[n]:
            equal_from = n
            break
    return {
        "wedge_dims": list(wedge.dims),
        "quadratic_dims": list(quad.dims),
        "equal": equal_from is None,
        "first_unequal_degree": equal_from,
    }
