"""Finite-dimensional Hopf algebras by structure constants, plus a small
corpus: group algebras kZ_n and kS_3, and Taft algebras (Sweedler's algebra
is the n = 2 case).

The antipode is never entered by hand: it is solved from the convolution
equation m o (S @ id) o Delta = eta o eps, which is linear in S, and then
re-verified on both sides by check_hopf.
"""

from __future__ import annotations

from .braiding import swap_matrix
from .cyclotomic import ONE, ZERO, Scalar
from .errors import InvalidBaseHopf, ShapeError
from .matrix import Matrix, kron, solve_mono
from .permutations import all_permutations


class HopfAlgebraData:
    def __init__(self, dim, mult, unit, comult, counit, antipode, antipode_inv, name=""):
        if mult.rows != dim or mult.cols != dim * dim:
            raise ShapeError("mult shape")
        if comult.rows != dim * dim or comult.cols != dim:
            raise ShapeError("comult shape")
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.name = name

    def eye(self) -> Matrix:
        return Matrix.identity(self.dim)

    def to_obj(self):
        return {
            "dim": self.dim,
            "mult": self.mult.to_obj(),
            "unit": self.unit.to_obj(),
            "comult": self.comult.to_obj(),
            "counit": self.counit.to_obj(),
            "antipode": self.antipode.to_obj(),
            "antipode_inv": self.antipode_inv.to_obj(),
        }

    @staticmethod
    def from_obj(obj) -> "HopfAlgebraData":
        return HopfAlgebraData(
            int(obj["dim"]),
            Matrix.from_obj(obj["mult"]),
            Matrix.from_obj(obj["unit"]),
            Matrix.from_obj(obj["comult"]),
            Matrix.from_obj(obj["counit"]),
            Matrix.from_obj(obj["antipode"]),
            Matrix.from_obj(obj["antipode_inv"]),
        )

    def __repr__(self):
        return f"HopfAlgebraData({self.name or self.dim})"


def solve_antipode(dim, mult, unit, comult, counit) -> Matrix:
    """Solve m o (S @ id) o Delta = eta o eps for S (linear in S)."""
    n = dim
    # unknown s[i*n + a] = S_{i,a}; equation rows indexed by (r, c)
    system = Matrix.zero(n * n, n * n)
    rhs = Matrix.zero(n * n, 1)
    target = unit.compose(counit)
    for c in range(n):
        for r in range(n):
            rhs.entries[(r * n + c)] = target[r, c]
            for a in range(n):
                for i in range(n):
                    coeff = ZERO
                    for b in range(n):
                        delta = comult[a * n + b, c]
                        if delta.is_zero:
                            continue
                        mval = mult[r, i * n + b]
                        if not mval.is_zero:
                            coeff = coeff + delta * mval
                    if not coeff.is_zero:
                        system.entries[(r * n + c) * (n * n) + (i * n + a)] = coeff
    try:
        s_flat = solve_mono(system, rhs)
    except Exception as exc:
        raise InvalidBaseHopf("no antipode exists for the given bialgebra") from exc
    s = Matrix.zero(n, n)
    for i in range(n):
        for a in range(n):
            s.entries[i * n + a] = s_flat.entries[i * n + a]
    return s


def make_hopf(dim, mult, unit, comult, counit, name="") -> HopfAlgebraData:
    s = solve_antipode(dim, mult, unit, comult, counit)
    h = HopfAlgebraData(dim, mult, unit, comult, counit, s, s.inverse(), name)
    report = check_hopf(h)
    bad = [k for k, v in report.items() if not v["pass"]]
    if bad:
        raise InvalidBaseHopf(f"{name or 'algebra'} fails axioms: {bad}")
    return h


def check_hopf(h: HopfAlgebraData) -> dict:
    eye = h.eye()
    m, u, cm, cu, s = h.mult, h.unit, h.comult, h.counit, h.antipode
    tau = swap_matrix(h.dim, h.dim)
    checks = {
        "associativity": m.compose(kron(m, eye)) == m.compose(kron(eye, m)),
        "unit": m.compose(kron(u, eye)) == eye and m.compose(kron(eye, u)) == eye,
        "coassociativity": kron(cm, eye).compose(cm) == kron(eye, cm).compose(cm),
        "counit": kron(cu, eye).compose(cm) == eye and kron(eye, cu).compose(cm) == eye,
        "bialgebra": cm.compose(m)
        == kron(m, m).compose(kron(kron(eye, tau), eye)).compose(kron(cm, cm)),
        "unit_counit": cu.compose(m) == kron(cu, cu)
        and cm.compose(u) == kron(u, u)
        and cu.compose(u) == Matrix.identity(1),
        "antipode_left": m.compose(kron(s, eye)).compose(cm) == u.compose(cu),
        "antipode_right": m.compose(kron(eye, s)).compose(cm) == u.compose(cu),
        "antipode_invertible": s.compose(h.antipode_inv) == eye,
    }
    return {k: {"pass": bool(v), "first_failure": None if v else k} for k, v in checks.items()}


# --- corpus ---------------------------------------------------------------


def group_algebra(elements, multiply, name="") -> HopfAlgebraData:
    """Group algebra kG: basis = group elements, Delta g = g @ g, S g = g^-1."""
    n = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    mult = Matrix.zero(n, n * n)
    for i, g in enumerate(elements):
        for j, k in enumerate(elements):
            mult.entries[index[multiply(g, k)] * n * n + (i * n + j)] = ONE
    unit = Matrix.zero(n, 1)
    identity = next(g for g in elements if all(multiply(g, k) == k for k in elements))
    unit.entries[index[identity]] = ONE
    comult = Matrix.zero(n * n, n)
    for i in range(n):
        comult.entries[(i * n + i) * n + i] = ONE
    counit = Matrix(1, n, [ONE] * n)
    return make_hopf(n, mult, unit, comult, counit, name)


def cyclic_group_algebra(n: int) -> HopfAlgebraData:
    return group_algebra(list(range(n)), lambda a, b: (a + b) % n, f"kZ{n}")


def symmetric_group_algebra_s3() -> HopfAlgebraData:
    elements = [p.images for p in all_permutations(3)]

    def multiply(a, b):
        return tuple(a[b[i] - 1] for i in range(3))

    return group_algebra(elements, multiply, "kS3")


def taft_algebra(n: int) -> HopfAlgebraData:
    """Taft algebra of dimension n^2 at a primitive n-th root of unity:
    g^n = 1, x^n = 0, x g = zeta g x, Delta g = g@g, Delta x = x@1 + g@x.
    n = 2 is Sweedler's four-dimensional Hopf algebra (zeta = -1)."""
    zeta = Scalar.zeta(n)
    dim = n * n

    def idx(a, b):  # basis g^a x^b
        return a * n + b

    mult = Matrix.zero(dim, dim * dim)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d < n:
                        coeff = zeta ** (b * c)
                        mult.entries[idx((a + c) % n, b + d) * dim * dim + (idx(a, b) * dim + idx(c, d))] = coeff
    unit = Matrix.zero(dim, 1)
    unit.entries[idx(0, 0)] = ONE
    # comultiplication computed in the tensor-square algebra from the generators
    tau = swap_matrix(dim, dim)
    mult2 = kron(mult, mult).compose(kron(kron(Matrix.identity(dim), tau), Matrix.identity(dim)))
    unit2 = kron(unit, unit)
    dg = Matrix.zero(dim * dim, 1)
    dg.entries[idx(1, 0) * dim + idx(1, 0)] = ONE
    dx = Matrix.zero(dim * dim, 1)
    dx.entries[idx(0, 1) * dim + idx(0, 0)] = ONE
    dx.entries[idx(1, 0) * dim + idx(0, 1)] = ONE
    comult = Matrix.zero(dim * dim, dim)
    for a in range(n):
        for b in range(n):
            val = unit2
            for _ in range(a):
                val = mult2.compose(kron(val, dg))
            for _ in range(b):
                val = mult2.compose(kron(val, dx))
            for r in range(dim * dim):
                comult.entries[r * dim + idx(a, b)] = val.entries[r]
    counit = Matrix.zero(1, dim)
    for a in range(n):
        counit.entries[idx(a, 0)] = ONE
    return make_hopf(dim, mult, unit, comult, counit, f"taft{n}")


def sweedler_algebra() -> HopfAlgebraData:
    h = taft_algebra(2)
    h.name = "sweedler"
    return h


def corpus(names=None) -> dict[str, HopfAlgebraData]:
    """The bundled Hopf algebra corpus, built fresh (and thus re-validated)."""
    builders = {
        "kz2": lambda: cyclic_group_algebra(2),
        "kz3": lambda: cyclic_group_algebra(3),
        "kz4": lambda: cyclic_group_algebra(4),
        "kz5": lambda: cyclic_group_algebra(5),
        "kz6": lambda: cyclic_group_algebra(6),
        "ks3": symmetric_group_algebra_s3,
        "sweedler": sweedler_algebra,
        "taft3": lambda: taft_algebra(3),
    }
    if names is None:
        names = list(builders)
    return {name: builders[name]() for name in names}
