"""Braided spaces, braid-group representations, and braided multinomials.

A BraidedSpace is a d-dimensional space X with an invertible Yang-Baxter
operator psi on X@X and an invertible scalar lam (the unit automorphism).
rep_matrix sends a permutation to the product of elementary braidings over a
reduced word; the braid equation makes this well defined.  Braided
multinomials are the sums sum_sigma lam^l(sigma) * rep(sigma) over the lower
or upper shuffle set.
"""

from __future__ import annotations

from .cyclotomic import ONE, ZERO, Scalar
from .errors import ShapeError, TooLarge
from .matrix import Matrix, kron, kron_all
from .permutations import Partition, Permutation, shuffle_set

RESOURCE_BOUND = 4096


def check_yang_baxter(psi: Matrix):
    """(holds, witness): witness is a failing basis column index on X@X@X."""
    if psi.rows != psi.cols:
        raise ShapeError("braiding must be square")
    d = round(psi.rows ** 0.5)
    if d * d != psi.rows:
        raise ShapeError("braiding side length must be a perfect square")
    eye = Matrix.identity(d)
    left = kron(psi, eye)
    right = kron(eye, psi)
    lhs = left.compose(right).compose(left)
    rhs = right.compose(left).compose(right)
    diff = lhs - rhs
    for idx, entry in enumerate(diff.entries):
        if not entry.is_zero:
            return False, idx % diff.cols
    return True, None


class BraidedSpace:
    """Finite-dimensional space with Yang-Baxter operator and parameter lam."""

    __slots__ = ("dim", "psi", "lam", "_rep_cache", "psi_inv")

    def __init__(self, dim: int, psi: Matrix, lam=None, check: bool = True):
        lam = Scalar._coerce(-1 if lam is None else lam)
        if psi.rows != dim * dim or psi.cols != dim * dim:
            raise ShapeError(f"psi must be {dim*dim}x{dim*dim}")
        if lam.is_zero:
            raise ShapeError("lambda must be invertible")
        if check:
            ok, witness = check_yang_baxter(psi)
            if not ok:
                raise ShapeError(f"psi fails the braid equation at basis index {witness}")
        self.dim = dim
        self.psi = psi
        self.psi_inv = psi.inverse()
        self.lam = lam
        self._rep_cache = {}

    def guard(self, j: int):
        if self.dim**j > RESOURCE_BOUND:
            raise TooLarge(f"dim^{j} = {self.dim**j} exceeds the bound {RESOURCE_BOUND}")

    def elementary(self, j: int, a: int) -> Matrix:
        """psi acting in slots (a, a+1) of X^(tensor j)."""
        self.guard(j)
        d = self.dim
        key = ("elem", j, a)
        if key not in self._rep_cache:
            self._rep_cache[key] = kron_all(
                Matrix.identity(d ** (a - 1)), self.psi, Matrix.identity(d ** (j - a - 1))
            )
        return self._rep_cache[key]

    def rep(self, p: Permutation) -> Matrix:
        """The braid-group representation sigma_C on X^(tensor j)."""
        j = p.size
        self.guard(j)
        key = ("rep", p.images)
        if key not in self._rep_cache:
            result = Matrix.identity(self.dim**j)
            for a in p.reduced_expression():
                result = result.compose(self.elementary(j, a))
            self._rep_cache[key] = result
        return self._rep_cache[key]


def swap_matrix(dim_x: int, dim_y: int) -> Matrix:
    """The plain tensor swap X@Y -> Y@X."""
    m = Matrix.zero(dim_x * dim_y, dim_x * dim_y)
    for i in range(dim_x):
        for j in range(dim_y):
            m.entries[(j * dim_x + i) * dim_x * dim_y + (i * dim_y + j)] = ONE
    return m


def swap_space(dim: int, lam=None) -> BraidedSpace:
    return BraidedSpace(dim, swap_matrix(dim, dim), lam, check=False)


def diagonal_space(q_table, lam=None) -> BraidedSpace:
    """Diagonal braiding psi(e_i @ e_j) = q[i][j] e_j @ e_i (always YB)."""
    d = len(q_table)
    m = Matrix.zero(d * d, d * d)
    for i in range(d):
        for j in range(d):
            m.entries[(j * d + i) * d * d + (i * d + j)] = Scalar._coerce(q_table[i][j])
    return BraidedSpace(d, m, lam, check=False)


def braided_line(mu, lam=None) -> BraidedSpace:
    """One-dimensional space with effective multinomial parameter mu = lam*q."""
    lam = Scalar._coerce(-1 if lam is None else lam)
    q = Scalar._coerce(mu) * lam.inv()
    return BraidedSpace(1, Matrix(1, 1, [q]), lam, check=False)


def rep_matrix(p: Permutation, x: BraidedSpace) -> Matrix:
    return x.rep(p)


def multinomial(pi: Partition, x: BraidedSpace, side: str) -> Matrix:
    """[pi over j] (side="lower") or [j over pi] (side="upper") on X^(tensor j)."""
    j = pi.total
    x.guard(j)
    size = x.dim**j
    acc = [ZERO] * (size * size)
    for sigma in shuffle_set(pi, side):
        term = x.rep(sigma)
        weight = x.lam ** sigma.length()
        scale = weight != 1
        # representation matrices are sparse; only touch their nonzero entries
        for idx, e in enumerate(term.entries):
            if not e.is_zero:
                acc[idx] = acc[idx] + (weight * e if scale else e)
    return Matrix(size, size, acc)


def braided_factorial(j: int, x: BraidedSpace) -> Matrix:
    """[j | X; lam]! = [j over (1,...,1)]."""
    return multinomial(Partition([1] * j) if j else Partition([0]), x, "upper")


def block_swap(k: int, l: int) -> Permutation:
    """The permutation in S_{k+l} moving the first k slots past the last l."""
    images = [i + l for i in range(1, k + 1)] + [i for i in range(1, l + 1)]
    return Permutation(images)


def block_swap_rep(k: int, l: int, x: BraidedSpace) -> Matrix:
    """Braiding X^k @ X^l -> X^l @ X^k induced by psi (length k*l rep)."""
    if k == 0 or l == 0:
        return Matrix.identity(x.dim ** (k + l))
    return x.rep(block_swap(k, l))
