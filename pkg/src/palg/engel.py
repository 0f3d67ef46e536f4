"""Engel subalgebras, the eigenvalue split of the bracket operator, and the
two operator identities they rest on.

For a fixed element a, the Engel subspaces are the generalized null spaces
of left dot multiplication P_a and left bracket multiplication Q_a.  The
split pair collects the generalized eigenspaces of Q_a for eigenvalues lying
in the ground field (kernel of f(Q_a) where f gathers those eigenvalues with
their multiplicities) together with the complementary stable image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (
    AlgebraSubspace,
    PoissonAlgebra,
    VERIFIED_SUBALGEBRA,
    subalgebra_defect,
)
from .linalg import (
    Matrix,
    Subspace,
    char_poly,
    fitting_null,
    image,
    kernel,
    poly_eval_matrix,
    poly_mul,
    roots_in_field,
    subspace_intersect,
    subspace_sum,
    vec_scale,
    vec_sub,
)


class EngelClosureError(RuntimeError):
    """An Engel or eigenvalue-split subspace failed to close; only possible
    when the input tensors are not actually a Poisson algebra."""

    def __init__(self, label: str, witness):
        self.label = label
        self.witness = witness
        super().__init__(f"{label} is not closed under both multiplications")


@dataclass(frozen=True)
class EngelPair:
    element: tuple
    engel_assoc: AlgebraSubspace
    engel_lie: AlgebraSubspace


@dataclass(frozen=True)
class SplitPair:
    element: tuple
    s_part: AlgebraSubspace
    k_part: Subspace


def engel_assoc_space(alg: PoissonAlgebra, a) -> Subspace:
    """Generalized null space of P_a, computed as ker(P_a^dim)."""
    return fitting_null(alg.p_operator(a))


def engel_lie_space(alg: PoissonAlgebra, a) -> Subspace:
    """Generalized null space of Q_a."""
    return fitting_null(alg.q_operator(a))


def engel(alg: PoissonAlgebra, a) -> EngelPair:
    """Both Engel subalgebras of a, verified closed."""
    spaces = {}
    for label, space in (("engel-assoc", engel_assoc_space(alg, a)),
                         ("engel-lie", engel_lie_space(alg, a))):
        defect = subalgebra_defect(alg, space)
        if defect is not None:
            raise EngelClosureError(label, defect)
        spaces[label] = AlgebraSubspace(alg, space, VERIFIED_SUBALGEBRA)
    return EngelPair(tuple(a), spaces["engel-assoc"], spaces["engel-lie"])


def split_polynomial(alg: PoissonAlgebra, a) -> tuple:
    """f(t) = prod (t - lambda)^mult over the eigenvalues of Q_a in the field."""
    f = alg.field
    q = alg.q_operator(a)
    poly = (f.one(),)
    for value, mult in roots_in_field(f, char_poly(q)):
        factor = (f.one(), f.neg(value))
        for _ in range(mult):
            poly = poly_mul(f, poly, factor)
    return poly


def s_space(alg: PoissonAlgebra, a) -> Subspace:
    """Kernel of f(Q_a): the sum of generalized eigenspaces over the field."""
    return kernel(poly_eval_matrix(split_polynomial(alg, a), alg.q_operator(a)))


def k_space(alg: PoissonAlgebra, a) -> Subspace:
    """Image of f(Q_a): the complementary Q_a-stable subspace."""
    return image(poly_eval_matrix(split_polynomial(alg, a), alg.q_operator(a)))


def s_k_split(alg: PoissonAlgebra, a) -> SplitPair:
    """The verified eigenvalue split of Q_a.

    Checks that the two pieces are complementary, both stable under Q_a,
    and that the eigenvalue part closes under both multiplications.
    """
    s = s_space(alg, a)
    k = k_space(alg, a)
    q = alg.q_operator(a)
    if not subspace_intersect(s, k).is_zero() or s.dim + k.dim != alg.dim:
        raise EngelClosureError("eigenvalue split", (s, k))
    for space in (s, k):
        for row in space.rows():
            if not space.contains_vector(q.mat_vec(row)):
                raise EngelClosureError("eigenvalue split stability", row)
    defect = subalgebra_defect(alg, s)
    if defect is not None:
        raise EngelClosureError("eigenvalue part", defect)
    return SplitPair(tuple(a), AlgebraSubspace(alg, s, VERIFIED_SUBALGEBRA), k)


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------


def check_pa_bracket_identity(alg: PoissonAlgebra, a, x, y, n: int) -> tuple:
    """Residual of P_a^n([x,y]) = [P_a^n(x), y] - n P_a^{n-1}(x) . [y, a].

    Identically zero in a valid Poisson algebra; n = 1 is the compatibility
    identity itself rearranged.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f = alg.field
    p = alg.p_operator(a)
    pn = p.pow(n)
    pn1 = p.pow(n - 1)
    lhs = pn.mat_vec(alg.mul_bracket(x, y))
    rhs = alg.mul_bracket(pn.mat_vec(x), y)
    correction = vec_scale(f, f.from_int(n),
                           alg.mul_dot(pn1.mat_vec(x), alg.mul_bracket(y, a)))
    return vec_sub(f, lhs, vec_sub(f, rhs, correction))


def check_qa_derivation_power(alg: PoissonAlgebra, a, x, y, r: int) -> tuple:
    """Residual of Q_a^r(x.y) = sum_i C(r,i) Q_a^i(x) . Q_a^{r-i}(y).

    The bracket operator acts as a derivation of the dot, so its powers obey
    the binomial expansion; the binomial coefficients are reduced into the
    field.  Identically zero in a valid Poisson algebra.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    f = alg.field
    q = alg.q_operator(a)
    powers = [Matrix.identity(f, alg.dim)]
    for _ in range(r):
        powers.append(powers[-1].matmul(q))
    lhs = powers[r].mat_vec(alg.mul_dot(x, y))
    rhs = alg.zero_element()
    for i in range(r + 1):
        coeff = f.from_int(math.comb(r, i))
        term = alg.mul_dot(powers[i].mat_vec(x), powers[r - i].mat_vec(y))
        rhs = tuple(f.add(u, f.mul(coeff, v)) for u, v in zip(rhs, term))
    return vec_sub(f, lhs, rhs)


def fitting_split_holds(alg: PoissonAlgebra, a) -> bool:
    """fitting_null(P_a) and fitting_one(P_a) are complementary, likewise for
    Q_a; the decomposition used to force Engel subalgebras to be everything."""
    for op in (alg.p_operator(a), alg.q_operator(a)):
        null = fitting_null(op)
        one_ = image(op.pow(alg.dim))
        if null.dim + one_.dim != alg.dim:
            return False
        if not subspace_intersect(null, one_).is_zero():
            return False
        if subspace_sum(null, one_).dim != alg.dim:
            return False
    return True
