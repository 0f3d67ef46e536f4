import random

import pytest

from palg.corpus import (
    fe_plus_nilpotent_line,
    heisenberg_zero_dot,
    idempotent_line,
    rotation3,
    two_dim_nonabelian,
    xyz_algebra,
    zero_algebra,
)
from palg.engel import (
    check_pa_bracket_identity,
    check_qa_derivation_power,
    engel,
    fitting_split_holds,
    s_k_split,
    split_polynomial,
)
from palg.fields import FieldSpec
from palg.linalg import Subspace, char_poly, fitting_null, image, vec_is_zero

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


def span(alg, *vecs):
    return Subspace.from_vectors(alg.field, alg.dim, [alg.element(v) for v in vecs])


# ---------------------------------------------------------------------------
# Engel pairs
# ---------------------------------------------------------------------------


def test_engel_of_zero_element_is_everything():
    h = heisenberg_zero_dot(Q)
    pair = engel(h, h.zero_element())
    assert pair.engel_assoc.space.is_full()
    assert pair.engel_lie.space.is_full()


def test_engel_of_idempotent():
    alg = idempotent_line(GF3)
    pair = engel(alg, alg.basis_element(0))
    assert pair.engel_assoc.space.is_zero()   # left multiplication is invertible
    assert pair.engel_lie.space.is_full()     # the bracket operator vanishes


def test_engel_lie_in_two_dim_nonabelian():
    s = two_dim_nonabelian(Q)
    pair = engel(s, s.element((0, 1)))
    assert pair.engel_lie.space == span(s, (0, 1))
    assert pair.engel_assoc.space.is_full()
    assert pair.engel_lie.verified == "subalgebra"


def test_engel_spaces_are_subalgebras_for_many_elements():
    fe = fe_plus_nilpotent_line(GF3)
    for coords in [(a, b) for a in range(3) for b in range(3)]:
        pair = engel(fe, fe.element(coords))
        assert pair.engel_assoc.verified == "subalgebra"
        assert pair.engel_lie.verified == "subalgebra"


def test_fitting_split_holds_on_corpus_members():
    for alg in (heisenberg_zero_dot(GF3), fe_plus_nilpotent_line(GF3),
                two_dim_nonabelian(Q), rotation3(Q)):
        for i in range(alg.dim):
            assert fitting_split_holds(alg, alg.basis_element(i))


# ---------------------------------------------------------------------------
# eigenvalue splits
# ---------------------------------------------------------------------------


def test_split_of_zero_element():
    h = heisenberg_zero_dot(Q)
    pair = s_k_split(h, h.zero_element())
    assert pair.s_part.space.is_full()
    assert pair.k_part.is_zero()


def test_full_rational_spectrum_gives_everything():
    s = two_dim_nonabelian(Q)
    pair = s_k_split(s, s.element((0, 1)))
    assert pair.s_part.space.is_full()
    assert pair.k_part.is_zero()


def test_rotation_block_splits_off_its_axis():
    rot = rotation3(Q)
    a = rot.basis_element(0)
    q = rot.q_operator(a)
    assert char_poly(q) == tuple(map(Q.coerce, (1, 0, 1, 0)))  # t^3 + t
    pair = s_k_split(rot, a)
    assert pair.s_part.space == fitting_null(q)
    assert pair.s_part.space == span(rot, (1, 0, 0))
    assert pair.k_part == image(q)
    assert pair.k_part == span(rot, (0, 1, 0), (0, 0, 1))


def test_split_polynomial_collects_multiplicities():
    rot = rotation3(Q)
    assert split_polynomial(rot, rot.basis_element(0)) == (Q.one(), Q.zero())  # f(t) = t
    h = heisenberg_zero_dot(Q)
    assert split_polynomial(h, h.element((1, 0, 0))) == \
        tuple(map(Q.coerce, (1, 0, 0, 0)))  # t^3: eigenvalue 0 with multiplicity 3


def test_split_over_gf5_with_spread_spectrum():
    # diag-like bracket action with eigenvalues 0, -1, -2 all in GF(5)
    from palg.corpus import lie_zero_dot
    alg = lie_zero_dot(GF5, 3, {(0, 1, 1): 4, (0, 2, 2): 3},
                       basis_labels=("a", "u", "v"))
    pair = s_k_split(alg, alg.basis_element(0))
    assert pair.s_part.space.is_full() and pair.k_part.is_zero()


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------

CORPUS = [
    zero_algebra(GF2, 3),
    heisenberg_zero_dot(GF3),
    two_dim_nonabelian(GF5),
    fe_plus_nilpotent_line(GF3),
    fe_plus_nilpotent_line(Q),
    rotation3(Q),
]


def _random_element(alg, rng):
    if alg.field.is_finite:
        return tuple(alg.field.from_int(rng.randrange(alg.field.order))
                     for _ in range(alg.dim))
    return tuple(alg.field.coerce(rng.randint(-3, 3)) for _ in range(alg.dim))


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_bracket_power_identity_vanishes(alg):
    rng = random.Random(20240 + alg.dim)
    for _ in range(60):
        a, x, y = (_random_element(alg, rng) for _ in range(3))
        n = rng.randint(1, 4)
        assert vec_is_zero(check_pa_bracket_identity(alg, a, x, y, n))


@pytest.mark.parametrize("alg", CORPUS, ids=lambda a: a.name)
def test_derivation_power_identity_vanishes(alg):
    rng = random.Random(40813 + alg.dim)
    for _ in range(60):
        a, x, y = (_random_element(alg, rng) for _ in range(3))
        r = rng.randint(0, 4)
        assert vec_is_zero(check_qa_derivation_power(alg, a, x, y, r))


def test_identity_reduces_to_leibniz_at_order_one():
    fe = fe_plus_nilpotent_line(Q)
    x, y = fe.element((1, 2)), fe.element((0, 1))
    a = fe.element((1, 1))
    assert vec_is_zero(check_pa_bracket_identity(fe, a, x, y, 1))
    assert vec_is_zero(check_qa_derivation_power(fe, a, x, y, 1))
    assert vec_is_zero(check_qa_derivation_power(fe, a, x, y, 0))


def test_identities_fail_on_incompatible_tensors():
    bad = xyz_algebra(GF5, allow_invalid=True)
    x, y = bad.basis_element(0), bad.basis_element(1)
    assert not vec_is_zero(check_pa_bracket_identity(bad, x, y, x, 1))


def test_identity_argument_guards():
    h = heisenberg_zero_dot(Q)
    z = h.zero_element()
    with pytest.raises(ValueError):
        check_pa_bracket_identity(h, z, z, z, 0)
    with pytest.raises(ValueError):
        check_qa_derivation_power(h, z, z, z, -1)
