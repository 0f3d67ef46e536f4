"""Algebras where the dot and bracket genuinely interact, unlike the
zero-dot or zero-bracket corpus members.  Two families:

* Heisenberg bracket with a dual-number dot: x.x = z and [x, y] = z.  Both
  multiplications feed the same one-dimensional centre.
* A unital idempotent over a solvable Lie part: e.e = e, e.x = x, e.y = y,
  [x, y] = x.  The compatibility identity forces [e, -] = 0 and bars any
  e-component in the bracket, which pins the structure.
"""

import pytest

from palg.algebra import subspace_product_dot, tensors_from_maps, validate
from palg.fields import FieldSpec
from palg.lattice import (
    classify_max_ideal_property,
    frattini,
    nilradical,
    oracle_nilradical,
    oracle_radical,
    radical,
)
from palg.linalg import Subspace
from palg.series import derived_series, is_nilpotent, is_solvable, nilpotency_class
from palg.theorems import run_suite, summarise

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
Q = FieldSpec.rationals()


def heisenberg_dual_dot(field):
    """x.x = z with [x, y] = z: valid because [x, -] and [y, -] only ever
    reach the dot-central element z."""
    return validate(tensors_from_maps(field, 3, {(0, 0, 2): 1}, {(0, 1, 2): 1}),
                    name=f"heis-dual-{field}", basis_labels=("x", "y", "z"))


def unital_over_solvable(field):
    """e acts as the identity on everything, the bracket lives on span(x, y)."""
    dot = {(0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1}
    return validate(tensors_from_maps(field, 3, dot, {(1, 2, 1): 1}),
                    name=f"unital-solv-{field}", basis_labels=("e", "x", "y"))


def span(alg, *vecs):
    return Subspace.from_vectors(alg.field, alg.dim, [alg.element(v) for v in vecs])


@pytest.mark.parametrize("field", [GF2, GF3, Q], ids=str)
def test_heisenberg_dual_dot_structure(field):
    alg = heisenberg_dual_dot(field)
    assert is_nilpotent(alg) and nilpotency_class(alg) == 2
    if field.is_finite:
        f_space, phi = frattini(alg)
        assert phi == span(alg, (0, 0, 1))
        assert classify_max_ideal_property(alg).kind == "nilpotent"
        assert radical(alg).is_full() and nilradical(alg).is_full()


@pytest.mark.parametrize("field", [GF2, GF3, Q], ids=str)
def test_unital_over_solvable_structure(field):
    alg = unital_over_solvable(field)
    assert not is_solvable(alg)
    assert derived_series(alg).stabilised.is_full()
    if field.is_finite:
        rad = radical(alg)
        assert rad == span(alg, (0, 1, 0), (0, 0, 1)) == oracle_radical(alg)
        nil = nilradical(alg)
        assert nil == span(alg, (0, 1, 0)) == oracle_nilradical(alg)
        # the dot square of the radical vanishes inside the nilradical
        assert nil.contains(subspace_product_dot(alg, rad, rad))


def test_compatibility_rules_out_e_components_in_the_bracket():
    # with a unital idempotent, [x, y] = e is impossible
    dot = {(0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1}
    from palg.algebra import AxiomViolation
    with pytest.raises(AxiomViolation):
        validate(tensors_from_maps(Q, 3, dot, {(1, 2, 0): 1}))


def test_suite_is_clean_on_mixed_structures():
    corpus = [heisenberg_dual_dot(f) for f in (GF2, GF3, Q)]
    corpus += [unital_over_solvable(f) for f in (GF2, GF3, Q)]
    results = run_suite(corpus)
    counts = summarise(results)
    assert counts["fail"] == 0
    assert counts["pass"] > 100
