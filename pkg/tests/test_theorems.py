import json

import pytest

from palg.algebra import PoissonAlgebra, subspace_product_dot, tensors_from_maps
from palg.corpus import (
    curated_corpus,
    heisenberg_zero_dot,
    idempotent_line,
    two_dim_nonabelian,
    xyz_algebra,
    zero_algebra,
)
from palg.fields import FieldSpec
from palg.lattice import LatticeBudget
from palg.linalg import Subspace
from palg.theorems import (
    NOT_APPLICABLE,
    PASS,
    REGISTRY,
    REGISTRY_IDS,
    check_one,
    run_suite,
    summarise,
)

GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
GF5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()

# the complete list of numbered statements with executable content; the
# proofs themselves, and externally imported facts used inside them, have no
# entries, and Def-1.1 carries the axioms of the structure itself
EXPECTED_IDS = (
    "Def-1.1",
    "Lemma-2.1", "Lemma-2.2", "Lemma-2.3", "Prop-2.4", "Thm-2.6", "Cor-2.7",
    "Prop-2.8", "Lemma-2.9", "Lemma-2.11", "Lemma-2.13", "Lemma-2.15",
    "Lemma-3.2", "Lemma-3.3", "Lemma-3.4", "Thm-3.5", "Lemma-3.6", "Lemma-3.7",
    "Thm-4.2", "Cor-4.3", "Thm-4.5", "Thm-4.6", "Thm-4.7", "Cor-4.8",
    "Thm-4.9", "Lemma-4.10", "Thm-4.11",
)


def test_registry_is_complete_and_minimal():
    assert REGISTRY_IDS == EXPECTED_IDS
    assert len({c.id for c in REGISTRY}) == len(REGISTRY)


def test_check_one_against_named_algebras():
    res = check_one("Thm-4.9", heisenberg_zero_dot(GF2))
    assert res.status == PASS and res.exercised == 1
    res = check_one("Thm-4.11", idempotent_line(GF2))
    assert res.status == PASS and "Fe-plus-N" in res.detail
    res = check_one("Cor-2.7", zero_algebra(GF2, 2))
    assert res.status == NOT_APPLICABLE
    res = check_one("Cor-2.7", zero_algebra(Q, 2).with_meta({
        "radical": [["1", "0"], ["0", "1"]], "nilradical": [["1", "0"], ["0", "1"]]}))
    assert res.status == PASS
    with pytest.raises(KeyError):
        check_one("Thm-9.9", zero_algebra(GF2, 1))
    with pytest.raises(ValueError):
        check_one("Thm-3.5", zero_algebra(GF2, 1))


def test_pair_check_on_direct_sums():
    res = check_one("Thm-3.5", (heisenberg_zero_dot(GF2), two_dim_nonabelian(GF2)))
    assert res.status == PASS


def test_suite_over_zero_corpus_all_pass():
    corpus = [zero_algebra(GF2, n) for n in range(1, 4)]
    results = run_suite(corpus)
    counts = summarise(results)
    assert counts["fail"] == 0
    assert counts["pass"] > 0


def test_vacuous_passes_are_flagged():
    # the idempotent line is not solvable, so the flag-square check is vacuous
    res = check_one("Prop-2.8", idempotent_line(GF2))
    assert res.status == PASS and res.exercised == 0


def test_not_applicable_over_rationals_for_lattice_checks():
    res = check_one("Thm-4.5", zero_algebra(Q, 2))
    assert res.status == NOT_APPLICABLE


def test_budget_overrun_is_reported_not_raised():
    res = check_one("Thm-4.5", zero_algebra(GF2, 3), budget=LatticeBudget(max_dim=2))
    assert res.status == NOT_APPLICABLE and "max_dim" in res.detail


def test_metadata_driven_q_checks():
    s = two_dim_nonabelian(Q).with_meta({
        "radical": [["1", "0"], ["0", "1"]],
        "nilradical": [["1", "0"]],
        "phi_free": True,
        "complement": [["0", "1"]],
    })
    for check_id in ("Thm-2.6", "Cor-2.7", "Lemma-2.9", "Thm-4.7"):
        res = check_one(check_id, s)
        assert res.status == PASS, (check_id, res.detail)
    assert "dot-square" in check_one("Thm-4.7", s).detail


# ---------------------------------------------------------------------------
# negative controls: violating tensors must make checks fail with witnesses
# ---------------------------------------------------------------------------


def _broken(field, dim, dot_entries, bracket_entries, symmetrise=True):
    if symmetrise:
        tensors = tensors_from_maps(field, dim, dot_entries, bracket_entries)
        return PoissonAlgebra(field, dim, tensors.dot, tensors.bracket, name="broken")
    z = field.zero()
    dot = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), c in dot_entries.items():
        dot[i][j][k] = field.coerce(c)
    bracket = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), c in bracket_entries.items():
        bracket[i][j][k] = field.coerce(c)
    freeze = lambda t: tuple(tuple(tuple(l) for l in p) for p in t)
    return PoissonAlgebra(field, dim, freeze(dot), freeze(bracket), name="broken")


AXIOM_VIOLATORS = {
    "commutativity": _broken(GF3, 2, {(0, 1, 0): 1}, {}, symmetrise=False),
    "associativity": _broken(GF3, 2, {(0, 1, 0): 1}, {}),
    "alternating": _broken(GF3, 2, {}, {(0, 0, 1): 1}, symmetrise=False),
    "jacobi": _broken(GF5, 3, {}, {(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 0): -1}),
    "leibniz": xyz_algebra(GF5, allow_invalid=True),
}


@pytest.mark.parametrize("axiom", sorted(AXIOM_VIOLATORS))
def test_each_axiom_violator_fails_at_least_one_check(axiom):
    from palg.algebra import evaluate_axiom
    from palg.linalg import vec_is_zero
    alg = AXIOM_VIOLATORS[axiom]
    budget = LatticeBudget(max_q=5)
    results = run_suite([alg], budget=budget)
    failures = [r for r in results if r.status == "fail"]
    assert failures, f"no check failed for the {axiom} violator"
    axiom_failures = [r for r in failures if r.theorem == "Def-1.1"]
    assert axiom_failures and axiom_failures[0].witness["axiom"] == axiom
    witness = axiom_failures[0].witness
    residual = evaluate_axiom(alg, witness["axiom"], tuple(witness["indices"]))
    assert [alg.field.format_scalar(x) for x in residual] == witness["residual"]
    assert not vec_is_zero(residual)


def test_leibniz_violator_breaks_a_genuine_theorem():
    bad = xyz_algebra(GF5, allow_invalid=True)
    budget = LatticeBudget(max_q=5)
    results = run_suite([bad], budget=budget)
    by_id = {r.theorem: r for r in results}
    res = by_id["Lemma-2.11"]
    assert res.status == "fail"
    witness = res.witness
    # re-evaluate: the witnessed product escapes the witnessed subspace
    f = bad.field
    parse_vec = lambda v: tuple(f.parse_scalar(x) for x in v)
    space = Subspace.from_vectors(f, bad.dim,
                                  [parse_vec(r) for r in witness["engel_space"]["basis"]])
    x, y = parse_vec(witness["x"]), parse_vec(witness["y"])
    product = bad.mul_dot(x, y) if witness["product_kind"] == "dot" else bad.mul_bracket(x, y)
    assert product == parse_vec(witness["product"])
    assert space.contains_vector(x) and space.contains_vector(y)
    assert not space.contains_vector(product)


def test_xyz_structure_constants_have_the_advertised_shape_anyway():
    # the discovery machinery still reports the intended radical/nilradical
    # shape on the inconsistent tensors; only validation separates them
    from palg.lattice import nilradical, radical
    bad = xyz_algebra(GF5, allow_invalid=True)
    budget = LatticeBudget(max_q=5)
    rad = radical(bad, budget)
    nil = nilradical(bad, budget)
    assert rad.is_full()
    assert nil == Subspace.from_vectors(GF5, 3, [[1, 0, 0], [0, 0, 1]])
    square = subspace_product_dot(bad, rad, rad)
    assert square == Subspace.from_vectors(GF5, 3, [[0, 0, 1]])


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------


def test_suite_is_deterministic_across_jobs():
    corpus = curated_corpus()[:8]
    one = run_suite(corpus, jobs=1)
    four = run_suite(corpus, jobs=4)
    assert [r.to_json() for r in one] == [r.to_json() for r in four]
    again = run_suite(corpus, jobs=1)
    assert json.dumps([r.to_json() for r in one]) == json.dumps([r.to_json() for r in again])


def test_duplicate_names_are_disambiguated():
    corpus = [zero_algebra(GF2, 1), zero_algebra(GF2, 1)]
    results = run_suite(corpus, theorem_filter="Prop-2.4")
    assert len({r.algebra for r in results}) == 2
