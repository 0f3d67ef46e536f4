"""Descending series and the solvability / nilpotency predicates read off them.

Six series kinds are supported: the two-multiplication derived and lower
central series, and the four single-multiplication variants.  A series is
computed until it repeats; the report's last two terms are equal unless the
last term is zero.  All series accept an optional starting subspace so they
double as series of subalgebras in ambient coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import (
    PoissonAlgebra,
    quotient_maps,
    preimage_subspace,
    subspace_product_bracket,
    subspace_product_dot,
    subspace_square,
)
from .linalg import Matrix, Subspace, kernel, roots_in_field, char_poly, subspace_intersect, subspace_sum

DERIVED = "derived"
LOWER_CENTRAL = "lower-central"
ASSOC_DERIVED = "assoc-derived"
ASSOC_LOWER = "assoc-lower"
LIE_DERIVED = "lie-derived"
LIE_LOWER = "lie-lower"

SERIES_KINDS = (DERIVED, LOWER_CENTRAL, ASSOC_DERIVED, ASSOC_LOWER, LIE_DERIVED, LIE_LOWER)


class SeriesConsistencyError(RuntimeError):
    """The one-step lower-central recursion disagreed with the full sum.

    For a genuine Poisson algebra the two formulas provably agree, so this
    firing means the input tensors violate the compatibility identity; the
    offending step and both subspaces ride along as a witness.
    """

    def __init__(self, step: int, full: Subspace, shortcut: Subspace):
        self.step = step
        self.full = full
        self.shortcut = shortcut
        super().__init__(f"lower central series inconsistent at step {step}")


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    terminates: bool
    step: int

    @property
    def stabilised(self) -> Subspace:
        return self.terms[-1]


def _run_series(kind: str, start: Subspace, step_fn: Callable) -> SeriesReport:
    terms = [start]
    while True:
        current = terms[-1]
        if current.is_zero():
            return SeriesReport(kind, tuple(terms), True, len(terms) - 1)
        nxt = step_fn(terms)
        if nxt == current:
            terms.append(nxt)
            return SeriesReport(kind, tuple(terms), False, len(terms) - 2)
        terms.append(nxt)


def derived_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    """A^(n+1) = A^(n).A^(n) + [A^(n), A^(n)] until stabilisation."""
    start = start if start is not None else alg.full_space()
    return _run_series(DERIVED, start, lambda terms: subspace_square(alg, terms[-1]))


def lower_central_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    """A^{n+1} as the full convolution sum, cross-checked against the
    single-step product A^n.A + [A^n, A] valid for Poisson algebras."""
    start = start if start is not None else alg.full_space()

    def step(terms):
        whole = terms[0]
        last = terms[-1]
        shortcut = subspace_sum(subspace_product_dot(alg, last, whole),
                                subspace_product_bracket(alg, last, whole))
        full = shortcut
        for i in range(len(terms) - 1):
            a, b = terms[i], terms[len(terms) - 1 - i]
            full = subspace_sum(full, subspace_product_dot(alg, a, b))
            full = subspace_sum(full, subspace_product_bracket(alg, a, b))
        if full != shortcut:
            raise SeriesConsistencyError(len(terms) + 1, full, shortcut)
        return shortcut

    return _run_series(LOWER_CENTRAL, start, step)


def assoc_derived_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    start = start if start is not None else alg.full_space()
    return _run_series(ASSOC_DERIVED, start,
                       lambda terms: subspace_product_dot(alg, terms[-1], terms[-1]))


def assoc_lower_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    start = start if start is not None else alg.full_space()
    return _run_series(ASSOC_LOWER, start,
                       lambda terms: subspace_product_dot(alg, terms[-1], terms[0]))


def lie_derived_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    start = start if start is not None else alg.full_space()
    return _run_series(LIE_DERIVED, start,
                       lambda terms: subspace_product_bracket(alg, terms[-1], terms[-1]))


def lie_lower_series(alg: PoissonAlgebra, start: Subspace | None = None) -> SeriesReport:
    start = start if start is not None else alg.full_space()
    return _run_series(LIE_LOWER, start,
                       lambda terms: subspace_product_bracket(alg, terms[-1], terms[0]))


def assoc_series(alg: PoissonAlgebra) -> tuple:
    """(derived, lower central) for the dot multiplication alone."""
    return assoc_derived_series(alg), assoc_lower_series(alg)


def lie_series(alg: PoissonAlgebra) -> tuple:
    """(derived, lower central) for the bracket alone."""
    return lie_derived_series(alg), lie_lower_series(alg)


def series_by_kind(alg: PoissonAlgebra, kind: str, start: Subspace | None = None) -> SeriesReport:
    table = {
        DERIVED: derived_series,
        LOWER_CENTRAL: lower_central_series,
        ASSOC_DERIVED: assoc_derived_series,
        ASSOC_LOWER: assoc_lower_series,
        LIE_DERIVED: lie_derived_series,
        LIE_LOWER: lie_lower_series,
    }
    if kind not in table:
        raise ValueError(f"unknown series kind {kind!r}")
    return table[kind](alg, start)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_solvable(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return derived_series(alg, start).terminates


def is_nilpotent(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return lower_central_series(alg, start).terminates


def is_assoc_solvable(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return assoc_derived_series(alg, start).terminates


def is_assoc_nilpotent(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return assoc_lower_series(alg, start).terminates


def is_lie_solvable(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return lie_derived_series(alg, start).terminates


def is_lie_nilpotent(alg: PoissonAlgebra, start: Subspace | None = None) -> bool:
    return lie_lower_series(alg, start).terminates


def derived_length(alg: PoissonAlgebra, start: Subspace | None = None) -> int | None:
    report = derived_series(alg, start)
    return report.step if report.terminates else None


def nilpotency_class(alg: PoissonAlgebra, start: Subspace | None = None) -> int | None:
    report = lower_central_series(alg, start)
    return report.step if report.terminates else None


# ---------------------------------------------------------------------------
# supersolvability
# ---------------------------------------------------------------------------


def is_supersolvable(alg: PoissonAlgebra) -> tuple:
    """Search for a full flag of ideals, one per dimension.

    Any one-dimensional ideal is spanned by a common eigenvector of all the
    left multiplication operators, so candidates are found by intersecting
    one eigenspace per operator, pruning as soon as the running intersection
    dies.  Quotienting by a found line and pulling the rest of the flag back
    is complete: every quotient of a flag algebra again has a full flag.
    Returns (verdict, flag) where the flag lists the ideals by dimension.
    """
    if alg.dim == 0:
        return True, ()
    line = _common_eigenline(alg)
    if line is None:
        return False, ()
    data = quotient_maps(alg, line)
    ok, qflag = is_supersolvable(data.algebra)
    if not ok:
        return False, ()
    flag = [line] + [preimage_subspace(data, w) for w in qflag]
    return True, tuple(flag)


def _common_eigenline(alg: PoissonAlgebra) -> Subspace | None:
    ops = [alg.p_operator(alg.basis_element(i)) for i in range(alg.dim)]
    ops += [alg.q_operator(alg.basis_element(i)) for i in range(alg.dim)]
    field = alg.field
    full = alg.full_space()

    def search(k: int, space: Subspace) -> Subspace | None:
        if space.is_zero():
            return None
        if k == len(ops):
            vec = space.rows()[0]
            return Subspace.from_vectors(field, alg.dim, [vec])
        matrix = ops[k]
        eigenvalues = [root for root, _ in roots_in_field(field, char_poly(matrix))]
        ident = Matrix.identity(field, alg.dim)
        for value in eigenvalues:
            eigenspace = kernel(matrix.sub(ident.scale(value)))
            candidate = subspace_intersect(space, eigenspace)
            found = search(k + 1, candidate)
            if found is not None:
                return found
        return None

    return search(0, full)
