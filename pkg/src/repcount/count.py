"""Counting equivalence classes once they are known to be finite.

Distinct classes of n-dimensional irreducible representations correspond
bijectively to distinct trace vectors (character-zero semisimple modules
with equal traces are isomorphic), so the count is the number of closed
points, over the algebraic closure, of the subalgebra generated by the
trace generators inside the quotient by the locus ideal.  For a finite
dimensional commutative algebra in characteristic zero that number equals
the rank of the trace form Tr(ab) of the regular representation: the form
kills nilpotents and each point contributes exactly one to the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .decide import Outcome, PipelineRun
from .genmat import TraceGenerator
from .groebner import Budget, GroebnerBasis, ResourceLimitExceeded
from .linalg import PolyEchelon, matrix_rank
from .poly import Polynomial


class InfiniteRepresentations(Exception):
    """Raised when a count is requested but the class set is infinite."""


@dataclass(frozen=True)
class FiniteDimAlgebra:
    """The trace subalgebra of the coordinate ring modulo the locus ideal,
    with a linear basis (basis[0] is the unit) and structure constants
    basis[i]*basis[j] = sum_l structure[i][j][l]*basis[l]."""

    basis: tuple
    structure: tuple  # structure[i][j] is a dict {l: Fraction}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def multiplication_matrix(self, i: int):
        """Matrix of multiplication by basis[i], rows indexed by target."""
        d = self.dimension
        rows = [[Fraction(0)] * d for _ in range(d)]
        for k in range(d):
            for l, c in self.structure[i][k].items():
                rows[l][k] = c
        return tuple(tuple(r) for r in rows)

    def regular_trace(self, i: int) -> Fraction:
        return sum((self.structure[i][k].get(k, Fraction(0))
                    for k in range(self.dimension)), Fraction(0))


def build_quotient_algebra(locus: GroebnerBasis, generators: Sequence[TraceGenerator],
                           limits=None, max_dim: int = 4096) -> FiniteDimAlgebra:
    """Close the span of 1 under multiplication by the trace generators.

    Generators whose normal form is a constant cannot enlarge the span and
    are skipped.  The closure terminates exactly when every generator is
    algebraic modulo the locus ideal; max_dim is a safety valve against
    being called on an infinite family.
    """
    budget = Budget.of(limits)
    ring = locus.ring
    if locus.is_unit:
        raise ValueError("the locus ideal is the unit ideal; the algebra is zero")
    images = []
    for tg in generators:
        nf = locus.normal_form(tg.value, budget)
        if not nf.is_constant:
            images.append(nf)
    echelon = PolyEchelon()
    echelon.insert(ring.one)
    basis = [ring.one]
    frontier = 0
    while frontier < len(basis):
        element = basis[frontier]
        frontier += 1
        for g in images:
            budget.tick()
            product = locus.normal_form(element * g, budget)
            status, _ = echelon.insert(product)
            if status == "added":
                basis.append(product)
                if len(basis) > max_dim:
                    raise ResourceLimitExceeded(
                        "basis", "quotient algebra dimension exceeded %d" % max_dim)
    structure = []
    for a in basis:
        row = []
        for b in basis:
            budget.tick()
            combo = echelon.express(locus.normal_form(a * b, budget))
            if combo is None:
                raise RuntimeError("closure failure: product escaped the span")
            row.append({l: c for l, c in combo.items() if c})
        structure.append(tuple(row))
    return FiniteDimAlgebra(tuple(basis), tuple(structure))


@dataclass(frozen=True)
class TraceFormReport:
    gram: tuple  # tuple of tuples of Fraction
    rank: int


def trace_form(algebra: FiniteDimAlgebra) -> TraceFormReport:
    """Gram matrix Tr(b_i b_j) of the regular-representation trace form."""
    d = algebra.dimension
    traces = [algebra.regular_trace(l) for l in range(d)]
    gram = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(sum((c * traces[l] for l, c in algebra.structure[i][j].items()),
                           Fraction(0)))
        gram.append(tuple(row))
    gram = tuple(gram)
    return TraceFormReport(gram, matrix_rank(gram))


@dataclass(frozen=True)
class CountReport:
    count: int
    algebra_dimension: int
    gram: tuple
    rank: int


def count_classes(locus: GroebnerBasis, generators: Sequence[TraceGenerator],
                  limits=None, max_dim: int = 4096) -> CountReport:
    """Exact number of classes over the algebraic closure.

    The unit locus ideal means no irreducible representation exists at all.
    Otherwise the rank of the trace form is the point count; a proper locus
    ideal always admits at least one irreducible point, so the result is
    then at least 1.
    """
    if locus.is_unit:
        return CountReport(0, 0, (), 0)
    algebra = build_quotient_algebra(locus, generators, limits, max_dim)
    report = trace_form(algebra)
    return CountReport(report.rank, algebra.dimension, report.gram, report.rank)


def count_from_run(run: PipelineRun, limits=None) -> CountReport:
    """Count for a finished decision run; refuses infinite or unsettled runs."""
    verdict = run.verdict
    if verdict.outcome is Outcome.INFINITE:
        witness = verdict.witness.render() if verdict.witness else "unknown"
        raise InfiniteRepresentations(
            "infinitely many classes (witness %s)" % witness)
    if verdict.outcome is Outcome.INCONCLUSIVE or run.locus_basis is None:
        raise ResourceLimitExceeded(
            "time", verdict.inconclusive_reason or "decision did not complete")
    report = count_classes(run.locus_basis, run.generators,
                           limits or run.input.options.limits)
    verdict.metrics.algebra_dimension = report.algebra_dimension
    verdict.metrics.gram_rank = report.rank
    return report
