"""Deciding finiteness of the set of n-dimensional irreducible representations.

The pipeline: build the generic matrix space, the relations ideal, and the
irreducibility certificates; saturate the relations ideal at the certificates
to get the ideal of the closed set swept out by irreducible representations
(the "locus ideal"); then test each trace-ring generator for algebraicity
modulo that ideal.  All generators algebraic means finitely many equivalence
classes; a transcendental one is a witness to infinitely many.

Certificates are collapsed to normal forms against the relations ideal before
the saturation: entries of word products are reduced as the products are
formed, which keeps the intermediate polynomials small, and the multiplier
set is then shrunk to a Groebner basis of what the certificates add to the
relations ideal.  None of this changes the saturated ideal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .genmat import (
    GenericMatrixSpace,
    IrreducibilitySet,
    TraceGenerator,
    _all_words,
    build_generic_space,
    irreducibility_set,
    length_bound,
    relations_ideal,
    trace_generators,
)
from .groebner import (
    Budget,
    GroebnerBasis,
    Ideal,
    ResourceLimitExceeded,
    ResourceLimits,
    buchberger,
    ideal_quotient,
    intersect,
    saturate_principal,
)
from .linalg import PolyEchelon
from .matrices import Matrix, trace_of_product
from .poly import MonomialOrder, Polynomial, base_order
from .presentation import Presentation


DEFAULT_LIMITS = ResourceLimits(max_seconds=300.0, max_degree=60, max_basis=20000)


@dataclass(frozen=True)
class RunOptions:
    quotient_mode: str = "saturate"  # "saturate" | "single"
    order: str = "grevlex"  # base order for non-elimination bases
    limits: ResourceLimits = DEFAULT_LIMITS
    length_bound_override: int | None = None
    threads: int = 1  # accepted cap; the current engine is sequential

    def __post_init__(self):
        if self.quotient_mode not in ("saturate", "single"):
            raise ValueError("quotient mode must be 'saturate' or 'single'")
        if self.order not in ("lex", "grevlex"):
            raise ValueError("order must be 'lex' or 'grevlex'")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if self.length_bound_override is not None and self.length_bound_override < 0:
            raise ValueError("length bound override must be nonnegative")


@dataclass(frozen=True)
class DecisionInput:
    presentation: Presentation
    n: int
    options: RunOptions = RunOptions()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("representation dimension must be at least 1")


class Outcome(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MinimalPolynomial:
    """Monic univariate polynomial, coefficients ascending."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("minimal polynomials are monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x):
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def render(self, var: str = "y") -> str:
        chunks = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                head = var if k == 1 else "%s^%d" % (var, k)
                body = head if abs(c) == 1 else "%s*%s" % (abs(c), head)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)


@dataclass
class PipelineMetrics:
    n: int = 0
    s: int = 0
    variables: int = 0
    relation_generators: int = 0
    relations_gb_size: int = 0
    relations_gb_max_degree: int = 0
    word_length_bound: int | None = None
    certificate_candidates: int = 0
    certificate_values: int = 0
    multipliers: int = 0
    locus_gb_size: int | None = None
    locus_gb_max_degree: int | None = None
    trace_generator_count: int = 0
    algebra_dimension: int | None = None
    gram_rank: int | None = None
    timings: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "s": self.s,
            "variables": self.variables,
            "relation_generators": self.relation_generators,
            "relations_gb_size": self.relations_gb_size,
            "relations_gb_max_degree": self.relations_gb_max_degree,
            "word_length_bound": self.word_length_bound,
            "certificate_candidates": self.certificate_candidates,
            "certificate_values": self.certificate_values,
            "multipliers": self.multipliers,
            "locus_gb_size": self.locus_gb_size,
            "locus_gb_max_degree": self.locus_gb_max_degree,
            "trace_generator_count": self.trace_generator_count,
            "algebra_dimension": self.algebra_dimension,
            "gram_rank": self.gram_rank,
        }
        return out


@dataclass
class Verdict:
    outcome: Outcome
    witness: TraceGenerator | None = None
    minimal_polynomials: dict = field(default_factory=dict)  # rendered word -> MinimalPolynomial
    inconclusive_reason: str | None = None
    metrics: PipelineMetrics = field(default_factory=PipelineMetrics)


class _Stopwatch:
    def __init__(self):
        self.timings: dict = {}

    def stage(self, name: str):
        watch = self

        class _Ctx:
            def __enter__(self):
                self.t0 = time.perf_counter()
                return self

            def __exit__(self, *exc):
                watch.timings[name] = watch.timings.get(name, 0.0) + time.perf_counter() - self.t0
                return False

        return _Ctx()


# -- minimal polynomials ----------------------------------------------------


def minimal_polynomial(f: Polynomial, basis: GroebnerBasis, limits=None,
                       power_cap: int = 32, term_cap: int = 5000) -> MinimalPolynomial | None:
    """Monic generator of { p in Q[y] : p(f) lies in the ideal }, or None.

    Modulo the unit ideal everything is 0, so the answer is y by convention.
    A linear-algebra phase looks for a dependence among normal forms of
    powers of f (and certifies the minimal degree when it finds one); if the
    powers grow past the caps without a dependence, a block-order elimination
    settles algebraicity outright.
    """
    budget = Budget.of(limits)
    ring = basis.ring
    if basis.is_unit:
        return MinimalPolynomial((Fraction(0), Fraction(1)))
    nf = basis.normal_form(f, budget)
    if nf.is_constant:
        return MinimalPolynomial((-nf.constant_value(), Fraction(1)))

    echelon = PolyEchelon()
    echelon.insert(ring.one)
    power = ring.one
    for k in range(1, power_cap + 1):
        budget.tick()
        power = basis.normal_form(power * nf, budget)
        status, data = echelon.insert(power)
        if status == "dependent":
            coeffs = tuple(-data.get(i, Fraction(0)) for i in range(k)) + (Fraction(1),)
            return MinimalPolynomial(coeffs)
        if power.num_terms() > term_cap:
            break
        if budget.max_degree is not None and power.total_degree() > budget.max_degree:
            break

    y = ring.fresh_auxiliary("y")
    ext = ring.extended(y, top=False)
    gens = [ext.transfer(g) for g in basis.elements]
    gens.append(ext.variable(y) - ext.transfer(nf))
    order = MonomialOrder.elimination(tuple(range(ring.nvars())), ext.nvars())
    gb = buchberger(gens, order, budget, ring=ext)
    ypos = ext.position[y]
    univariate = [g for g in gb.elements if g.support_positions() <= {ypos}]
    if not univariate:
        return None
    if len(univariate) != 1:
        raise RuntimeError("reduced basis with two univariate elements")
    poly = univariate[0]
    degree = poly.total_degree()
    coeffs = [Fraction(0)] * (degree + 1)
    for mono, c in poly.terms.items():
        coeffs[mono[ypos]] = c
    return MinimalPolynomial(tuple(coeffs))


def is_algebraic(f: Polynomial, basis: GroebnerBasis, limits=None) -> bool:
    return minimal_polynomial(f, basis, limits) is not None


# -- certificate collapse and saturation ------------------------------------


def _nf_matrix(mat: Matrix, basis: GroebnerBasis, budget: Budget) -> Matrix:
    return mat.map(lambda e: basis.normal_form(e, budget))


def _nf_alternating(mats: Sequence[Matrix], basis: GroebnerBasis, budget: Budget,
                    dim: int) -> Matrix:
    """standard_identity with entrywise reduction after every product."""
    m = len(mats)
    acc = {frozenset(): Matrix.identity(dim)}
    for _ in range(m):
        nxt: dict = {}
        for used, mat in acc.items():
            for k in range(m):
                if k in used:
                    continue
                sign = (-1) ** sum(1 for r in range(k) if r not in used)
                term = _nf_matrix(mat * mats[k], basis, budget)
                if sign < 0:
                    term = -term
                key = used | {k}
                nxt[key] = term if key not in nxt else nxt[key] + term
        acc = nxt
    return acc[frozenset(range(m))]


def collapsed_certificate_values(space: GenericMatrixSpace, basis: GroebnerBasis,
                                 max_len: int, limits=None):
    """Normal forms of all certificates against the relations basis.

    Returns (values, candidates): distinct nonzero reduced certificates (up
    to sign) and the number of provenance tuples examined.  Equals reducing
    every member of the full certificate set, but word-product entries are
    reduced as they are built, so nothing large is ever materialized.
    """
    budget = Budget.of(limits)
    n, s = space.n, space.s
    m = 2 * (n - 1)
    words = _all_words(s, max_len)
    reduced_word_matrix: dict = {(): Matrix.identity(n, space.ring.one, space.ring.zero)}
    for w in words[1:]:
        prev = reduced_word_matrix[w[:-1]]
        reduced_word_matrix[w] = _nf_matrix(prev * space.matrices[w[-1]], basis, budget)
    values = []
    seen: set = set()
    candidates = 0
    for rest in combinations(words, m):
        budget.tick()
        alt = _nf_alternating([reduced_word_matrix[w] for w in rest], basis, budget, n)
        if alt.is_zero:
            candidates += len(words)
            continue
        for m0 in words:
            candidates += 1
            value = basis.normal_form(trace_of_product(reduced_word_matrix[m0], alt), budget)
            if value.is_zero:
                continue
            if value in seen or -value in seen:
                continue
            seen.add(value)
            values.append(value)
    return values, candidates


def _shrink_multipliers(relations_basis: GroebnerBasis, values: Sequence[Polynomial],
                        order: MonomialOrder, budget: Budget) -> list:
    """Replace the certificate values by a Groebner basis of what they add.

    The saturation only depends on the ideal the multipliers generate on top
    of the relations ideal, so generators of (relations + certificates) that
    do not lie in the relations ideal serve as a much smaller multiplier set.
    """
    if not values:
        return []
    gb_all = buchberger(list(relations_basis.elements) + list(values),
                        order, budget, ring=relations_basis.ring)
    return [g for g in gb_all.elements if not relations_basis.normal_form(g, budget).is_zero]


def saturated_locus(relations: Ideal, relations_basis: GroebnerBasis,
                    multipliers: Sequence[Polynomial], mode: str,
                    order: MonomialOrder, limits=None) -> GroebnerBasis:
    """Reduced basis of the locus ideal cut out by the certificates.

    mode "saturate": (relations : multipliers^infinity), as the intersection
    of single-multiplier saturations.  mode "single": one quotient step
    (relations : <multipliers>).  Empty multiplier set means no certificate
    survives anywhere on the variety, so the locus is empty: the unit ideal.
    """
    budget = Budget.of(limits)
    ring = relations.ring
    if relations_basis.is_unit:
        return relations_basis
    if not multipliers:
        return buchberger([ring.one], order, budget, ring=ring)
    acc: Ideal | None = None
    acc_gb: GroebnerBasis | None = None
    ordered = sorted(multipliers, key=lambda p: (p.total_degree(), p.num_terms()))
    for g in ordered:
        budget.tick()
        if mode == "single":
            part = ideal_quotient(relations, g, budget)
        else:
            part = saturate_principal(relations, g, budget)
        part_gb = buchberger(part, order, budget, ring=ring)
        if part_gb.is_unit:
            continue
        if acc_gb is None:
            acc, acc_gb = Ideal(ring, part_gb.elements), part_gb
            continue
        if all(part_gb.normal_form(h, budget).is_zero for h in acc_gb.elements):
            continue  # acc is already inside this part
        acc = intersect(acc, Ideal(ring, part_gb.elements), budget)
        acc_gb = buchberger(acc, order, budget, ring=ring)
        acc = Ideal(ring, acc_gb.elements)
    if acc_gb is None:
        return buchberger([ring.one], order, budget, ring=ring)
    return acc_gb


def irreducible_locus_ideal(relations: Ideal, certificates, mode: str = "saturate",
                            order: MonomialOrder | None = None, limits=None,
                            relations_basis: GroebnerBasis | None = None) -> GroebnerBasis:
    """Reduced basis of the saturation of the relations ideal at the
    certificate set (or of the single quotient step in mode "single").

    An empty certificate set, or one whose members all lie in the relations
    ideal, leaves no room for irreducible points: the result is the unit
    ideal.  With certificates == [1] (the 1-dimensional convention) the
    saturation is the relations ideal itself.
    """
    budget = Budget.of(limits)
    order = order or MonomialOrder.grevlex()
    if relations_basis is None:
        relations_basis = buchberger(relations, order, budget)
    if relations_basis.is_unit:
        return relations_basis
    if isinstance(certificates, IrreducibilitySet):
        polys: Iterable[Polynomial] = certificates.polynomials()
    else:
        polys = certificates
    values = []
    seen: set = set()
    empty = True
    for p in polys:
        empty = False
        nf = relations_basis.normal_form(p, budget)
        if nf.is_zero or nf in seen or -nf in seen:
            continue
        seen.add(nf)
        values.append(nf)
    if empty or not values:
        return buchberger([relations.ring.one], order, budget, ring=relations.ring)
    multipliers = _shrink_multipliers(relations_basis, values, order, budget)
    return saturated_locus(relations, relations_basis, multipliers, mode, order, budget)


# -- the pipeline -----------------------------------------------------------


@dataclass
class PipelineRun:
    input: DecisionInput
    space: GenericMatrixSpace
    relations: Ideal
    relations_basis: GroebnerBasis | None
    locus_basis: GroebnerBasis | None
    generators: tuple
    verdict: Verdict
    budget: Budget


def run_pipeline(decision_input: DecisionInput) -> PipelineRun:
    """Run decide end to end; resource overruns yield an inconclusive verdict."""
    opts = decision_input.options
    n = decision_input.n
    p = decision_input.presentation
    budget = Budget(opts.limits)
    order = base_order(opts.order)
    clock = _Stopwatch()
    metrics = PipelineMetrics(n=n, s=p.num_generators)

    space = build_generic_space(n, p.num_generators)
    metrics.variables = space.ring.nvars()
    verdict = Verdict(Outcome.INCONCLUSIVE, metrics=metrics)
    run = PipelineRun(decision_input, space, Ideal(space.ring), None, None, (), verdict, budget)

    try:
        with clock.stage("relations"):
            relations = relations_ideal(p, space)
            metrics.relation_generators = len(relations.generators)
            run.relations = relations
            relations_basis = buchberger(relations, order, budget)
            run.relations_basis = relations_basis
            metrics.relations_gb_size = len(relations_basis.elements)
            metrics.relations_gb_max_degree = relations_basis.max_degree()

        with clock.stage("certificates"):
            if n == 1:
                values = [space.ring.one]
                candidates = 1
                metrics.word_length_bound = None
            else:
                max_len = opts.length_bound_override
                if max_len is None:
                    max_len = length_bound(n)
                metrics.word_length_bound = max_len
                if relations_basis.is_unit:
                    values, candidates = [], 0
                else:
                    values, candidates = collapsed_certificate_values(
                        space, relations_basis, max_len, budget)
            metrics.certificate_candidates = candidates
            metrics.certificate_values = len(values)

        with clock.stage("locus"):
            if relations_basis.is_unit:
                locus = relations_basis
                metrics.multipliers = 0
            else:
                if n == 1:
                    multipliers = values  # saturating at 1 returns the ideal itself
                else:
                    multipliers = _shrink_multipliers(relations_basis, values, order, budget)
                metrics.multipliers = len(multipliers)
                locus = saturated_locus(relations, relations_basis, multipliers,
                                        opts.quotient_mode, order, budget)
            run.locus_basis = locus
            metrics.locus_gb_size = len(locus.elements)
            metrics.locus_gb_max_degree = locus.max_degree()

        with clock.stage("algebraic"):
            gens = trace_generators(space)
            run.generators = gens
            metrics.trace_generator_count = len(gens)
            minimal = {}
            witness = None
            for tg in gens:
                mp = minimal_polynomial(tg.value, locus, budget)
                if mp is None:
                    witness = tg
                    break
                minimal[tg.word.render()] = mp
            if witness is not None:
                run.verdict = Verdict(Outcome.INFINITE, witness=witness,
                                      minimal_polynomials=minimal, metrics=metrics)
            else:
                run.verdict = Verdict(Outcome.FINITE, minimal_polynomials=minimal,
                                      metrics=metrics)
    except ResourceLimitExceeded as stop:
        run.verdict = Verdict(Outcome.INCONCLUSIVE,
                              inconclusive_reason=str(stop), metrics=metrics)
    metrics.timings = dict(clock.timings)
    return run


def decide_finiteness(decision_input: DecisionInput) -> Verdict:
    """The decision procedure: Finite, Infinite (with a trace witness), or
    Inconclusive when a resource limit interrupts the computation."""
    return run_pipeline(decision_input).verdict
