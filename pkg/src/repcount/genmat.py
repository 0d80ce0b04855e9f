"""Generic matrices and the polynomial data attached to a presentation.

For n x n representations of an algebra on s generators we work in the
commutative ring B = Q[x[i,j,l]] and send the l-th algebra generator to the
generic matrix (x[i,j,l]).  This module builds:

  * the relations ideal: all matrix entries of the defining relations
    evaluated on generic matrices;
  * trace generators: traces of words of length <= n^2, one per cyclic
    class (enough to generate the trace ring, by Razmyslov's bound);
  * the irreducibility certificate set: polynomials of the form
    trace(M0 * s_m(M1, ..., Mm)) with m = 2(n-1), which vanish simultaneously
    exactly at the non-irreducible points.  Word lengths run up to the
    Pappacena-style bound returned by `length_bound`.

The certificate polynomials can be large, so the set stores provenance words
and expands members on demand instead of holding every expansion in memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .groebner import Budget, Ideal
from .matrices import Matrix, trace_of_product
from .poly import PolyRing, Polynomial, matrix_entry
from .presentation import Presentation, substitute


@dataclass(frozen=True)
class GenericMatrixSpace:
    """n, s, the ring B in n^2*s matrix-entry variables, and the s generic matrices."""

    n: int
    s: int
    ring: PolyRing
    matrices: tuple

    def word_matrix(self, word: Sequence[int]) -> Matrix:
        """Ordered product of generic matrices; the empty word is the identity."""
        out = Matrix.identity(self.n, self.ring.one, self.ring.zero)
        for letter in word:
            out = out * self.matrices[letter]
        return out


def build_generic_space(n: int, s: int) -> GenericMatrixSpace:
    if n < 1:
        raise ValueError("matrix dimension must be at least 1")
    if s < 0:
        raise ValueError("negative generator count")
    variables = [matrix_entry(i, j, l)
                 for l in range(1, s + 1)
                 for i in range(1, n + 1)
                 for j in range(1, n + 1)]
    ring = PolyRing.ranked(variables)
    mats = tuple(
        Matrix([[ring.variable(matrix_entry(i, j, l)) for j in range(1, n + 1)]
                for i in range(1, n + 1)])
        for l in range(1, s + 1))
    return GenericMatrixSpace(n, s, ring, mats)


def relations_ideal(p: Presentation, space: GenericMatrixSpace) -> Ideal:
    """Ideal of B generated by all entries of the relations on generic matrices."""
    if p.num_generators != space.s:
        raise ValueError("presentation has %d generators, space expects %d"
                         % (p.num_generators, space.s))
    gens = []
    for rel in p.relations:
        if space.s:
            m = substitute(rel, space.matrices)
        else:
            m = Matrix.identity(space.n, space.ring.one, space.ring.zero) * rel.terms.get((), 0)
        for row in m.rows:
            for entry in row:
                if not isinstance(entry, Polynomial):
                    # all-constant relations substitute to plain scalars
                    entry = space.ring.constant(entry)
                if not entry.is_zero:
                    gens.append(entry)
    return Ideal(space.ring, gens)


def standard_identity(m: int, args: Sequence[Matrix]) -> Matrix:
    """s_m(A_1..A_m): the signed sum of all m! orderings of the product.

    Computed by dynamic programming over subsets (sharing partial products
    across permutations) rather than literally summing m! products.  Repeated
    arguments make the result zero, since s_m alternates.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if len(args) != m:
        raise ValueError("expected %d matrices" % m)
    if len(set(args)) != m:
        d = args[0].nrows
        return Matrix.zeros(d)

    # acc[frozenset of used indices] -> signed sum over orderings of that subset
    d = args[0].nrows
    acc = {frozenset(): Matrix.identity(d)}
    for _ in range(m):
        nxt: dict = {}
        for used, mat in acc.items():
            for k in range(m):
                if k in used:
                    continue
                # appending index k after the used set: the sign contribution
                # is (-1)^(number of remaining indices smaller than k)
                sign = (-1) ** sum(1 for r in range(k) if r not in used)
                term = mat * args[k]
                if sign < 0:
                    term = -term
                key = used | {k}
                nxt[key] = term if key not in nxt else nxt[key] + term
        acc = nxt
    return acc[frozenset(range(m))]


def length_bound(n: int) -> int:
    """Largest admissible word length for the certificate set.

    This is the largest integer strictly below
    n*sqrt(2n^2/(n-1) + 1/4) + n/2 - 2, computed exactly by comparing squares
    of rationals (no floating point).  Needs n >= 2.
    """
    if n < 2:
        raise ValueError("length bound needs n >= 2")
    q = Fraction(2 * n * n, n - 1) + Fraction(1, 4)  # the radicand

    def below(length: int) -> bool:
        # length < n*sqrt(q) + n/2 - 2 ?
        lhs = Fraction(length) - Fraction(n, 2) + 2
        if lhs <= 0:
            return True
        return lhs * lhs < n * n * q

    length = 1
    while below(length + 1):
        length += 1
    return length


@dataclass(frozen=True)
class CyclicWord:
    """A word up to cyclic rotation, stored as its least rotation."""

    letters: tuple

    @staticmethod
    def of(letters: Sequence[int]) -> "CyclicWord":
        w = tuple(letters)
        if not w:
            raise ValueError("cyclic words are nonempty")
        best = min(w[k:] + w[:k] for k in range(len(w)))
        return CyclicWord(best)

    def __len__(self):
        return len(self.letters)

    def rotations(self) -> list:
        w = self.letters
        return [w[k:] + w[:k] for k in range(len(w))]

    def render(self) -> str:
        parts = []
        run_letter, run_len = self.letters[0], 1
        for letter in self.letters[1:]:
            if letter == run_letter:
                run_len += 1
            else:
                parts.append((run_letter, run_len))
                run_letter, run_len = letter, 1
        parts.append((run_letter, run_len))
        return "*".join("x%d" % (l + 1) if e == 1 else "x%d^%d" % (l + 1, e)
                        for l, e in parts)


@dataclass(frozen=True)
class TraceGenerator:
    """trace(word) as a polynomial of B, for one cyclic word."""

    word: CyclicWord
    value: Polynomial

    def render(self) -> str:
        return "tr(%s)" % self.word.render()


def _necklaces(s: int, max_len: int) -> list:
    seen = set()
    out = []
    for length in range(1, max_len + 1):
        for w in product(range(s), repeat=length):
            cw = CyclicWord.of(w)
            if cw.letters not in seen:
                seen.add(cw.letters)
                out.append(cw)
    out.sort(key=lambda cw: (len(cw.letters), cw.letters))
    return out


def trace_generators(space: GenericMatrixSpace) -> tuple:
    """Trace ring generators: tr(w) over cyclic words of length <= n^2,
    sorted by length then lexicographically."""
    gens = []
    for cw in _necklaces(space.s, space.n * space.n):
        gens.append(TraceGenerator(cw, space.word_matrix(cw.letters).trace()))
    return tuple(gens)


def _all_words(s: int, max_len: int) -> list:
    """All words of length 0..max_len, sorted by length then lexicographically."""
    out = [()]
    for length in range(1, max_len + 1):
        out.extend(product(range(s), repeat=length))
    return out


@dataclass(frozen=True)
class CertificateMember:
    """One certificate: provenance words (M0, M1, .., Mm) plus its expansion key."""

    words: tuple
    degree: int


class IrreducibilitySet:
    """Deduplicated certificates trace(M0 * s_m(M1..Mm)), provenance included.

    Members are stored as provenance word tuples; `polynomial(k)` expands the
    k-th member on demand (full expansions of every member at once can be very
    large for n = 2 at the full length bound).
    """

    def __init__(self, space: GenericMatrixSpace, max_len: int,
                 members: Sequence[CertificateMember], candidates: int):
        self.space = space
        self.max_len = max_len
        self.members = tuple(members)
        self.candidates = candidates  # tuples examined before dedup/zero pruning
        self._word_matrix = lru_cache(maxsize=None)(lambda w: space.word_matrix(w))
        self._alternating = lru_cache(maxsize=64)(self._alternating_uncached)

    def _alternating_uncached(self, words: tuple) -> Matrix:
        mats = [self._word_matrix(w) for w in words]
        return standard_identity(len(words), mats)

    def polynomial(self, k: int) -> Polynomial:
        member = self.members[k]
        m0, rest = member.words[0], member.words[1:]
        return trace_of_product(self._word_matrix(m0), self._alternating(rest))

    def polynomials(self) -> Iterator[Polynomial]:
        for k in range(len(self.members)):
            yield self.polynomial(k)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def irreducibility_set(space: GenericMatrixSpace, max_len: int | None = None,
                       limits=None) -> IrreducibilitySet:
    """The certificate set for n >= 2: one member per distinct polynomial
    (up to sign), zero expansions dropped.

    Pruning: the M1..Mm slots are unordered without repeats (permutations
    only flip the sign, repeats vanish), and M0 ranges over all words
    including the empty one.
    """
    n, s = space.n, space.s
    if n < 2:
        raise ValueError("certificate sets need n >= 2")
    if max_len is None:
        max_len = length_bound(n)
    budget = Budget.of(limits)
    m = 2 * (n - 1)
    words = _all_words(s, max_len)
    members = []
    seen: set = set()
    candidates = 0
    sset = IrreducibilitySet(space, max_len, (), 0)
    for rest in combinations(words, m):
        budget.tick()
        alt = sset._alternating(rest)
        if alt.is_zero:
            candidates += len(words)
            continue
        for m0 in words:
            candidates += 1
            poly = trace_of_product(sset._word_matrix(m0), alt)
            if poly.is_zero:
                continue
            if poly in seen or -poly in seen:
                continue
            seen.add(poly)
            members.append(CertificateMember((m0,) + rest, poly.total_degree()))
    final = IrreducibilitySet(space, max_len, members, candidates)
    return final
