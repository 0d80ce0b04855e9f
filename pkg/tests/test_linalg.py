"""Linear algebra over Q: polynomial echelon forms and matrix rank."""

import random
from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from repcount.linalg import PolyEchelon, matrix_rank
from repcount.poly import PolyRing, Polynomial, auxiliary

R = PolyRing.ranked([auxiliary("t", i) for i in range(3)])
X, Y, Z = (R.variable(v) for v in R.variables)


class TestEchelon:
    def test_detects_dependence_with_certificate(self):
        ech = PolyEchelon()
        assert ech.insert(X + Y) == ("added", 0)
        assert ech.insert(X - Y) == ("added", 1)
        status, combo = ech.insert(X * 2)
        assert status == "dependent"
        # 2x = 1*(x+y) + 1*(x-y)
        assert combo == {0: Fraction(1), 1: Fraction(1)}

    def test_zero_is_dependent_on_nothing(self):
        ech = PolyEchelon()
        status, combo = ech.insert(R.zero)
        assert status == "dependent"
        assert combo == {}

    def test_express(self):
        ech = PolyEchelon()
        ech.insert(X)
        ech.insert(Y + 1)
        combo = ech.express(X * 3 - Y - 1)
        assert combo == {0: Fraction(3), 1: Fraction(-1)}
        assert ech.express(Z) is None

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                    min_size=1, max_size=6))
    def test_combo_reconstructs_input(self, rows):
        polys = [X * a + Y * b + Z * c for a, b, c in rows]
        ech = PolyEchelon()
        inserted = []
        for f in polys:
            status, data = ech.insert(f)
            if status == "added":
                inserted.append((data, f))
            else:
                rebuilt = R.zero
                for idx, coeff in data.items():
                    original = next(g for i, g in inserted if i == idx)
                    rebuilt = rebuilt + original * coeff
                assert rebuilt == f


class TestMatrixRank:
    def test_hand_cases(self):
        assert matrix_rank(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))) == 2
        assert matrix_rank(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))) == 1
        assert matrix_rank(((Fraction(0),),)) == 0
        assert matrix_rank(()) == 0

    def test_against_sympy(self):
        rng = random.Random(42)
        for _ in range(20):
            rows = rng.randrange(1, 5)
            cols = rng.randrange(1, 5)
            data = [[Fraction(rng.randrange(-3, 4)) for _ in range(cols)]
                    for _ in range(rows)]
            mine = matrix_rank(tuple(tuple(r) for r in data))
            theirs = sympy.Matrix(data).rank()
            assert mine == theirs
