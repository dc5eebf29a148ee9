"""Tests for Q(zeta_5) arithmetic and 2x2 matrices over it."""

from __future__ import annotations

import cmath
import random
from fractions import Fraction

import pytest

from skeingen.core.exceptions import CyclotomicDivisionError
from skeingen.models.cyclotomic import ONE_C, ZERO_C, ZETA, Cyclotomic5, Mat2

SAMPLES = [
    Cyclotomic5((1, -1)),
    Cyclotomic5((0, 2, 0, -3)),
    Cyclotomic5((Fraction(1, 2), 0, 1, 0)),
    Cyclotomic5((-2, 0, -4, -4)),
    ZETA**3,
]


class TestCyclotomicBasics:
    """Tests for construction, equality and rendering."""

    def test_reduction(self) -> None:
        """The fifth power coefficient is reduced away."""
        assert ZETA**4 == Cyclotomic5((-1, -1, -1, -1))
        assert Cyclotomic5((1, 1, 1, 1, 1)).is_zero()
        assert ZETA**5 == ONE_C

    def test_zeta_powers(self) -> None:
        """Any integer power of zeta is available."""
        assert Cyclotomic5.zeta(7) == ZETA**2
        assert Cyclotomic5.zeta(-1) == ZETA**4

    def test_rational_equality(self) -> None:
        """Rational elements compare equal to plain numbers."""
        assert Cyclotomic5.rational(3) == 3
        assert Cyclotomic5.rational(Fraction(1, 2)) == Fraction(1, 2)
        assert Cyclotomic5.rational(3) != ZETA

    def test_rationals_hash_like_scalars(self) -> None:
        """Rational elements and the numbers they equal are interchangeable as keys."""
        assert hash(Cyclotomic5.rational(3)) == hash(3)
        assert hash(Cyclotomic5.rational(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert hash(ZERO_C) == hash(0)
        assert {ONE_C: "one"}[1] == "one"
        assert 3 in {Cyclotomic5.rational(3), ZETA}

    def test_rejects_bools_and_overflow(self) -> None:
        """Coefficients are rationals, at most five of them."""
        with pytest.raises(TypeError):
            Cyclotomic5((True,))
        with pytest.raises(ValueError):
            Cyclotomic5(range(6))

    def test_str(self) -> None:
        """Elements render in the power basis."""
        assert str(ZERO_C) == "0"
        assert str(Cyclotomic5((-2, 0, -4, -4))) == "-2 - 4*z^2 - 4*z^3"
        assert str(Cyclotomic5((0, Fraction(1, 5)))) == "1/5*z"
        assert str(ZETA**4) == "-1 - z - z^2 - z^3"
        assert str((ZETA + ZETA**4) * (ZETA**2 + ZETA**3)) == "-1"

    def test_json(self) -> None:
        """JSON keeps exact numerator/denominator pairs."""
        x = Cyclotomic5((Fraction(1, 3), -2))
        assert x.to_json() == [[1, 3], [-2, 1], [0, 1], [0, 1]]
        assert Cyclotomic5.from_json(x.to_json()) == x
        with pytest.raises(ValueError):
            Cyclotomic5.from_json([[1, 2]])
        with pytest.raises(ValueError):
            Cyclotomic5.from_json([[1, 2], [1], [0, 1], [0, 1]])


class TestCyclotomicArithmetic:
    """Tests for field operations."""

    def test_minimal_polynomial(self) -> None:
        """1 + z + z^2 + z^3 + z^4 = 0."""
        assert sum((ZETA**k for k in range(5)), ZERO_C).is_zero()

    def test_golden_ratio(self) -> None:
        """z + z^4 satisfies u^2 + u - 1 = 0."""
        u = ZETA + ZETA**4
        assert (u * u + u - 1).is_zero()

    @pytest.mark.parametrize("x", SAMPLES)
    def test_inverse(self, x: Cyclotomic5) -> None:
        """Every nonzero element is invertible."""
        assert x * x.inverse() == 1
        assert (1 / x) * x == ONE_C
        assert x**-2 * x**2 == 1

    def test_division_by_zero(self) -> None:
        """Zero has no inverse."""
        with pytest.raises(CyclotomicDivisionError):
            ZERO_C.inverse()
        with pytest.raises(ZeroDivisionError):
            ONE_C / ZERO_C

    def test_norm(self) -> None:
        """Norms of familiar elements."""
        assert ZETA.norm() == 1
        assert (1 - ZETA).norm() == 5
        assert Cyclotomic5.rational(2).norm() == 16

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_galois_is_homomorphism(self, k: int) -> None:
        """z -> z^k respects sums and products."""
        x, y = SAMPLES[0], SAMPLES[1]
        assert (x * y).galois(k) == x.galois(k) * y.galois(k)
        assert (x + y).galois(k) == x.galois(k) + y.galois(k)

    def test_galois_rejects_multiples_of_five(self) -> None:
        """z -> 1 is not an automorphism."""
        with pytest.raises(ValueError):
            ZETA.galois(5)

    def test_conjugate_and_real(self) -> None:
        """Complex conjugation fixes exactly the real elements."""
        u = ZETA + ZETA**4
        assert u.is_real()
        assert not ZETA.is_real()
        assert ZETA.conjugate() == ZETA**4
        assert Cyclotomic5.rational(7).is_rational()

    @pytest.mark.parametrize("x", SAMPLES)
    def test_to_complex(self, x: Cyclotomic5) -> None:
        """Numerical embedding agrees with the exact value."""
        root = cmath.exp(2j * cmath.pi / 5)
        expected = sum(float(c) * root**i for i, c in enumerate(x.coeffs))
        assert abs(x.to_complex() - expected) < 1e-12
        assert abs(ZETA.to_complex() - root) < 1e-12

    def test_matches_sympy(self) -> None:
        """Products agree with polynomial arithmetic modulo the cyclotomic polynomial."""
        sympy = pytest.importorskip("sympy")
        z = sympy.Symbol("z")
        phi = z**4 + z**3 + z**2 + z + 1

        def as_expr(x: Cyclotomic5) -> object:
            return sum(sympy.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(x.coeffs))

        for x in SAMPLES:
            for y in SAMPLES:
                expected = sympy.rem(sympy.expand(as_expr(x) * as_expr(y)), phi, z)
                assert sympy.expand(expected - as_expr(x * y)) == 0


def _random_element(rng: random.Random) -> Cyclotomic5:
    return Cyclotomic5(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4))


class TestFieldAxioms:
    """Sampled field laws in Q(zeta_5)."""

    def test_field_axioms_sampled(self) -> None:
        """Associativity, commutativity and distributivity on random triples."""
        rng = random.Random(5005)
        for _ in range(300):
            x, y, w = _random_element(rng), _random_element(rng), _random_element(rng)
            assert (x + y) + w == x + (y + w)
            assert (x * y) * w == x * (y * w)
            assert x + y == y + x
            assert x * y == y * x
            assert x * (y + w) == x * y + x * w
            assert x - x == ZERO_C
            assert x * ONE_C == x

    def test_inverses_sampled(self) -> None:
        """Every sampled nonzero element multiplies with its inverse to 1."""
        rng = random.Random(5115)
        for _ in range(300):
            x = _random_element(rng)
            if x.is_zero():
                continue
            assert x * x.inverse() == ONE_C
            assert x.norm() != 0


class TestMat2:
    """Tests for 2x2 matrices over the field."""

    def test_identity_and_power(self) -> None:
        """Powers multiply out; the zeroth power is the identity."""
        m = Mat2.of([[1, 1], [0, 1]])
        assert m**0 == Mat2.identity()
        assert m**5 == Mat2.of([[1, 5], [0, 1]])
        assert (m**0).is_identity()

    def test_negative_power_rejected(self) -> None:
        """Matrix powers are nonnegative."""
        with pytest.raises(ValueError):
            Mat2.identity() ** -1

    def test_det_trace(self) -> None:
        """Determinant and trace of a diagonal matrix."""
        m = Mat2(ZETA, ZERO_C, ZERO_C, ZETA**4)
        assert m.det() == 1
        assert m.trace() == ZETA + ZETA**4

    def test_scalar_and_transpose(self) -> None:
        """Scalars act entrywise from either side."""
        m = Mat2.of([[1, 2], [3, 4]])
        assert 2 * m == m * 2 == Mat2.of([[2, 4], [6, 8]])
        assert -m == Mat2.of([[-1, -2], [-3, -4]])
        assert m.transpose() == Mat2.of([[1, 3], [2, 4]])
        assert (m @ m).det() == m.det() * m.det()

    def test_galois(self) -> None:
        """Galois action applies entrywise."""
        m = Mat2(ZETA, ZERO_C, ZERO_C, ONE_C)
        assert m.galois(2) == Mat2(ZETA**2, ZERO_C, ZERO_C, ONE_C)

    def test_str(self) -> None:
        assert str(Mat2.identity()) == "[[1, 0], [0, 1]]"
