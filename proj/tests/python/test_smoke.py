import cmath
import math
from fractions import Fraction

import pytest

import gtrig


def test_parse_and_roots():
    p = gtrig.Polynomial.parse("x^3 + x^2 + 1")
    assert str(p) == "x^3+x^2+1"
    assert p.degree == 3
    roots = gtrig.find_roots(p)
    assert len(roots) == 3
    assert max(abs(p(r)) for r in roots) < 1e-12


def test_general_system():
    sys = gtrig.GenTrigSystem("x^2+1")
    assert sys.S(0, 0) == pytest.approx(2.0)
    assert sys.S(1, 1.0) == pytest.approx(2j * math.sinh(1.0))
    assert sys.derivative_matrix == [[0, -1j], [1j, 0]]
    cert = gtrig.identity_certificate(sys)
    assert gtrig.det_M(cert, sys, 1.7) == pytest.approx(4.0)


def test_cyclotomic():
    two = gtrig.CyclotomicSystem(2)
    assert two.S(0, 0.3) == pytest.approx(math.cos(0.3))
    assert two.S(1, 0.3) == pytest.approx(math.sin(0.3))
    assert gtrig.addition_rule(2, 1) == ([1, 1], [1, 0])
    three = gtrig.CyclotomicSystem(3)
    assert abs(three.det_M(0.4) - three.det_M(0.0)) < 1e-12


def test_factorial_identity_is_exact():
    f = gtrig.factorial_identity(3)
    assert f["sum_a"] == Fraction(3, 2)
    assert f["sum_b"] == Fraction(1, 2)
    assert f["holds"]


def test_sums():
    out = gtrig.evaluate_sums("x^2+1", oracle_terms=20000)
    assert out["A"][0] == pytest.approx(math.pi / math.tanh(math.pi), abs=1e-12)
    assert out["B"][0] == pytest.approx(math.pi / math.sinh(math.pi), abs=1e-12)
    assert abs(out["A"][0] - out["oracle_A"][0]) < 1e-9

    c = gtrig.associated_matrix("x^3+x^2+1", descending=True)
    scaled = [[2j * cmath.pi * v for v in row] for row in c]
    expected = [[3, 2, 0], [-1, 0, -3], [0, 3, 2]]
    for row, ref in zip(scaled, expected):
        assert row == pytest.approx(ref, abs=1e-10)


def test_errors_map_to_python_exceptions():
    with pytest.raises(gtrig.InputError):
        gtrig.Polynomial.parse("x^")
    with pytest.raises(ValueError):
        gtrig.evaluate_sums("x^2-1")
    with pytest.raises(ArithmeticError):
        gtrig.GenTrigSystem("x^2+1").S(0, 900.0)


def test_acceptance_entry_point():
    result = gtrig.run_criterion(1)
    assert result["passed"]
    assert result["checks"]
