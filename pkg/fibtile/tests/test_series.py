import pytest

from fibtile.combinat.colorings import ColorScheme, scheme_color_counts
from fibtile.combinat.core import fibonacci
from fibtile.combinat.partitions import ncn_counts
from fibtile.combinat.series import CoeffSeq, invert_transform, linear_recurrence_check, parse_poly, rational_coeffs


def test_coeff_seq():
    s = CoeffSeq((1, 2, 5))
    assert len(s) == 3
    assert s.coefficient(1) == 1
    assert s.coefficient(3) == 5
    assert s.to_json() == [1, 2, 5]
    assert CoeffSeq.from_json([1, 2, 5]) == s

    with pytest.raises(ValueError):
        s.coefficient(0)

    with pytest.raises(ValueError):
        s.coefficient(4)

    with pytest.raises(ValueError):
        CoeffSeq(())

    with pytest.raises(ValueError):
        CoeffSeq((1, 2.0))

    with pytest.raises(ValueError):
        CoeffSeq((True,))

    with pytest.raises(ValueError):
        CoeffSeq.from_json("1,2")


def test_invert_transform():
    # one color per part counts plain compositions
    assert list(invert_transform(CoeffSeq((1,) * 8))) == [2 ** (n - 1) for n in range(1, 9)]

    assert list(invert_transform(scheme_color_counts(ColorScheme.FIB_PLUS1, 7))) == [1, 3, 8, 22, 60, 164, 448]
    assert list(invert_transform(scheme_color_counts(ColorScheme.FIB, 6))) == [1, 2, 5, 12, 29, 70]
    assert list(invert_transform(scheme_color_counts(ColorScheme.FIB_EVEN, 8))) == [1, 4, 15, 56, 209, 780, 2911, 10864]
    assert list(invert_transform(scheme_color_counts(ColorScheme.FIB_ODD, 8))) == [1, 3, 10, 34, 116, 396, 1352, 4616]
    assert list(invert_transform(scheme_color_counts(ColorScheme.FIB_MINUS1, 8))) == [0, 1, 1, 3, 5, 11, 21, 43]


def test_rational_coeffs():
    assert list(rational_coeffs((0, 1), (1, -1, -1), 8)) == [fibonacci(n) for n in range(1, 9)]
    assert list(rational_coeffs((0, 1, -1), (1, -2), 5)) == [1, 1, 2, 4, 8]

    with pytest.raises(ValueError):
        rational_coeffs((1,), (1, -1), 3)

    with pytest.raises(ValueError):
        rational_coeffs((0, 1), (0, 1), 3)

    with pytest.raises(ValueError):
        rational_coeffs((0, 1), (2,), 3)

    with pytest.raises(ValueError):
        rational_coeffs((0, 1), (1,), 0)


def test_rational_identity():
    N = 50
    indecomposable = rational_coeffs((0, 1, -1), (1, -2), N)
    total = rational_coeffs((0, 1, -1), (1, -3, 1), N)
    assert invert_transform(indecomposable) == total
    assert list(total) == [fibonacci(2 * n - 1) for n in range(1, N + 1)]
    assert list(total) == ncn_counts(N)


def test_linear_recurrence_check():
    fib = [fibonacci(n) for n in range(1, 20)]
    assert linear_recurrence_check(fib, (1, 1))
    assert not linear_recurrence_check(fib, (2, 1))

    fib_even = list(invert_transform(scheme_color_counts(ColorScheme.FIB_EVEN, 40)))
    assert linear_recurrence_check(fib_even, (4, -1))

    fib_odd = list(invert_transform(scheme_color_counts(ColorScheme.FIB_ODD, 40)))
    assert linear_recurrence_check(fib_odd, (4, -2))


def test_parse_poly():
    assert parse_poly("0,1,-1") == (0, 1, -1)
    assert parse_poly(" 1, -3 ,1") == (1, -3, 1)

    with pytest.raises(ValueError):
        parse_poly("1,x")


if __name__ == "__main__":
    pytest.main()
