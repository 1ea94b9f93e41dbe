import itertools

import pytest

from fibtile.combinat.colorings import ColoredComposition, ColorScheme, DecoratedTiles, count_colored, enumerate_colored
from fibtile.combinat.partitions import TotallyNestedPartition, enumerate_totally_nested
from fibtile.combinat.unimodal import (
    Side,
    UnimodalSeq,
    colored_to_unimodal,
    enumerate_unimodal,
    is_tn_unimodal,
    is_unimodal,
    oplus,
    peel,
    psi,
    psi_inv,
    unimodal_to_colored,
)

u = lambda *values: UnimodalSeq(values)
tn = TotallyNestedPartition.parse


def decorated(*parts):
    return ColoredComposition.of(ColorScheme.FIB_ODD, [DecoratedTiles(tuple(tn(c) for c in part)) for part in parts])


def test_predicates():
    assert is_unimodal((1, 2, 2, 3, 1))
    assert is_unimodal((2, 1))
    assert not is_unimodal((1, 3))
    assert not is_unimodal((1, 2, 1, 2))
    assert not is_unimodal(())
    assert not is_unimodal((0, 1))

    assert is_tn_unimodal((1, 2, 1))
    assert is_tn_unimodal((1, 1))
    assert not is_tn_unimodal((2, 1))
    assert not is_tn_unimodal((1, 2, 2))
    assert not is_tn_unimodal((1, 1, 3, 2, 1))

    assert u(1, 2, 1).is_tn
    assert not u(1, 2).is_tn
    assert UnimodalSeq.from_json([1, 2, 1]) == u(1, 2, 1)

    with pytest.raises(ValueError):
        u(1, 3, 1)

    with pytest.raises(ValueError):
        UnimodalSeq.from_json("121")


def test_psi():
    chain = tn("189|237|46|5")
    assert psi(chain) == u(1, 2, 2, 3, 4, 3, 2, 1, 1)
    assert psi_inv(u(1, 2, 2, 3, 4, 3, 2, 1, 1)) == chain

    with pytest.raises(ValueError):
        psi_inv(u(1, 2))


def test_psi_exhaustive():
    for n in range(1, 11):
        domain = list(enumerate_totally_nested(n))
        image = [psi(t) for t in domain]
        assert len(set(image)) == len(image)
        assert all(s.is_tn for s in image)
        for t, s in zip(domain, image):
            assert psi_inv(s) == t
        if n <= 8:
            assert set(image) == {s for s in enumerate_unimodal(n) if s.is_tn}


def test_oplus():
    assert oplus(u(1, 1), u(1, 2, 1), Side.LEFT) == u(2, 3, 2, 1, 1)
    assert oplus(u(1, 1), u(1, 2, 1), Side.RIGHT) == u(1, 1, 2, 3, 2)
    assert oplus(u(1, 2, 1), u(1, 1), Side.LEFT) == u(1, 3, 3, 2, 1)
    assert oplus(u(1, 2, 1), u(1, 1), Side.RIGHT) == u(1, 2, 3, 3, 1)


def test_oplus_associative():
    by_size = {k: [psi(t) for t in enumerate_totally_nested(k)] for k in range(1, 8)}
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        if i + j + k > 9:
            continue
        for a, b, c in itertools.product(by_size[i], by_size[j], by_size[k]):
            for s, t in itertools.product(Side, repeat=2):
                assert oplus(oplus(a, b, s), c, t) == oplus(a, oplus(b, c, t), s)


def test_enumerate_unimodal():
    assert [s.values for s in enumerate_unimodal(2)] == [(1, 1), (1, 2), (2, 1)]
    assert [sum(1 for _ in enumerate_unimodal(n)) for n in range(1, 8)] == [1, 3, 10, 34, 116, 396, 1352]

    with pytest.raises(ValueError):
        list(enumerate_unimodal(0))


def test_unimodal_example():
    cc = decorated(("12",), ("1", "145|23", "12"))
    seq = colored_to_unimodal(cc)
    assert seq == u(1, 1, 3, 5, 5, 4, 4, 3, 3, 2)
    assert unimodal_to_colored(seq) == cc

    comps, sides = peel(seq)
    assert comps == [tn("12"), tn("1"), tn("145|23"), tn("12")]
    assert sides == [Side.RIGHT, Side.LEFT, Side.LEFT]

    # solid junctions climb to the right, dotted ones to the left
    assert colored_to_unimodal(decorated(("1",), ("1",), ("1",))) == u(1, 2, 3)
    assert colored_to_unimodal(decorated(("1", "1", "1"))) == u(3, 2, 1)

    with pytest.raises(ValueError):
        colored_to_unimodal(next(enumerate_colored(ColorScheme.FIB, 2)))


def test_unimodal_exhaustive():
    for n in range(1, 8):
        domain = list(enumerate_colored(ColorScheme.FIB_ODD, n))
        assert len(domain) == count_colored(ColorScheme.FIB_ODD, n)
        image = [colored_to_unimodal(cc) for cc in domain]
        assert len(set(image)) == len(image)
        assert set(image) == set(enumerate_unimodal(n))
        for cc, seq in zip(domain, image):
            assert unimodal_to_colored(seq) == cc


if __name__ == "__main__":
    pytest.main()
