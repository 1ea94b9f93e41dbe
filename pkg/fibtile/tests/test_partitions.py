import pytest

from fibtile.combinat.core import OracleLimitError, fibonacci
from fibtile.combinat.partitions import (
    SetPartition,
    TotallyNestedPartition,
    arc_diagram,
    classify,
    enumerate_ncn,
    enumerate_ncn_indecomposable,
    enumerate_set_partitions,
    enumerate_totally_nested,
    lemma_join,
    lemma_split,
    ncn_counts,
    ncn_indecomposable_count,
    nesting_chain,
    phi,
    phi_inv,
)


def test_set_partition_text():
    p = SetPartition.parse("14|236|5|78")
    assert p.n == 8
    assert p.blocks == ((1, 4), (2, 3, 6), (5,), (7, 8))
    assert str(p) == "14|236|5|78"
    assert p.block_of(6) == (2, 3, 6)
    assert SetPartition.from_json(p.to_json()) == p
    assert SetPartition.from_json("14|236|5|78") == p

    # blocks are canonical whatever order they are given in
    assert SetPartition.of([(8, 7), (5,), (6, 2, 3), (4, 1)]) == p

    big = SetPartition.parse("1,10|2|3|4|5|6|7|8|9")
    assert big.blocks[0] == (1, 10)
    assert str(big) == "1,10|2|3|4|5|6|7|8|9"

    with pytest.raises(ValueError):
        SetPartition.parse("12||3")

    with pytest.raises(ValueError):
        SetPartition.of([(1, 2), (2, 3)])

    with pytest.raises(ValueError):
        SetPartition.of([(1, 3)])

    with pytest.raises(ValueError):
        p.block_of(9)


def test_classify():
    p = SetPartition.parse("14|236|5|78")
    assert arc_diagram(p) == [(1, 4), (2, 3), (3, 6), (7, 8)]
    flags = classify(p)
    assert flags.crossing
    assert flags.nesting
    assert not flags.indecomposable
    assert not flags.totally_nested

    flags = classify(SetPartition.parse("135|2|4"))
    assert not flags.crossing
    assert not flags.nesting
    assert flags.indecomposable
    assert not flags.totally_nested
    assert flags.to_json() == {"crossing": False, "nesting": False, "indecomposable": True, "totallyNested": False}

    assert classify(SetPartition.parse("189|237|46|5")).totally_nested


def test_totally_nested_partition():
    t = TotallyNestedPartition.parse("189|237|46|5")
    assert t.chain == ((1, 8, 9), (2, 3, 7), (4, 6), (5,))
    assert nesting_chain(t) == t.chain
    assert TotallyNestedPartition.from_json(t.to_json()) == t

    with pytest.raises(ValueError):
        TotallyNestedPartition.parse("14|236|5|78")

    with pytest.raises(ValueError):
        TotallyNestedPartition.parse("14|2|3")


def test_enumerate_set_partitions():
    assert [sum(1 for _ in enumerate_set_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]
    assert [str(p) for p in enumerate_set_partitions(3)] == ["123", "12|3", "13|2", "1|23", "1|2|3"]

    with pytest.raises(OracleLimitError):
        next(enumerate_set_partitions(13))


def test_enumerate_ncn():
    for n in range(1, 10):
        assert sum(1 for _ in enumerate_ncn(n)) == fibonacci(2 * n - 1)

    assert ncn_counts(9) == [fibonacci(2 * n - 1) for n in range(1, 10)]

    # the generator agrees with brute-force filtering of all set partitions
    for n in range(1, 8):
        brute = {p for p in enumerate_set_partitions(n) if not classify(p).crossing and not classify(p).nesting}
        assert set(enumerate_ncn(n)) == brute


def test_ncn_indecomposable_doubling():
    counts = [sum(1 for _ in enumerate_ncn_indecomposable(n)) for n in range(1, 11)]
    assert counts == [ncn_indecomposable_count(n) for n in range(1, 11)]
    assert counts[:5] == [1, 1, 2, 4, 8]

    for n in range(3, 10):
        domain = list(enumerate_ncn_indecomposable(n))
        smaller = set(enumerate_ncn_indecomposable(n - 1))
        sides = {"singleton": set(), "merged": set()}
        for p in domain:
            q, side = lemma_split(p)
            assert q in smaller
            assert q not in sides[side]
            sides[side].add(q)
            assert lemma_join(q, side) == p
        assert sides["singleton"] == smaller
        assert sides["merged"] == smaller

    with pytest.raises(ValueError):
        lemma_split(SetPartition.parse("12"))

    with pytest.raises(ValueError):
        lemma_join(SetPartition.parse("12"), "left")


def test_enumerate_totally_nested():
    assert [sum(1 for _ in enumerate_totally_nested(n)) for n in range(1, 9)] == [1, 1, 2, 4, 8, 16, 32, 64]
    assert [str(t) for t in enumerate_totally_nested(4)] == ["1234", "124|3", "134|2", "14|23"]


def test_phi_examples():
    assert phi(SetPartition.parse("14|2|3")) == TotallyNestedPartition.parse("14|23")
    assert phi(SetPartition.parse("135|2|4")) == TotallyNestedPartition.parse("15|24|3")
    assert phi(SetPartition.of([(1, 4, 6, 8, 10, 11), (2,), (3,), (5,), (7,), (9,)])) == TotallyNestedPartition.of(
        [(1, 10, 11), (2, 3, 9), (4, 8), (5, 7), (6,)]
    )
    assert phi_inv(TotallyNestedPartition.parse("15|24|3")) == SetPartition.parse("135|2|4")

    # crossing
    with pytest.raises(ValueError):
        phi(SetPartition.parse("13|24"))

    # decomposable
    with pytest.raises(ValueError):
        phi(SetPartition.parse("12|3"))


def test_phi_exhaustive():
    for n in range(1, 9):
        domain = list(enumerate_ncn_indecomposable(n))
        image = [phi(p) for p in domain]
        assert len(set(image)) == len(image)
        assert set(image) == set(enumerate_totally_nested(n))
        for p, t in zip(domain, image):
            assert phi_inv(t) == p


if __name__ == "__main__":
    pytest.main()
