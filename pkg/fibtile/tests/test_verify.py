import json

import pytest

from fibtile.verify import (
    SUITE_MAP,
    SUITES,
    Status,
    StatusCode,
    Suite,
    SuiteResult,
    VerifyRunner,
    format_report,
    load_config_from_file,
)
from fibtile.verify.suites import CheckFailure, check_bijection, check_board_roundtrip, check_oplus_associativity, worked_examples
from fibtile.combinat.core import OracleLimitError


def test_status():
    assert Status().ok()
    assert Status(StatusCode.SKIPPED, "too small").ok()
    assert not Status(StatusCode.FAILED, "x").ok()
    assert not Status(StatusCode.ERROR, "x").ok()

    s = Status.log(StatusCode.FAILED, "phi n=3: mismatch")
    assert s == Status(StatusCode.FAILED, "phi n=3: mismatch")
    assert s.to_json() == {"code": "failed", "message": "phi n=3: mismatch"}
    assert Status.from_json(s.to_json()) == s

    with pytest.raises(ValueError):
        Status.from_json({"message": "no code"})


def test_suite_names_are_unique():
    assert len(SUITE_MAP) == len(SUITES)
    assert {"count-tables", "phi", "ocps", "worked-examples", "board-roundtrip", "oplus"} <= set(SUITE_MAP)


def test_suite_run_statuses():
    def passes(max_n):
        return f"fine up to {max_n}"

    def fails(max_n):
        raise CheckFailure("bad image")

    def invalid(max_n):
        raise ValueError("bad input")

    def too_big(max_n):
        raise OracleLimitError("oracle too large")

    def crashes(max_n):
        raise KeyError("oops")

    assert Suite("a", "", 3, passes).run(3) == Status(StatusCode.OK, "fine up to 3")
    assert Suite("a", "", 3, passes, min_n=2).run(1).code() == StatusCode.SKIPPED
    assert Suite("a", "", 3, fails).run(3) == Status(StatusCode.FAILED, "a: bad image")
    assert Suite("a", "", 3, invalid).run(3).code() == StatusCode.FAILED
    assert Suite("a", "", 3, too_big).run(3).code() == StatusCode.ERROR
    assert "KeyError" in Suite("a", "", 3, crashes).run(3).message()


def test_check_bijection():
    assert check_bijection("double", [1, 2, 3], lambda x: 2 * x, lambda y: y // 2, [2, 4, 6]) == 3

    # collision
    with pytest.raises(CheckFailure):
        check_bijection("parity", [1, 3], lambda x: x % 2, lambda y: y, [1])

    # wrong inverse
    with pytest.raises(CheckFailure):
        check_bijection("shift", [1, 2], lambda x: x + 1, lambda y: y, [2, 3])

    # image misses part of the oracle
    with pytest.raises(CheckFailure):
        check_bijection("double", [1, 2], lambda x: 2 * x, lambda y: y // 2, [2, 4, 6])

    # image leaves the oracle
    with pytest.raises(CheckFailure):
        check_bijection("double", [1, 2], lambda x: 2 * x, lambda y: y // 2, [2])


def test_worked_examples():
    for name, thunk, expected in worked_examples():
        assert thunk() == expected, name


def test_board_roundtrip_and_oplus_suites():
    # 34 + 20 + 5 + 76 + 48 objects over the five schemes
    assert check_board_roundtrip(4) == "183 colored compositions round-trip through their boards, n <= 4"
    assert check_oplus_associativity(5).endswith("total size <= 5")


def test_load_config_from_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"suites": [{"name": "phi", "max_n": 7}, {"name": "nonexistent", "max_n": 3}]}))
    assert load_config_from_file(path) == {"phi": 7}

    path.write_text(json.dumps({"suites": [{"name": "phi", "max_n": -1}]}))
    with pytest.raises(ValueError):
        load_config_from_file(path)

    path.write_text(json.dumps({"suites": [{"name": "phi", "max_n": "9"}]}))
    with pytest.raises(ValueError):
        load_config_from_file(path)

    path.write_text("[]")
    with pytest.raises(ValueError):
        load_config_from_file(path)


def test_limit_for():
    phi = SUITE_MAP["phi"]
    assert VerifyRunner().limit_for(phi) == phi.default_max_n
    assert VerifyRunner(limits={"phi": 5}).limit_for(phi) == 5
    assert VerifyRunner(limits={"phi": 5}, max_n=3).limit_for(phi) == 3
    assert VerifyRunner(max_n=100).limit_for(phi) == phi.default_max_n

    with pytest.raises(ValueError):
        VerifyRunner(jobs=0)


def test_runner():
    names = ["phi", "alpha-beta", "jacobsthal", "matrix-tree", "ocps"]
    runner = VerifyRunner(suites=[SUITE_MAP[n] for n in names], max_n=4, jobs=2)
    results = runner.run()
    assert [r.name for r in results] == sorted(names)
    assert all(r.status.code() == StatusCode.OK for r in results), format_report(results)
    assert all(r.max_n == 4 for r in results)

    # the report does not depend on the number of workers
    serial = VerifyRunner(suites=[SUITE_MAP[n] for n in names], max_n=4, jobs=1).run()
    assert [(r.name, r.status) for r in serial] == [(r.name, r.status) for r in results]


def test_runner_small_limit():
    results = VerifyRunner(max_n=1, jobs=4).run()
    assert len(results) == len(SUITES)
    assert all(r.status.ok() for r in results), format_report(results)
    by_name = {r.name: r for r in results}
    assert by_name["jacobsthal"].status.code() == StatusCode.SKIPPED
    assert by_name["ncn-lemma"].status.code() == StatusCode.SKIPPED
    assert by_name["oplus"].status.code() == StatusCode.SKIPPED
    assert by_name["worked-examples"].status.code() == StatusCode.OK


def test_format_report():
    results = [
        SuiteResult("phi", 9, Status(StatusCode.OK, "fine"), 0.5),
        SuiteResult("xi", 9, Status(StatusCode.FAILED, "xi n=4: broken"), 0.1),
    ]
    report = format_report(results)
    lines = report.split("\n")
    assert lines[0].startswith("phi  n<=9  ")
    assert "failed" in lines[1] and "xi n=4: broken" in lines[1]
    assert lines[-1] == "1/2 suites passed"
    assert format_report([]) == "0/0 suites passed"

    assert results[1].to_json() == {"suite": "xi", "maxN": 9, "code": "failed", "message": "xi n=4: broken", "seconds": 0.1}


if __name__ == "__main__":
    pytest.main()
