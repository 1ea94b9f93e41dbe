import logging
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple

logger = logging.getLogger("bfile")


def parse_bfile(text: str) -> Dict[int, int]:
    """Terms of an OEIS b-file: one `n a(n)` pair per line, `#` lines are comments."""
    terms: Dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"b-file line {lineno} should hold 'n a(n)', got {line!r}")
        try:
            n, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"b-file line {lineno} is not a pair of integers: {line!r}")
        if n in terms:
            raise ValueError(f"b-file line {lineno} repeats index {n}")
        terms[n] = value
    return terms


def read_bfile(path) -> Dict[int, int]:
    path = Path(path)
    terms = parse_bfile(path.read_text())
    logger.debug(f"read {len(terms)} terms from {path}")
    return terms


def first_mismatch(values: Sequence[int], terms: Dict[int, int], offset: int = 1) -> Optional[Tuple[int, int, Optional[int]]]:
    """
    Compare values[0], values[1], ... against the terms at indices offset,
    offset+1, ... and return (n, computed, expected) for the first
    disagreement. An index the b-file does not cover counts as a mismatch
    with expected None.
    """
    for i, value in enumerate(values):
        n = offset + i
        expected = terms.get(n)
        if expected != value:
            return n, value, expected
    return None
