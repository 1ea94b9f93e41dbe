import json
from typing import Any, Optional

from fibtile.combinat.colorings import ColoredComposition
from fibtile.combinat.core import Board, Composition, RestrictedFamily
from fibtile.combinat.ladder import LadderSpanningTree
from fibtile.combinat.multicomp import TwoComposition
from fibtile.combinat.ocps import CommaSlashString, Ocps
from fibtile.combinat.partitions import SetPartition, TotallyNestedPartition
from fibtile.combinat.series import CoeffSeq
from fibtile.combinat.unimodal import UnimodalSeq
from fibtile.combinat.words import Word

OBJECT_TYPE_MAP = {
    "composition": Composition,
    "board": Board,
    "colored": ColoredComposition,
    "word": Word,
    "word4": Word,
    "tree": LadderSpanningTree,
    "partition": SetPartition,
    "tn-partition": TotallyNestedPartition,
    "unimodal": UnimodalSeq,
    "ocps": Ocps,
    "comma-slash": CommaSlashString,
    "two-comp": TwoComposition,
    "coeffs": CoeffSeq,
}


def _int_list(text: str):
    text = text.strip().strip("()")
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"expected a list of integers, got {text!r}")


TEXT_PARSERS = {
    "composition": lambda text: Composition(tuple(_int_list(text))),
    "word": lambda text: Word.parse(text, 3),
    "word4": lambda text: Word.parse(text, 4),
    "partition": SetPartition.parse,
    "tn-partition": TotallyNestedPartition.parse,
    "unimodal": lambda text: UnimodalSeq(tuple(_int_list(text))),
    "comma-slash": CommaSlashString.parse,
    "coeffs": lambda text: CoeffSeq(tuple(_int_list(text))),
}


def load(kind: str, obj: Any, family: Optional[RestrictedFamily] = None):
    """Build a domain object of the given kind from decoded JSON or its compact text form."""
    if kind not in OBJECT_TYPE_MAP:
        raise ValueError(f"unknown object kind {kind!r}, expected one of {sorted(OBJECT_TYPE_MAP)}")
    if kind == "two-comp":
        if family is None:
            raise ValueError("a 2-composition needs its restricted family")
        return TwoComposition.from_json(obj, family)
    if kind in ("word", "word4"):
        return Word.from_json(obj, 4 if kind == "word4" else 3)
    if isinstance(obj, str) and kind in TEXT_PARSERS:
        return TEXT_PARSERS[kind](obj)
    return OBJECT_TYPE_MAP[kind].from_json(obj)


def decode(kind: str, text: str, family: Optional[RestrictedFamily] = None):
    text = text.strip()
    if not text:
        raise ValueError("empty input")
    # bare digit words would otherwise decode as JSON numbers
    obj = json.loads(text) if text[0] in '[{"' else text
    return load(kind, obj, family)


def encode(value) -> str:
    return json.dumps(value.to_json())


def encode_text(value) -> str:
    """Compact text form where the type has one, JSON otherwise."""
    if type(value).__str__ is object.__str__:
        return encode(value)
    return str(value)
