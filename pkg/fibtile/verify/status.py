import logging
from enum import Enum


class StatusCode(Enum):
    OK = "ok"
    FAILED = "failed"
    ERROR = "error"
    SKIPPED = "skipped"


class Status(object):
    def __init__(self, code=StatusCode.OK, message=""):
        self._code = code
        self._message = message

    def code(self):
        return self._code

    def message(self):
        return self._message

    def ok(self):
        return self._code in (StatusCode.OK, StatusCode.SKIPPED)

    @staticmethod
    def log(code: StatusCode, message: str):
        logging.getLogger("verify").warning(f"({code.value}): {message}")
        return Status(code, message)

    def __repr__(self):
        return f"Status({self._code.value}, {self._message!r})"

    def __eq__(self, other):
        return isinstance(other, Status) and (self._code, self._message) == (other._code, other._message)

    def to_json(self):
        return {"code": self._code.value, "message": self._message}

    @staticmethod
    def from_json(obj):
        if not isinstance(obj, dict) or "code" not in obj:
            raise ValueError("status must be an object with a 'code' field")
        return Status(StatusCode(obj["code"]), obj.get("message", ""))
