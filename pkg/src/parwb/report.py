from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NA = "not_applicable"


@dataclass
class Verdict:
    """Outcome of one named check.

    ``witness`` holds display names so that reports serialize cleanly;
    ``raw`` keeps the index tuple for programmatic use and is not serialized.
    """

    status: str
    witness: tuple | None = None
    reason: str | None = None
    detail: dict = field(default_factory=dict)
    raw: Any = field(default=None, compare=False, repr=False)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.reason is not None:
            d["reason"] = self.reason
        if self.detail:
            d["detail"] = self.detail
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        w = d.get("witness")
        return cls(d["status"], tuple(w) if w is not None else None, d.get("reason"), dict(d.get("detail", {})))


def passed(**detail) -> Verdict:
    return Verdict(PASS, detail=detail)


def failed(witness, raw=None, **detail) -> Verdict:
    return Verdict(FAIL, tuple(witness), detail=detail, raw=raw)


def not_applicable(reason: str) -> Verdict:
    return Verdict(NA, reason=reason)


class InternalConsistencyError(AssertionError):
    """Two computations that must agree did not; signals an implementation bug."""
