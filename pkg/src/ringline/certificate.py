"""Verification certificates: named checks with pass/fail and witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Certificate:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, list] = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    verdict: object = None

    def check(self, key: str, ok: bool, witnesses=()) -> bool:
        ok = bool(ok)
        self.checks[key] = self.checks.get(key, True) and ok
        if not ok:
            self.witnesses.setdefault(key, []).extend(list(witnesses)[:10])
        return ok

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def merge(self, other: "Certificate", prefix: str | None = None) -> "Certificate":
        prefix = other.name if prefix is None else prefix
        for k, v in other.checks.items():
            self.check(f"{prefix}.{k}", v, other.witnesses.get(k, ()))
        return self

    def to_dict(self) -> dict:
        out = {"name": self.name, "ok": self.ok, "checks": dict(self.checks)}
        if self.witnesses:
            out["witnesses"] = {k: v for k, v in self.witnesses.items()}
        if self.details:
            out["details"] = self.details
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out

    def __bool__(self):
        return self.ok
