"""Named pass/fail records collected by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import VerificationError


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class CheckReport:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> Check:
        c = Check(name, bool(ok), detail)
        self.checks.append(c)
        return c

    def zero(self, name: str, value) -> Check:
        """Record that ``value`` (anything with ``is_zero``) vanishes."""
        z = value.is_zero()
        return self.add(name, z, "" if z else f"nonzero: {value}")

    def extend(self, other: CheckReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_if_failed(self) -> CheckReport:
        bad = self.failures()
        if bad:
            names = ", ".join(c.name for c in bad)
            raise VerificationError(f"{self.title}: failed {names}", bad)
        return self

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def __str__(self):
        lines = [f"{self.title}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            lines.append(f"  {'PASS' if c.ok else 'FAIL'} {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines)
