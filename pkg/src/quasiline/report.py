"""Verification reports: per-check status, first counterexample, timing."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional


@dataclass
class Check:
    name: str
    ok: bool
    counterexample: Optional[tuple] = None
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        s = f"[{status}] {self.name}"
        if self.counterexample is not None:
            s += " at (" + ", ".join(str(x) for x in self.counterexample) + ")"
        if self.detail:
            s += f": {self.detail}"
        s += f"  ({self.seconds:.3f}s)"
        return s

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "counterexample": None if self.counterexample is None else [str(x) for x in self.counterexample],
            "detail": self.detail,
            "seconds": round(self.seconds, 6),
        }


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def add(self, name: str, ok: bool, counterexample=None, detail: str = "", seconds: float = 0.0) -> Check:
        c = Check(name, bool(ok), None if counterexample is None else tuple(counterexample), detail, seconds)
        self.checks.append(c)
        return c

    def run(self, name: str, fn: Callable[[], Any]) -> Check:
        """Run fn timed.  fn returns bool, or (ok, counterexample[, detail])."""
        t0 = time.perf_counter()
        res = fn()
        dt = time.perf_counter() - t0
        if isinstance(res, tuple):
            ok = res[0]
            cex = res[1] if len(res) > 1 else None
            detail = res[2] if len(res) > 2 else ""
        else:
            ok, cex, detail = bool(res), None, ""
        if ok:
            cex = None
        return self.add(name, ok, cex, detail, dt)

    @contextmanager
    def timed(self, name: str) -> Iterator[dict]:
        """Context form of run: set box['ok'], box['counterexample'], box['detail']."""
        box: dict = {"ok": True, "counterexample": None, "detail": ""}
        t0 = time.perf_counter()
        yield box
        self.add(name, box["ok"], box["counterexample"], box["detail"], time.perf_counter() - t0)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.counterexample, c.detail, c.seconds))

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __str__(self) -> str:
        lines = [f"== {self.title} =="]
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        lines.extend("  " + c.line() for c in self.checks)
        total = sum(c.seconds for c in self.checks)
        lines.append(f"  => {'ALL PASS' if self.ok else 'FAILED'} ({len(self.checks)} checks, {total:.3f}s)")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "info": {k: str(v) for k, v in self.info.items()},
            "checks": [c.to_dict() for c in self.checks],
        }


class AxiomError(ValueError):
    """A constructed object failed verification.  The report is attached."""

    def __init__(self, report: Report):
        self.report = report
        bad = report.failures()
        msg = report.title + ": " + "; ".join(c.line() for c in bad[:3])
        super().__init__(msg)
