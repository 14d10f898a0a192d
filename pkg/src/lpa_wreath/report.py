from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a probe: pass/fail plus human-readable detail lines."""

    title: str
    passed: bool = True
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    witness: object = None

    def check(self, ok: bool, message: str) -> bool:
        if not ok:
            self.passed = False
            self.failures.append(message)
        return ok

    def fail(self, message: str):
        self.check(False, message)

    def note(self, message: str):
        self.lines.append(message)

    def merge(self, other: Report, prefix: str = ""):
        self.passed = self.passed and other.passed
        self.lines.extend(prefix + s for s in other.lines)
        self.failures.extend(prefix + s for s in other.failures)

    def __bool__(self):
        return self.passed

    def __str__(self):
        out = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        out += [f"  {s}" for s in self.lines]
        out += [f"  FAIL {s}" for s in self.failures[:20]]
        if len(self.failures) > 20:
            out.append(f"  ... {len(self.failures) - 20} more failures")
        return "\n".join(out)
