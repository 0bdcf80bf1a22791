"""One verification outcome, shared by the formula layer and the harness."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CheckResult:
    p: int
    tag: str
    case: str
    lhs: str
    rhs: str
    modulus: str
    passed: bool
    elapsed: float = 0.0
    skipped: bool = False

    def row(self) -> dict:
        """The serialized form (timing deliberately excluded so reports are
        byte-stable across runs and worker counts)."""
        return {
            "p": self.p,
            "tag": self.tag,
            "case": self.case,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "modulus": self.modulus,
            "pass": self.passed,
        }
