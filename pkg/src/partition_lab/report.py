"""Structured pass/fail results shared by every checker in the package."""

from __future__ import annotations

from dataclasses import dataclass, field

_BOUND_LABELS = {"nmax": "n", "order": "order", "mmax": "m"}


@dataclass
class VerificationReport:
    """Outcome of one exact check, carrying a reproducible witness on failure."""

    name: str
    params: dict[str, object] = field(default_factory=dict)
    passed: bool = True
    witness: str | None = None
    counts: dict[str, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def bounds_label(self) -> str:
        chunks = []
        for key, value in self.params.items():
            label = _BOUND_LABELS.get(key)
            chunks.append(f"{label}<={value}" if label else f"{key}={value}")
        return " ".join(chunks)

    def line(self) -> str:
        """One-line machine-readable verdict, e.g. ``THM12 n<=26 PASS``."""
        label = self.bounds_label()
        head = f"{self.name} {label}" if label else self.name
        return f"{head} {self.status}"

    def text(self) -> str:
        """Multi-line human-readable rendering."""
        lines = [self.line()]
        for key, value in self.counts.items():
            lines.append(f"  {key}: {value}")
        if self.witness is not None:
            lines.append(f"  counterexample: {self.witness}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "status": self.status,
            "witness": self.witness,
            "counts": dict(self.counts),
        }
