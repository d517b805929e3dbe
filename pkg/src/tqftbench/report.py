"""Run reports: deterministic text body, digest of the inputs, timing footer."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3

_EXIT = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "error": EXIT_INPUT, "unsupported": EXIT_UNSUPPORTED}


def digest_inputs(command: str, inputs=()) -> str:
    """sha256 of the command line and the bytes of every input file (or literal string)."""
    h = hashlib.sha256(command.encode())
    for item in inputs:
        p = Path(str(item))
        h.update(b"\0")
        if p.is_file():
            h.update(p.read_bytes())
        elif p.is_dir():
            for f in sorted(x for x in p.rglob("*") if x.is_file()):
                h.update(f.name.encode() + b"\0" + f.read_bytes())
        else:
            h.update(str(item).encode())
    return h.hexdigest()


@dataclass
class RunReport:
    command: str
    digest: str = ""
    items: list[str] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    verdict: str = "pass"
    wall_time: float | None = None

    def add(self, line: str, **record):
        self.items.append(line)
        if record:
            self.records.append(record)

    def fail(self):
        if self.verdict == "pass":
            self.verdict = "fail"

    def merge_verdict(self, verdict: str):
        # error beats unsupported beats fail beats pass
        order = ["pass", "fail", "unsupported", "error"]
        if order.index(verdict) > order.index(self.verdict):
            self.verdict = verdict

    @property
    def exit_code(self) -> int:
        return _EXIT[self.verdict]

    def body(self) -> str:
        lines = [f"# {self.command}"]
        lines += self.items
        lines += [f"warning: {w}" for w in self.warnings]
        lines.append(f"verdict: {self.verdict}")
        lines.append(f"inputs-sha256: {self.digest}")
        return "\n".join(lines) + "\n"

    def render(self) -> str:
        out = self.body()
        if self.wall_time is not None:
            out += f"wall-time: {self.wall_time:.3f}s\n"
        return out

    def dump(self) -> str:
        """key=value records, one per line, for machine consumption."""
        lines = []
        for rec in self.records:
            lines.append(" ".join(f"{k}={_fmt(v)}" for k, v in rec.items()))
        lines.append(f"verdict={self.verdict} digest={self.digest}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    s = str(v)
    return s.replace(" ", "_") if s else "-"
