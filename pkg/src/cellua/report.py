"""Check results and the line-oriented report format."""

from __future__ import annotations

from dataclasses import dataclass, field


def fmt_label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(fmt_label(y) for y in x) + ")"
    return str(x)


def fmt_labels(*xs) -> str:
    return ":".join(fmt_label(x) for x in xs) if xs else "-"


@dataclass(frozen=True)
class CheckResult:
    tag: str
    labels: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"CHECK {self.tag} {self.labels} {'PASS' if self.passed else 'FAIL'}"


@dataclass
class Report:
    """An ordered list of check results."""

    results: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, tag: str, labels, passed: bool, detail: str = "") -> bool:
        if not isinstance(labels, str):
            labels = fmt_labels(*labels) if isinstance(labels, (list, tuple)) else fmt_label(labels)
        self.results.append(CheckResult(tag, labels, bool(passed), detail))
        return bool(passed)

    def note(self, text: str):
        self.notes.append(text)

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        self.notes.extend(other.notes)
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def tags(self) -> set[str]:
        return {r.tag for r in self.results}

    def lines(self, details: bool = False) -> list[str]:
        out = []
        for r in self.results:
            s = r.line()
            if details and r.detail and not r.passed:
                s += f"  # {r.detail}"
            out.append(s)
        return out

    def text(self, details: bool = True) -> str:
        body = self.lines(details)
        body += [f"NOTE {n}" for n in self.notes]
        return "\n".join(body) + ("\n" if body else "")

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"tag": r.tag, "labels": r.labels, "passed": r.passed, "detail": r.detail}
                for r in self.results
            ],
            "notes": list(self.notes),
        }

    def __len__(self):
        return len(self.results)

    def __iter__(self):
        return iter(self.results)
