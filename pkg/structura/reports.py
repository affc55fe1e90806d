"""
Line-oriented verification reports.

One record per checked item: status (OK/FAIL), candidate index, subject
and an optional witness rendering. A report without FAIL records is a
successful verification.
"""

from dataclasses import dataclass, field
from typing import Dict, List

OK = "OK"
FAIL = "FAIL"


@dataclass(frozen=True)
class Record:
    status: str
    index: int
    subject: str
    witness: str = ""

    def render(self):
        line = f"{self.status} [{self.index}] {self.subject}"
        if self.witness:
            line = f"{line}: {self.witness}"
        return line

    def to_dict(self):
        return {
            "status": self.status,
            "index": self.index,
            "subject": self.subject,
            "witness": self.witness,
        }


@dataclass
class Report:
    title: str
    records: List[Record] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)

    def add(self, status, subject, witness="", index=None):
        if index is None:
            index = len(self.records)
        record = Record(status, index, subject, witness)
        self.records.append(record)
        return record

    def ok(self, subject, witness="", index=None):
        return self.add(OK, subject, witness, index)

    def fail(self, subject, witness="", index=None):
        return self.add(FAIL, subject, witness, index)

    def note(self, text):
        self.notes.append(text)

    def count(self, key, amount=1):
        self.counts[key] = self.counts.get(key, 0) + amount

    def extend(self, other):
        for record in other.records:
            self.add(
                record.status, record.subject, record.witness, record.index
            )
        self.notes.extend(other.notes)
        for key, value in other.counts.items():
            self.count(key, value)

    @property
    def failures(self):
        return [record for record in self.records if record.status == FAIL]

    @property
    def verified(self):
        return not self.failures

    def summary(self):
        return {"total": len(self.records), "failed": len(self.failures)}

    def render(self):
        lines = [f"# {self.title}"]
        lines.extend(record.render() for record in self.records)
        lines.extend(f"note: {text}" for text in self.notes)
        for key in sorted(self.counts):
            lines.append(f"count {key}: {self.counts[key]}")
        summary = self.summary()
        lines.append(
            f"summary: total={summary['total']} failed={summary['failed']}"
        )
        return "\n".join(lines)

    def to_dict(self):
        return {
            "title": self.title,
            "summary": self.summary(),
            "counts": dict(self.counts),
            "notes": list(self.notes),
            "records": [record.to_dict() for record in self.records],
        }
