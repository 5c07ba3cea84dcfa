"""Verification reports with witnesses, serializable to deterministic JSON."""

from __future__ import annotations

import json
from fractions import Fraction

from .scalars import Scalar, format_scalar

__all__ = ["Report", "to_jsonable"]


def to_jsonable(x):
    if isinstance(x, Scalar):
        return format_scalar(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


class Report:
    """Named pass/fail checks; a failing check keeps the first witness found."""

    def __init__(self, window=None):
        self.window = window
        self.atoms_checked = 0
        self.checks = []
        self._index = {}

    def record(self, name, ok, witness=None):
        """Merge a verdict into check ``name``; the first failure keeps its witness."""
        i = self._index.get(name)
        if i is None:
            self._index[name] = len(self.checks)
            self.checks.append({"name": name, "status": "pass" if ok else "fail", "witness": None if ok else witness})
            return
        entry = self.checks[i]
        if not ok and entry["status"] == "pass":
            entry["status"] = "fail"
            entry["witness"] = witness

    def passed(self, name=None):
        if name is None:
            return all(c["status"] == "pass" for c in self.checks)
        i = self._index.get(name)
        if i is None:
            raise KeyError(name)
        return self.checks[i]["status"] == "pass"

    def status(self, name):
        return self.checks[self._index[name]]["status"]

    def witness(self, name):
        return self.checks[self._index[name]]["witness"]

    def names(self):
        return [c["name"] for c in self.checks]

    def failures(self):
        return [c for c in self.checks if c["status"] == "fail"]

    def merge(self, other, prefix=""):
        for c in other.checks:
            self.record(prefix + c["name"], c["status"] == "pass", c["witness"])
        self.atoms_checked += other.atoms_checked
        return self

    def to_dict(self):
        return {
            "checks": [
                {"name": c["name"], "status": c["status"], "witness": to_jsonable(c["witness"]) if c["witness"] is not None else {}}
                for c in self.checks
            ],
            "window": self.window,
            "atoms_checked": self.atoms_checked,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self):
        lines = [f"window: {self.window}  atoms checked: {self.atoms_checked}"]
        for c in self.checks:
            line = f"{c['status'].upper():4}  {c['name']}"
            if c["status"] == "fail":
                line += f"  witness: {json.dumps(to_jsonable(c['witness']))}"
            lines.append(line)
        return "\n".join(lines)

    def __repr__(self):
        bad = [c["name"] for c in self.failures()]
        return f"Report({len(self.checks)} checks, failed={bad})"
