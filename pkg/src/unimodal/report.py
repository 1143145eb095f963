"""
Report documents and their json / csv / text renderings.

Every number leaves this module exactly: rationals become ``[num, den]``
pairs of decimal strings, integers become decimal strings, polynomials
become ascending coefficient arrays of such pairs.  Partitions stay as
plain arrays of parts.  Rendering is byte-deterministic.
"""

from __future__ import annotations

__all__ = ["Check", "ReportDocument", "exact", "poly_json", "poly2_json",
           "series_json", "write_atomic"]

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import Poly, Poly2
from .symfunc import SymSeries


def exact(c) -> list[str]:
    c = Fraction(c)
    return [str(c.numerator), str(c.denominator)]


def poly_json(p: Poly, length: int | None = None) -> list[list[str]]:
    cs = list(p.coeffs)
    if length is not None:
        cs += [Fraction(0)] * (length - len(cs))
    return [exact(c) for c in cs]


def poly2_json(p: Poly2) -> list:
    """Sparse terms as [x_exponent, y_exponent, [num, den]]."""
    return [[i, j, exact(c)] for i, j, c in p.sorted_terms()]


def coefficient_json(c):
    if isinstance(c, Poly):
        return poly_json(c)
    if isinstance(c, Poly2):
        return poly2_json(c)
    return exact(c)


def series_json(s: SymSeries) -> list[dict]:
    return [{"partition": list(a), "coefficient": coefficient_json(c)}
            for a, c in s.items()]


def _text(value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list) \
            and len(value[0]) == 2 and all(isinstance(v, str) for v in value[0]):
        return "[" + ", ".join(_frac_text(v) for v in value) + "]"
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, str) for v in value):
        return _frac_text(value)
    if isinstance(value, list):
        return "(" + ",".join(str(v) for v in value) + ")"
    if isinstance(value, bool):
        return "pass" if value else "FAIL"
    return str(value)


def _frac_text(pair: list[str]) -> str:
    num, den = pair
    return num if den == "1" else f"{num}/{den}"


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    counterexample: Any = None

    def as_dict(self) -> dict:
        out = {"suite": self.suite, "name": self.name,
               "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class ReportDocument:
    """One command's output.

    ``rows`` is a list of flat dicts sharing keys (a table); ``extra`` holds
    any further payload; ``checks`` carries verification outcomes.
    """
    command: str
    params: dict
    rows: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        results: dict = {}
        if self.rows:
            results["rows"] = self.rows
        results.update(self.extra)
        if self.checks:
            results["checks"] = [c.as_dict() for c in self.checks]
            results["status"] = "pass" if self.passed else "fail"
        if self.notes:
            results["notes"] = self.notes
        return {"command": self.command, "params": self.params, "results": results}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.checks:
            writer.writerow(["suite", "name", "status", "detail"])
            for c in self.checks:
                writer.writerow([c.suite, c.name, "pass" if c.passed else "fail", c.detail])
        else:
            keys = list(self.rows[0]) if self.rows else []
            writer.writerow(keys)
            for row in self.rows:
                writer.writerow([_text(row[k]) for k in keys])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {self.command} " + " ".join(
            f"{k}={self.params[k]}" for k in sorted(self.params))]
        if self.rows:
            keys = list(self.rows[0])
            cells = [[_text(row[k]) for k in keys] for row in self.rows]
            widths = [max(len(k), *(len(r[i]) for r in cells)) for i, k in enumerate(keys)]
            lines.append("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip())
            for r in cells:
                lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        for k in sorted(self.extra):
            lines.append(f"{k}: {self.extra[k] if isinstance(self.extra[k], str) else _text(self.extra[k])}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  [{c.suite}] {c.name}"
            if c.detail:
                line += f"  -- {c.detail}"
            lines.append(line)
            if c.counterexample is not None:
                lines.append(f"      counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
        if self.checks:
            lines.append(f"status: {'pass' if self.passed else 'fail'}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
