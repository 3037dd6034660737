"""Verification reports and their serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import DensePolynomial, TruncatedSeries
from .partitions import Partition


def render(value):
    """JSON-friendly form: rationals as ``"p/q"`` strings, polynomials as
    coefficient lists, partitions in the comma format."""
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return str(value)
    if isinstance(value, DensePolynomial):
        return [str(c) for c in value.coeffs]
    if isinstance(value, TruncatedSeries):
        return [str(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return value


@dataclass
class VerificationReport:
    """Outcome of one identity at one parameter point; ``passed`` iff lhs == rhs."""

    identity: str
    params: dict
    lhs: object
    rhs: object
    passed: bool = field(default=None)
    counterexample: object = None
    detail: object = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.lhs == self.rhs

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": render(self.params),
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "pass": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = render(self.counterexample)
        if self.detail is not None:
            out["detail"] = render(self.detail)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def params_text(self) -> str:
        return " ".join(f"{k}={_short(render(v))}" for k, v in self.params.items())


def _short(v) -> str:
    if isinstance(v, list):
        return "[" + ",".join(map(_short, v)) + "]"
    if isinstance(v, str) and v == "":
        return "()"
    return str(v)


def lines_tsv(reports) -> list:
    rows = ["identity\tparams\tlhs\trhs\tpass"]
    for r in reports:
        rows.append(
            "\t".join([r.identity, r.params_text(), _short(render(r.lhs)), _short(render(r.rhs)),
                       "PASS" if r.passed else "FAIL"])
        )
    return rows


def summary_tsv(reports) -> list:
    """One row per identity: number of points, passes and failures."""
    counts: dict = {}
    for r in reports:
        c = counts.setdefault(r.identity, [0, 0])
        c[0 if r.passed else 1] += 1
    rows = ["identity\tchecked\tpassed\tfailed"]
    for name, (ok, bad) in counts.items():
        rows.append(f"{name}\t{ok + bad}\t{ok}\t{bad}")
    return rows
