"""Text, LaTeX and JSON renderings of polynomials and solutions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .ellipsoid import Ellipsoid
from .parser import parse_polynomial
from .poly import Polynomial, format_rational
from .solver import NeumannSolution, VerificationReport, verify_solution

SCHEMA_VERSION = 1


def to_latex(p: Polynomial) -> str:
    """LaTeX rendering; term order matches :meth:`Polynomial.to_text`."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (alpha, c) in enumerate(p.sorted_terms()):
        mono = " ".join(
            f"x_{{{j + 1}}}" if k == 1 else f"x_{{{j + 1}}}^{{{k}}}"
            for j, k in enumerate(alpha) if k
        )
        mag = abs(c)
        if mag.denominator == 1:
            num = "" if (mag == 1 and mono) else str(mag.numerator)
        else:
            num = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        body = " ".join(s for s in (num, mono) if s)
        sign = "-" if c < 0 else "+"
        pieces.append(("-" if c < 0 else "") + body if i == 0 else f" {sign} {body}")
    return "".join(pieces)


def terms_to_json(p: Polynomial) -> List[list]:
    """``[[e1, ..., en, "num/den"], ...]`` in canonical order."""
    return [list(alpha) + [f"{c.numerator}/{c.denominator}"] for alpha, c in p.sorted_terms()]


def terms_from_json(dim: int, rows: List[list]) -> Polynomial:
    terms = {}
    for row in rows:
        if len(row) != dim + 1:
            raise ValueError(f"term {row!r} does not have {dim} exponents and a coefficient")
        alpha = tuple(int(a) for a in row[:dim])
        if alpha in terms:
            raise ValueError(f"duplicate monomial {alpha}")
        terms[alpha] = Fraction(row[dim])
    return Polynomial(dim, terms)


def report_to_json(report: VerificationReport) -> Dict[str, bool]:
    return {
        "laplacian_ok": report.laplacian_ok,
        "boundary_ok": report.boundary_ok,
        "origin_ok": report.origin_ok,
    }


@dataclass(frozen=True)
class SolutionDocument:
    """Serializable solution with certificate, re-checkable by ``verify``."""

    ellipsoid: Ellipsoid
    f: Polynomial
    h: Polynomial
    certificate_g: Polynomial
    g: Optional[Polynomial] = None
    report: Dict[str, bool] = field(default_factory=dict)

    @classmethod
    def from_solution(cls, sol: NeumannSolution, generalized: bool = False) -> "SolutionDocument":
        datum = sol.laplacian_datum if generalized else None
        report = verify_solution(sol.ellipsoid, sol.h, sol.f, datum)
        return cls(sol.ellipsoid, sol.f, sol.h, sol.g, datum, report_to_json(report))

    def to_dict(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "dimension": self.ellipsoid.dim,
            "beta": [format_rational(b) for b in self.ellipsoid.beta],
            "input_f": self.f.to_text(),
        }
        if self.g is not None:
            doc["input_g"] = self.g.to_text()
        doc["h"] = terms_to_json(self.h)
        doc["certificate_g"] = terms_to_json(self.certificate_g)
        doc["report"] = dict(self.report)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "SolutionDocument":
        if doc.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported solution schema {doc.get('schema')!r}")
        e = Ellipsoid(tuple(Fraction(b) for b in doc["beta"]))
        n = int(doc["dimension"])
        if n != e.dim:
            raise ValueError("dimension does not match beta")
        g = parse_polynomial(doc["input_g"], n) if doc.get("input_g") is not None else None
        return cls(
            ellipsoid=e,
            f=parse_polynomial(doc["input_f"], n),
            h=terms_from_json(n, doc["h"]),
            certificate_g=terms_from_json(n, doc.get("certificate_g", [])),
            g=g,
            report=dict(doc.get("report", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> "SolutionDocument":
        return cls.from_dict(json.loads(text))

    def verify(self) -> VerificationReport:
        """Re-derive the report from ``h``, ``f`` and ``g`` alone."""
        return verify_solution(self.ellipsoid, self.h, self.f, self.g)

    def certificate_holds(self) -> bool:
        """Exact identity ``f - S(h) = (q - 1) * certificate_g``."""
        e = self.ellipsoid
        return self.f - e.s_apply(self.h) == (e.q - 1) * self.certificate_g
