"""Invariant reports: one record per oriented front, as JSON or TSV rows."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .complex import Z, Z2, build_complex
from .diagram import OrientedFront
from .homology import GradedHomology, graded_euler_char, homology
from .polynomial import LaurentPoly, legendrian_jones, to_qr
from .states import DEFAULT_CAP

TSV_COLUMNS = ("name", "components", "cusps", "crossings", "reversed", "writhe",
               "left_handed", "tb", "P_Ar", "P_qr", "dim_Z2", "rank_Z", "torsion_Z")


@dataclass(frozen=True)
class InvariantReport:
    name: str
    front: OrientedFront
    polynomial: LaurentPoly
    z2: GradedHomology | None = None
    z: GradedHomology | None = None

    @property
    def polynomial_qr(self) -> LaurentPoly:
        return to_qr(self.polynomial)

    def to_dict(self) -> dict:
        of = self.front
        out = {
            "name": self.name,
            "components": of.diagram.component_count,
            "cusps": of.cusp_count,
            "crossings": of.crossing_count,
            "reversed": sorted(of.reversed),
            "writhe": of.writhe,
            "left_handed": of.left_handed,
            "tb": of.tb,
            "P": {"variables": ["A", "r"], "text": self.polynomial.to_text(),
                  "terms": self.polynomial.to_json_terms()},
            "P_qr": {"variables": ["q", "r"], "text": self.polynomial_qr.to_text(),
                     "terms": self.polynomial_qr.to_json_terms()},
        }
        if self.z2 is not None:
            out["homology_z2"] = self.z2.to_dict()
        if self.z is not None:
            out["homology_z"] = self.z.to_dict()
        return out

    def tsv_row(self) -> list[str]:
        d = self.to_dict()
        dim2 = sum(g.rank for g in self.z2.groups.values()) if self.z2 else ""
        rank = sum(g.rank for g in self.z.groups.values()) if self.z else ""
        tors = ",".join(str(t) for g in self.z.groups.values() for t in g.torsion) if self.z else ""
        vals = [d["name"], d["components"], d["cusps"], d["crossings"],
                ",".join(str(c) for c in d["reversed"]) or "-", d["writhe"], d["left_handed"],
                d["tb"], d["P"]["text"], d["P_qr"]["text"], dim2, rank, tors or "-"]
        return [str(v) for v in vals]


def build_report(name: str, of: OrientedFront, with_homology: bool = True,
                 cap: int | None = DEFAULT_CAP) -> InvariantReport:
    p = legendrian_jones(of, cap)
    if not with_homology:
        return InvariantReport(name, of, p)
    m2 = build_complex(of, Z2, cap)
    if graded_euler_char(m2) != to_qr(p):
        raise AssertionError(f"{name}: Euler characteristic disagrees with P")
    return InvariantReport(name, of, p, homology(m2), homology(build_complex(of, Z, cap)))


def write_tsv(reports: list[InvariantReport], path: str | Path) -> Path:
    path = Path(path)
    lines = ["\t".join(TSV_COLUMNS)] + ["\t".join(r.tsv_row()) for r in reports]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_json(reports: list[InvariantReport], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2) + "\n",
                    encoding="utf-8")
    return path


def schema(name: str) -> dict:
    """A bundled JSON schema: ``jones``, ``homology``, ``report``, ``validate`` or ``check``."""
    ref = resources.files("legkh") / "data" / "schemas" / f"{name}.schema.json"
    return json.loads(ref.read_text(encoding="utf-8"))
