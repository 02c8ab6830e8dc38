"""Stage orchestration and JSON artifacts shared by the CLI and the tests."""

from __future__ import annotations

import hashlib
import json
import logging
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any

from . import __version__
from .charvar import CharVariety, charvar_dimension_genus, charvar_first, charvar_second
from .cohomology import GradedBasis, JacobianRing, build_jacobian_ring, compute_graded_basis
from .errors import JacringError, PipelineAssertion
from .higgs import ThetaMatrices, compute_theta_matrices
from .matrixgen import CoeffMatrix, GenConfig, generate_matrix, require_nondegenerate
from .scalar import Field
from .symmetric import PlethysmReport, run_plethysm

log = logging.getLogger(__name__)

STAGES = ("gen-matrix", "cohomology", "higgs", "charvar1", "charvar2", "plethysm")


class StageError(Exception):
    """Wraps a failure with the name of the stage it happened in."""

    def __init__(self, stage: str, error: Exception):
        self.stage = stage
        self.error = error
        super().__init__(f"[{stage}] {type(error).__name__}: {error}")

    @property
    def is_assertion(self) -> bool:
        return isinstance(self.error, PipelineAssertion)


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def digest(obj: Any) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_json(path: str | Path) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def provenance(A: CoeffMatrix) -> dict:
    out = {"package": f"jacring {__version__}", "mode": A.mode, **A.field.to_json()}
    out["seed"] = A.seed
    out["randrange"] = A.randrange
    out["lambda"] = [A.field.format(v) for v in A.lam] if A.lam is not None else None
    return out


@dataclass
class Pipeline:
    """Lazily computed stages for one coefficient matrix."""

    A: CoeffMatrix
    compute_top: bool = False
    workers: int = 1
    timings: dict = dc_field(default_factory=dict)
    _jr: JacobianRing | None = None
    _basis: GradedBasis | None = None
    _theta: ThetaMatrices | None = None

    def _timed(self, stage: str, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        except JacringError as exc:
            raise StageError(stage, exc) from exc
        finally:
            self.timings[stage] = self.timings.get(stage, 0.0) + time.perf_counter() - t0

    @property
    def jr(self) -> JacobianRing:
        if self._jr is None:
            self._jr = self._timed("groebner", lambda: build_jacobian_ring(self.A))
        return self._jr

    @property
    def basis(self) -> GradedBasis:
        if self._basis is None:
            jr = self.jr
            self._basis = self._timed(
                "cohomology", lambda: compute_graded_basis(jr, self.compute_top, self.workers)
            )
        return self._basis

    @property
    def theta(self) -> ThetaMatrices:
        if self._theta is None:
            jr, basis = self.jr, self.basis
            self._theta = self._timed("higgs", lambda: compute_theta_matrices(jr, basis))
        return self._theta

    def charvar(self, order: int) -> CharVariety:
        jr, basis = self.jr, self.basis
        fn = charvar_first if order == 1 else charvar_second
        return self._timed(f"charvar{order}", lambda: fn(jr, basis))

    def invariants(self, v: CharVariety, field: Field) -> dict:
        dim, genus, data = self._timed(f"charvar{v.order}-invariants", lambda: charvar_dimension_genus(v, field))
        return {
            "dimension": dim,
            "arithmetic_genus": genus,
            "genus_convention": "(-1)^dim * (P(0) - 1)",
            "hilbert_polynomial": [str(c) for c in data.hilbert_polynomial],
            "computed_over": field.to_json(),
        }

    def plethysm(self) -> PlethysmReport:
        theta = self.theta
        return self._timed("plethysm", lambda: run_plethysm(theta))


def charvar_payload(p: Pipeline, v: CharVariety) -> dict:
    out = {"provenance": provenance(p.A), **v.to_json()}
    out["equations_digest"] = digest(out["equations"])
    return out


def run_all(
    A: CoeffMatrix,
    *,
    compute_top: bool = False,
    invariants_field: Field | None = None,
    workers: int = 1,
    outdir: str | Path | None = None,
) -> tuple[dict, dict]:
    """Run every stage; returns ``(report, timings)``.

    The report holds only reproducible values so identical inputs give
    byte-identical JSON; wall times are returned separately.
    """
    p = Pipeline(A, compute_top=compute_top, workers=workers)
    basis = p.basis
    theta = p.theta
    cv1 = p.charvar(1)
    cv2 = p.charvar(2)
    pleth = p.plethysm()

    report = {
        "provenance": provenance(A),
        "matrix": A.to_json()["entries"],
        "cohomology": {"dims": list(basis.dims), "total_dim": basis.total_dim, "components": basis.to_json()["components"]},
        "higgs": {"count": len(theta), "digest": digest([m.to_json() for m in theta.mats])},
        "charvar1": {"equations_digest": digest([g.to_json() for g in cv1.equations]), "count": len(cv1.equations)},
        "charvar2": {"equations_digest": digest([g.to_json() for g in cv2.equations]), "count": len(cv2.equations)},
        "plethysm": pleth.to_json(),
    }
    if invariants_field is not None:
        report["charvar1"]["invariants"] = p.invariants(cv1, invariants_field)

    if outdir is not None:
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        write_json(out / "matrix.json", A.to_json())
        write_json(out / "basis.json", basis.to_json())
        write_json(out / "higgs.json", {"provenance": provenance(A), **theta.to_json()})
        write_json(out / "charvar1.json", charvar_payload(p, cv1))
        write_json(out / "charvar2.json", charvar_payload(p, cv2))
        write_json(out / "plethysm.json", {"provenance": provenance(A), **pleth.to_json()})
    return report, dict(p.timings)


def matrix_from_report(report: dict) -> CoeffMatrix:
    """Rebuild the coefficient matrix recorded in an ``all`` report."""
    prov = report["provenance"]
    field = Field.from_json(prov)
    if prov["mode"] != "user" and prov.get("seed") is not None:
        cfg = GenConfig(prov["mode"], randrange=prov.get("randrange") or 10, seed=prov["seed"], field=field)
        return generate_matrix(cfg)
    if prov["mode"] == "hyperelliptic" and prov.get("lambda") is not None:
        cfg = GenConfig("hyperelliptic", field=field)
        return generate_matrix(cfg, user_lambda=[field.parse(v) for v in prov["lambda"]])
    return CoeffMatrix.from_json({**prov, "entries": report["matrix"]})
