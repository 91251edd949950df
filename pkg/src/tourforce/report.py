"""JSON analysis envelope with a canonical, byte-stable serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .counting import bundle
from .decide import ForcingReport, is_locally_forcing
from .errors import ParseError
from .metrics import MetricsReport, necessary_conditions
from .tournament import Tournament, canonical_code

ENVELOPE_KEYS = ("tool_version", "input_code", "forcing", "metrics", "polynomials", "provenance")


def tool_version() -> str:
    return __version__


@dataclass(frozen=True)
class AnalysisEnvelope:
    input_code: str
    forcing: ForcingReport
    metrics: Optional[MetricsReport]
    polynomials: tuple[tuple[str, str], ...]
    provenance: tuple[tuple[str, object], ...] = ()
    tool_version: str = field(default_factory=tool_version)

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "input_code": self.input_code,
            "forcing": self.forcing.to_dict(),
            "metrics": None if self.metrics is None else self.metrics.to_dict(),
            "polynomials": {k: v for k, v in self.polynomials},
            "provenance": {k: v for k, v in sorted(self.provenance)},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisEnvelope":
        if not isinstance(d, dict) or tuple(d) != ENVELOPE_KEYS:
            raise ParseError(f"envelope keys must be exactly {list(ENVELOPE_KEYS)}")
        try:
            return cls(
                tool_version=d["tool_version"],
                input_code=d["input_code"],
                forcing=ForcingReport.from_dict(d["forcing"]),
                metrics=None if d["metrics"] is None else MetricsReport.from_dict(d["metrics"]),
                polynomials=tuple(d["polynomials"].items()),
                provenance=tuple(sorted(d["provenance"].items())),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"malformed envelope: {exc}") from None


def analyze(H: Tournament, provenance: Optional[dict] = None, with_metrics: bool = True) -> AnalysisEnvelope:
    """Verdicts, metrics and polynomials of ``H`` in one envelope."""
    return AnalysisEnvelope(
        input_code=H.code,
        forcing=is_locally_forcing(H),
        metrics=necessary_conditions(H) if with_metrics else None,
        polynomials=tuple(bundle(H).labelled_texts()),
        provenance=tuple(sorted((provenance or {}).items())),
    )


def dumps_canonical(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True, allow_nan=False)


def serialize(e: AnalysisEnvelope) -> str:
    return dumps_canonical(e.to_dict())


def parse(text: str) -> AnalysisEnvelope:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at char {exc.pos}: {exc.msg}") from None
    return AnalysisEnvelope.from_dict(d)


def golden_path(root, code: str, version: Optional[str] = None) -> Path:
    """``<root>/v<major>/<canonical-code>.json`` with the code made filename-safe."""
    major = (version or tool_version()).split(".")[0]
    key = canonical_code(Tournament.from_code(code)).replace("n=", "n").replace(";bits=", "_")
    return Path(root) / f"v{major}" / f"{key}.json"


def write_golden(e: AnalysisEnvelope, root) -> Path:
    path = golden_path(root, e.input_code, e.tool_version)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(e) + "\n")
    return path


def read_golden(root, code: str) -> AnalysisEnvelope:
    return parse(golden_path(root, code).read_text())
