"""JSON-serializable verification reports shared by the drivers."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    quiver: str
    w: int
    theorem: str
    counts: dict
    passed: bool
    witness: dict | None = None
    elapsed_ms: int | None = None  # only filled when timing is requested
    params: dict | None = field(default=None)

    def to_dict(self) -> dict:
        out = {"quiver": self.quiver, "w": self.w, "theorem": self.theorem,
               "counts": self.counts, "pass": self.passed, "witness": self.witness,
               "elapsed_ms": self.elapsed_ms}
        if self.params is not None:
            out["params"] = self.params
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["quiver"], d["w"], d["theorem"], d["counts"], d["pass"],
                   d.get("witness"), d.get("elapsed_ms"), d.get("params"))
