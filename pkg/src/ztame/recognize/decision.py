from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ..autgroup.generators import Generator


class Verdict(str, Enum):
    TAME_AUTOMORPHISM = "TameAutomorphism"
    NOT_AUTOMORPHISM = "NotAutomorphism"
    NOT_Z_TAME = "NotZTame"
    TAME_COORDINATE = "TameCoordinate"
    NOT_Z_TAME_COORDINATE = "NotZTameCoordinate"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class Decision:
    """Outcome of a recognizer.

    ``certificate`` is a tame word (leftmost generator composed first) for the
    positive verdicts; ``trace`` lists the reduction steps, one dict each.
    """

    verdict: Verdict
    certificate: Optional[Sequence[Generator]] = None
    reason: Optional[str] = None
    trace: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def is_tame(self) -> bool:
        return self.verdict in (Verdict.TAME_AUTOMORPHISM, Verdict.TAME_COORDINATE)

    def to_json(self, include_trace: bool = True) -> Dict[str, Any]:
        from ..serialize import word_to_json

        out: Dict[str, Any] = {"verdict": self.verdict.value}
        if self.certificate is not None:
            out["certificate"] = word_to_json(self.certificate)
        if self.reason is not None:
            out["reason"] = self.reason
        if include_trace:
            out["trace"] = self.trace
        return out
