from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SimplicityReport:
    """Verdict plus whatever evidence produced it.

    ``reasons`` are short human-readable lines; ``witnesses`` maps a
    criterion name to the object that refutes it (or, for a positive
    verdict, to supporting data such as a center basis).
    """

    simple: bool
    reasons: list[str] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "Simple" if self.simple else "NotSimple"
