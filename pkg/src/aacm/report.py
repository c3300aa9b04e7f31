from __future__ import annotations

from dataclasses import asdict, dataclass, field

TAGS = (
    "Thm1.1A",
    "Thm1.1B",
    "Cor1.2",
    "Cor1.3",
    "Cor1.4",
    "Thm2A",
    "Thm2B",
    "Lemma5.1",
    "CNF-mod-p",
    "CAACM",
)
VERDICTS = ("pass", "fail", "degenerate")


@dataclass
class VerificationReport:
    """Both sides of one congruence mod p and the resulting verdict."""

    theorem_tag: str
    d: int
    p: int
    lhs: int
    rhs: int
    verdict: str
    h_mod_p: int | None = None
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.theorem_tag not in TAGS:
            raise ValueError(f"unknown theorem tag {self.theorem_tag!r}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        h = "?" if self.h_mod_p is None else self.h_mod_p
        return (
            f"{self.theorem_tag:<10} d={self.d} p={self.p}: lhs={self.lhs} rhs={self.rhs} "
            f"(h mod p={h}) -> {self.verdict}"
        )
