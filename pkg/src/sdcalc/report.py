"""Structured result of checking one identity instance."""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    passed: bool
    witness: dict = field(default_factory=dict)
    note: str = ""
