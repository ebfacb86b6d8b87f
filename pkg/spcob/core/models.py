import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from spcob.core.errors import DomainError

Outcome = tuple[bool, Any]


@dataclass
class Report:
    check: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    witness: Any = None
    elapsed_ms: int = 0

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise DomainError(f"failed report {self.check} requires a witness")

    @classmethod
    def timed(cls, check: str, params: dict[str, Any], run: Callable[[], Outcome]) -> "Report":
        """Run a check returning (passed, witness) and stamp the wall time."""
        start = time.monotonic()
        passed, witness = run()
        elapsed = int((time.monotonic() - start) * 1000)
        return cls(check, params, passed, witness, elapsed)

    def to_json(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }
