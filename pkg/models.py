"""
Serialisable report records for (m,n)-ring verification runs.
"""
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of one verified property."""
    name: str = ""
    passed: bool = True
    samples: int = 0
    witness: Optional[str] = None  # human-readable counterexample
    skipped: Optional[str] = None  # reason the check did not apply

    def to_dict(self) -> Dict[str, Any]:
        """Convert check result to dictionary."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckResult':
        """Create check result from dictionary."""
        return cls(**data)


@dataclass
class VerificationReport:
    """Everything verify_ring found out about one p-adic class and arity pair."""
    p: int = 2
    precision: int = 1
    a: str = ""  # digit string p:N:...
    b: str = ""
    m: int = 2
    n: int = 2
    degenerate: bool = False
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        for check in self.checks:
            if not check.passed:
                return check
        return None

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary (checks included, plus the overall verdict)."""
        data = asdict(self)
        data['passed'] = self.passed
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        """Create report from dictionary."""
        data = dict(data)
        data.pop('passed', None)
        data['checks'] = [CheckResult.from_dict(check) for check in data.get('checks', [])]
        return cls(**data)


def save_report(report: VerificationReport, filepath: str) -> None:
    """Export a report to a JSON file."""
    with open(filepath, 'w', encoding='utf-8') as f:
        json.dump(report.to_dict(), f, indent=2)


def load_report(filepath: str) -> VerificationReport:
    """Import a report from a JSON file."""
    with open(filepath, 'r', encoding='utf-8') as f:
        return VerificationReport.from_dict(json.load(f))
