"""Check reports: ordered boolean flags plus witness data for failures."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Report:
    flags: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, flag: str, ok: bool, witness: Optional[Any] = None) -> bool:
        self.flags[flag] = bool(ok)
        if not ok and witness is not None:
            self.witnesses[flag] = witness
        return bool(ok)

    def skip(self, flag: str, reason: str):
        """Note a check that could not run; it does not count towards passed."""
        self.details.setdefault("not_checked", {})[flag] = reason

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    def passed_except(self, *ignored: str) -> bool:
        return all(ok for flag, ok in self.flags.items() if flag not in ignored)

    def failed_flags(self) -> List[str]:
        return [flag for flag, ok in self.flags.items() if not ok]

    def to_json(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "flags": dict(self.flags),
            "witnesses": dict(self.witnesses),
            **({"details": dict(self.details)} if self.details else {}),
        }


def report_from_json(data: Dict[str, Any]) -> Report:
    return Report(
        flags={k: bool(v) for k, v in data.get("flags", {}).items()},
        witnesses=dict(data.get("witnesses", {})),
        details=dict(data.get("details", {})),
    )
