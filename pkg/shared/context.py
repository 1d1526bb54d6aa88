from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class ConvexifyContext:
    """
    Shared context object passed between all steps of the convexification pipeline.
    This holds the complete state of one convexify run.
    """
    # Input
    omega_original: Any = None           # PForm
    connection: Any = None               # Connection
    seed_chart: Any = None               # SeedChart
    base: Tuple = ()

    # Set when the chart was rebuilt around a searched Legendrian plane
    search: Any = None                   # LegendrianSearch
    generating: Any = None               # S0

    # Current presentation: omega_original = factor * omega and omega = chart.form()
    omega: Any = None
    chart: Any = None
    factor: Any = None                   # Expr, positive at base

    # Chosen constants
    constants: Dict[str, Any] = field(default_factory=dict)

    # Outputs
    rep: Any = None                      # ConvexRep
    report: Any = None                   # verification Report

    # Verification settings
    samples: int = 200
    seed: int = 0

    # Progress
    steps_completed: List[str] = field(default_factory=list)
    current_step: Optional[str] = None

    def to_dict(self) -> Dict:
        """Convert context to dictionary for logging."""
        return {
            "base": [str(v) for v in self.base],
            "k": getattr(self.seed_chart, "k", None),
            "steps_completed": list(self.steps_completed),
            "constants": {name: str(value) for name, value in self.constants.items()},
            "verified": None if self.report is None else self.report.passed,
            "search": None if self.search is None else self.search.status,
        }
