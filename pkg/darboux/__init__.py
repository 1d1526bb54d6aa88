# Seed charts, convexification pipeline and verification
from darboux.chart import (
    SeedChart,
    chart_from_json,
    chart_identity_holds,
    leaf_tangent,
    validate_seed_chart,
)
from darboux.generating import chart_from_generating_function, generating_parameter
from darboux.models import (
    FixtureCase,
    convexifiable_model,
    convexifiable_seed_chart,
    fixture_corpus,
    negative_connection,
    standard_model,
    standard_seed_chart,
)
from darboux.pipeline import (
    PipelineStep,
    SequentialPipeline,
    convexify,
    convexify_context,
    convexify_from_search,
    convexify_pipeline,
    hypothesis_holds,
)
from darboux.report import Report, report_from_json
from darboux.representation import Certificate, ConvexRep, rep_from_json
from darboux.steps import (
    StepResult,
    absorb_quadratic,
    apply_b,
    apply_epsilon,
    apply_phi,
    choose_b,
    choose_c,
    choose_epsilon,
    choose_m,
    normalize_chart,
)
from darboux.submersion import check_submersion, jacobian_at, submersion_kernel
from darboux.verify import leaves_constant, sampled_radius, verify_representation

__all__ = [
    "SeedChart",
    "chart_from_json",
    "chart_identity_holds",
    "leaf_tangent",
    "validate_seed_chart",
    "chart_from_generating_function",
    "generating_parameter",
    "FixtureCase",
    "convexifiable_model",
    "convexifiable_seed_chart",
    "fixture_corpus",
    "negative_connection",
    "standard_model",
    "standard_seed_chart",
    "PipelineStep",
    "SequentialPipeline",
    "convexify",
    "convexify_context",
    "convexify_from_search",
    "convexify_pipeline",
    "hypothesis_holds",
    "Report",
    "report_from_json",
    "Certificate",
    "ConvexRep",
    "rep_from_json",
    "StepResult",
    "absorb_quadratic",
    "apply_b",
    "apply_epsilon",
    "apply_phi",
    "choose_b",
    "choose_c",
    "choose_epsilon",
    "choose_m",
    "normalize_chart",
    "check_submersion",
    "jacobian_at",
    "submersion_kernel",
    "leaves_constant",
    "sampled_radius",
    "verify_representation",
]
