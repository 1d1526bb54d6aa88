"""Test the command-line surface: dispatch, exit codes and JSON reports"""
import contextlib
import io
import json
import os
import sys
import tempfile

# Add project root to path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from cli.commands import resolve_options
from cli.main import main, run
from cli.problem import load_problem, problem_from_dict
from config import Settings, settings, validate_settings
from constants import EXIT_INPUT_ERROR, EXIT_MATH_FAILURE, EXIT_OK
from exceptions import ConfigurationError
from core.parser import parse_expr
from core.ring import default_vars
from pfaff.subspace import Subspace, subspace_from_json

FIXTURES = os.path.join(project_root, "fixtures")

MODEL_OMEGA = [{"index": 1, "coeff": "1"}, {"index": 2, "coeff": "x3"}]


def fixture(name):
    return load_problem(os.path.join(FIXTURES, name))


def run_main(argv):
    """Run the entry point and return (exit code, parsed stdout)."""
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(argv)
    return code, json.loads(buffer.getvalue())


def test_rank_command():
    code, report = run("rank", fixture("n3_model.json"))
    assert code == EXIT_OK
    assert report == {"k": 2, "contact": True, "identically_degenerate": True}


def test_rank_on_vanishing_form():
    problem = problem_from_dict({"n": 3, "omega": [{"index": 1, "coeff": "x1"}]})
    code, report = run("rank", problem)
    assert code == EXIT_MATH_FAILURE
    assert report["error"] == "form_vanishes"


def test_kernel_and_cauchy_commands():
    problem = fixture("n3_model.json")
    code, report = run("kernel", problem)
    assert code == EXIT_OK
    kernel = subspace_from_json(report["kernel"])
    assert kernel.same_span(Subspace((0, 0, 0), ((0, 1, 0), (0, 0, 1))))
    code, report = run("cauchy", problem)
    assert code == EXIT_OK and report["cauchy"]["basis"] == []
    code, report = run("bform", problem)
    assert report["bform"]["matrix"] == [["0", "-1/2"], ["1/2", "0"]]


def test_legendrian_commands():
    problem = fixture("n3_model.json")
    code, report = run("leg-check", problem)
    assert code == EXIT_OK
    assert report["legendrian"] and report["positive"]
    assert report["restricted"] == [["1"]]

    code, report = run("leg-findpos", problem)
    assert code == EXIT_OK
    assert report["status"] == "found"
    assert report["S"] == [["-1"]]

    data = problem.model_dump(exclude_none=True)
    data["subspace"] = {"basis": [["1", "0", "0"]]}
    code, report = run("leg-check", problem_from_dict(data))
    assert code == EXIT_MATH_FAILURE
    assert report == {"legendrian": False, "dim": 1}


def test_leg_sample_command():
    problem = problem_from_dict({"n": 3, "omega": MODEL_OMEGA, "S0": [["1/2"]]})
    code, report = run("leg-sample", problem)
    assert code == EXIT_OK
    W = subspace_from_json(report["subspace"])
    assert W.same_span(Subspace((0, 0, 0), ((0, 1, -1),)))


def test_hessian_and_somega_commands():
    problem = fixture("n3_model.json")
    code, report = run("hessian", problem)
    assert code == EXIT_OK
    assert report["at_point"] == [["2", "1", "0"], ["1", "2", "0"], ["0", "0", "2"]]
    assert report["definiteness"] == "positive_definite"
    assert report["strictly_convex"]

    code, report = run("somega", problem)
    assert report["definiteness"] == "indefinite"
    assert report["on_leaf_tangent"] == [["0"]]
    assert not report["positive_on_leaf_tangent"]


def test_chart_commands():
    code, report = run("chart-validate", fixture("n3_model.json"))
    assert code == EXIT_OK and report["passed"]

    code, report = run("chart-genfn", fixture("n3_convexify.json"))
    assert code == EXIT_OK
    assert parse_expr(report["chart"]["y"][1], default_vars(3)).equals(parse_expr("x3 - x2", default_vars(3)))
    assert subspace_from_json(report["leaf_tangent"]).same_span(Subspace((0, 0, 0), ((0, 1, 1),)))

    data = fixture("n3_model.json").model_dump(exclude_none=True)
    data["chart"]["p"] = ["x3 + 1"]
    code, report = run("chart-validate", problem_from_dict(data))
    assert code == EXIT_MATH_FAILURE
    assert not report["passed"]


def test_convexify_command():
    code, report = run("convexify", fixture("n3_convexify.json"))
    assert code == EXIT_OK
    certificate = report["certificate"]
    assert (certificate["c"], certificate["m"], certificate["b"], certificate["epsilon"]) == ("2", "1", "1", "1/2")
    assert report["verification"]["passed"]
    assert len(report["steps"]) == 8


def test_convexify_higher_dimensions():
    for name in ("n4_convexify.json", "n5_convexify.json"):
        code, report = run("convexify", fixture(name), samples=50)
        assert code == EXIT_OK, report
        assert report["verification"]["passed"]


def test_convexify_reports_violated_hypothesis():
    code, report = run("convexify", fixture("n3_negative.json"))
    assert code == EXIT_MATH_FAILURE
    assert report["error"] == "hypothesis_violated"
    assert report["step"] == "precondition"


def test_convexify_without_S0_searches():
    for name, S0 in (("n3_convexify.json", [["2"]]), ("n5_convexify.json", [["2", "0"], ["0", "2"]])):
        data = fixture(name).model_dump(exclude_none=True)
        del data["S0"]
        code, report = run("convexify", problem_from_dict(data), samples=50)
        assert code == EXIT_OK, report
        assert report["search"]["status"] == "found"
        assert report["S0"] == S0
        assert report["verification"]["passed"]

    data = fixture("n3_negative.json").model_dump(exclude_none=True)
    del data["S0"]
    code, report = run("convexify", problem_from_dict(data))
    assert code == EXIT_MATH_FAILURE
    assert report["step"] == "legendrian_search"


def test_convexify_keeps_a_chart_that_already_fits():
    data = fixture("n3_convexify.json").model_dump(exclude_none=True)
    del data["S0"]
    data["chart"] = {"a": "1", "y": ["x1 + x2*x3 - 1/2*x2^2", "x3 - x2"], "p": ["-x2"]}
    code, report = run("convexify", problem_from_dict(data))
    assert code == EXIT_OK
    assert "search" not in report
    certificate = report["certificate"]
    assert (certificate["c"], certificate["m"], certificate["b"], certificate["epsilon"]) == ("2", "1", "1", "1/2")


def test_verify_accepts_pipeline_output():
    problem = fixture("n3_convexify.json")
    _, report = run("convexify", problem, samples=50)
    data = problem.model_dump(exclude_none=True)
    data["rep"] = report["rep"]
    code, verification = run("verify", problem_from_dict(data), samples=50)
    assert code == EXIT_OK
    assert verification["passed"]


def test_submersion_command():
    code, report = run("submersion", fixture("n3_model.json"))
    assert code == EXIT_OK
    assert (report["rank"], report["expected_rank"]) == (3, 3)
    problem = problem_from_dict({"n": 3, "omega": MODEL_OMEGA, "functions": ["x1", "2*x1"]})
    code, report = run("submersion", problem)
    assert code == EXIT_MATH_FAILURE
    assert report["rank"] == 1


def test_parse_error_reports_position():
    problem = problem_from_dict({"n": 3, "omega": [{"index": 1, "coeff": "x1 + "}]})
    code, report = run("rank", problem)
    assert code == EXIT_INPUT_ERROR
    assert report["position"] == 5


def test_connection_conflict_is_input_error():
    problem = problem_from_dict({
        "n": 3,
        "omega": MODEL_OMEGA,
        "connection": [{"k": 1, "i": 2, "j": 3, "coeff": "1"}, {"k": 1, "i": 3, "j": 2, "coeff": "2"}],
        "u": "x1",
    })
    code, report = run("hessian", problem)
    assert code == EXIT_INPUT_ERROR
    assert report["error"] == "connection_conflict"


def test_missing_section_is_input_error():
    problem = problem_from_dict({"n": 3, "omega": MODEL_OMEGA})
    code, report = run("chart-validate", problem)
    assert code == EXIT_INPUT_ERROR
    assert report["error"] == "invalid_input"


def test_option_precedence():
    problem = fixture("n3_model.json")
    assert resolve_options(problem, seed=5).seed == 5
    assert resolve_options(problem).seed == 0
    assert resolve_options(problem).budget == 500
    bare = problem_from_dict({"n": 3, "omega": MODEL_OMEGA})
    assert resolve_options(bare).samples == settings.DEFAULT_SAMPLES


def test_settings_validation():
    assert validate_settings(Settings()).DEFAULT_SAMPLES == settings.DEFAULT_SAMPLES
    bad = (
        ("DEFAULT_SAMPLES", 0),
        ("SEARCH_GRID", []),
        ("SAMPLE_RADIUS_START", "-1/2"),
        ("SAMPLE_RADIUS_START", "half"),
        ("LOG_LEVEL", "LOUD"),
    )
    for key, value in bad:
        try:
            validate_settings(Settings(**{key: value}))
            assert False, f"expected {key}={value!r} to be rejected"
        except ConfigurationError as exc:
            assert exc.config_key == key


def test_main_reads_fixture():
    code, report = run_main(["rank", "--input", os.path.join(FIXTURES, "n3_model.json")])
    assert code == EXIT_OK
    assert report["k"] == 2


def test_main_rejects_bad_files():
    code, report = run_main(["rank", "--input", os.path.join(FIXTURES, "missing.json")])
    assert code == EXIT_INPUT_ERROR

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "bad.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write('{"n": 3, "omega": [')
        code, report = run_main(["rank", "--input", path])
        assert code == EXIT_INPUT_ERROR
        assert "position" in report

        with open(path, "w", encoding="utf-8") as f:
            json.dump({"n": 3, "omega": [{"index": 4, "coeff": "1"}]}, f)
        code, report = run_main(["rank", "--input", path])
        assert code == EXIT_INPUT_ERROR


if __name__ == "__main__":
    print("Testing the command-line surface...")
    print("=" * 60)
    failures = 0
    for name, test in list(globals().items()):
        if name.startswith("test_") and callable(test):
            try:
                test()
                print(f"✅ {name}")
            except Exception as e:
                failures += 1
                print(f"❌ {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failures else 0)
