"""The check registry: quick positive runs, every mutation control, and
counterexample self-containment."""

from fractions import Fraction

import pytest

from wittmod.expressions import parse_expr, as_witt, print_expr
from wittmod.verifier import REGISTRY, CheckParams, run_check
from wittmod.witt import bracket_oracle, witt_bracket

F = Fraction

# small-but-honest parameters so the whole registry runs in seconds
QUICK = {
    "jacobi": {"m": 1, "n": 1, "deg": 2},
    "bracket_oracle": {"deg": 2},
    "weyl_relations": {"trials": 20},
    "module_axioms": {"deg": 1, "D": 2},
    "commutant_homomorphism": {"deg": 2, "D": 3},
    "commutant_weyl_commute": {"deg": 2, "D": 2},
    "gl_realization": {},
    "whittaker_dimension": {"D": 2},
    "descent_roundtrip": {"trials": 10, "D": 2},
    "weight_multiplicity": {"D": 2},
    "difference_recurrence": {"D": 2, "rmax": 2},
    "difference_annihilation": {"rmax": 8},
    "simplicity_probe": {"trials": 10},
}


@pytest.mark.parametrize("check_id", sorted(REGISTRY))
def test_every_check_passes_small(check_id):
    report = run_check(check_id, QUICK[check_id])
    assert report.status == "pass", report.counterexample
    assert report.cases > 0
    assert report.id == check_id


def test_registry_is_complete():
    assert list(REGISTRY) == [
        "jacobi", "bracket_oracle", "weyl_relations", "module_axioms",
        "commutant_homomorphism", "commutant_weyl_commute",
        "gl_realization", "whittaker_dimension", "descent_roundtrip",
        "weight_multiplicity", "difference_recurrence",
        "difference_annihilation", "simplicity_probe"]


# ---------------------------------------------------------------------------
# mutation controls: each seeded defect must be caught

CONTROLS = [
    ("jacobi", {"m": 1, "n": 1, "deg": 2, "mode": "mutated"}),
    ("bracket_oracle", {"deg": 2, "mode": "verbatim"}),
    ("module_axioms", {"deg": 1, "D": 2, "mode": "mutated"}),
    ("commutant_homomorphism", {"deg": 2, "D": 3, "mode": "tau_flipped"}),
    ("difference_annihilation", {"rmax": 0}),
    ("simplicity_probe", {"rep": "natural", "expect_reducible": True,
                          "trials": 10}),
]


@pytest.mark.parametrize("check_id,params", CONTROLS)
def test_mutation_controls_fail(check_id, params):
    report = run_check(check_id, params)
    assert report.status == "fail"
    assert report.counterexample


def test_reducible_module_is_detected():
    report = run_check("simplicity_probe", {
        "rep": "sum(trivial,trivial)", "expect_reducible": True,
        "trials": 10})
    assert report.status == "pass"
    assert "reducibility_evidence" in report.data


def test_simple_module_probe_covers():
    report = run_check("simplicity_probe", {"rep": "natural", "trials": 10})
    assert report.status == "pass"


# ---------------------------------------------------------------------------
# error routes: bad configuration is an error status, not a crash

def test_singular_twist_is_error_status():
    report = run_check("descent_roundtrip", {"a": (F(0),)})
    assert report.status == "error"
    assert "nonsingular" in report.counterexample["error"]


def test_missing_rep_file_is_error_status():
    report = run_check("whittaker_dimension",
                       {"rep": "file:/nonexistent.rep"})
    assert report.status == "error"


def test_unknown_check_id_raises():
    from wittmod.config import ConfigError
    with pytest.raises(ConfigError):
        run_check("nonsense", {})


# ---------------------------------------------------------------------------
# counterexamples replay standalone

def test_bracket_oracle_counterexample_replays():
    report = run_check("bracket_oracle", {"deg": 2, "mode": "verbatim"})
    cex = report.counterexample
    x = as_witt(parse_expr(cex["x"]), 1, 1)
    y = as_witt(parse_expr(cex["y"]), 1, 1)
    assert print_expr(witt_bracket(x, y, mode="verbatim")) == cex["table"]
    assert print_expr(bracket_oracle(x, y)) == cex["oracle"]
    assert cex["table"] != cex["oracle"]


def test_jacobi_mutation_counterexample_names_the_pair():
    report = run_check("jacobi", {"m": 1, "n": 1, "deg": 2,
                                  "mode": "mutated", "seed": 3})
    assert report.status == "fail"
    assert "mutated_pair" in report.counterexample


# ---------------------------------------------------------------------------
# the pinned minimal annihilation exponents (regression fixture)

def _expected_min_r(s1, s2, alpha, beta, imask, jmask):
    if imask and jmask:
        return 0 if (s1, s2) == ("dt1", "dt1") else 1
    if (s1, s2) == ("dx1", "dx1") and not imask and not jmask \
            and alpha == beta:
        return 0
    return 2


def test_minimal_annihilation_table_matches_fixture():
    report = run_check("difference_annihilation", {})
    assert report.status == "pass"
    table = report.data["minimal_r"]
    assert len(table) == 144
    for label, rmin in table.items():
        head, tail = label.split(" j=")
        s1, s2 = head.split()
        fields = dict(part.split("=") for part in ("j=" + tail).split())
        want = _expected_min_r(s1, s2, int(fields["alpha"]),
                               int(fields["beta"]), int(fields["I"]),
                               int(fields["J"]))
        assert rmin == want, label


def test_report_params_echo_inputs():
    report = run_check("bracket_oracle", {"deg": 1, "m": 2, "n": 1,
                                          "a": (F(1), F(2))})
    assert report.params["deg"] == 1
    assert report.params["m"] == 2
    assert report.params["a"] == ["1", "2"]


def test_checkparams_twist_defaults():
    p = CheckParams(check="jacobi", m=2)
    assert p.a == (F(1), F(1))
