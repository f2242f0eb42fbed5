import pytest

from leavitt_lab import Field, Poly
from leavitt_lab.cli import main
from leavitt_lab.core import AlgebraElement, BasisWord
from leavitt_lab.harness import SUITES, SuiteConfig, _Runner, run_suite, shrink
from leavitt_lab.models import ThetaElement


def test_known_suites():
    assert set(SUITES) == {"relations", "oracle-equivalence", "iso-roundtrip", "pmap-relations", "baer",
                           "essential", "socle", "laurent-reduction", "prufer", "torsion", "identities"}


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("unknown-suite")


@pytest.mark.parametrize("kwargs", [{"order": 0}, {"trials": 0}])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        SuiteConfig(**kwargs)


def test_relations_gf5_seed7():
    report = run_suite("relations", SuiteConfig(Field.gf(5), 16, 7, 200))
    assert report.passed and report.failure_count == 0


def test_deterministic_render():
    cfg = SuiteConfig(trials=20, seed=11)
    a = run_suite("essential", cfg)
    b = run_suite("essential", cfg)
    assert a.render() == b.render()
    assert a.to_json() == b.to_json()
    assert "wall_time" in a.to_json(timing=True)


def test_shrinker_minimizes_algebra_element():
    F = Field.rational()
    x = AlgebraElement(F, {BasisWord.cc(1, 0): 3, BasisWord.cc(0, 2): 5, BasisWord.cd(2): 7})

    def check(x):
        return "has d-term" if x.coeff(BasisWord.cd(2)) else None

    (small,) = shrink((x,), check)
    assert small == AlgebraElement.word(F, BasisWord.cd(2))


def test_shrinker_minimizes_theta():
    F = Field.rational()
    t = ThetaElement(F, Poly.parse("1+x", F), [Poly.parse("x^2+1", F), Poly.parse("3", F)], 4)

    def check(t):
        return "q_1 nonzero" if t.tail[1] else None

    (small,) = shrink((t,), check)
    assert not small.head and not small.tail[0] and small.tail[1]


def test_failing_suite_reports_counterexample(monkeypatch, capsys):
    def broken(run: _Runner, S):
        for _ in range(run.cfg.trials):
            x = S.algebra(3, 4)
            run.check((x,), lambda x: "too many terms" if len(x) > 1 else None, ["x"])

    monkeypatch.setitem(SUITES, "broken", ("a suite that fails", broken))
    report = run_suite("broken", SuiteConfig(trials=30))
    assert not report.passed
    assert report.failure_count >= len(report.failures) > 0
    for f in report.failures:
        # shrinking leaves exactly two terms, each with coefficient 1
        assert f.counterexample["x"].count("+") + f.counterexample["x"].count("-") == 1
    assert main(["verify", "broken", "--trials", "30"]) == 1
    assert "FAIL broken" in capsys.readouterr().out


def test_crash_is_a_failure(monkeypatch):
    def crashing(run: _Runner, S):
        run.check((1,), lambda n: 1 / 0)

    monkeypatch.setitem(SUITES, "crash", ("crashes", crashing))
    report = run_suite("crash", SuiteConfig(trials=1))
    assert report.failures[0].message.startswith("ZeroDivisionError")
