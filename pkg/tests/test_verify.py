import pytest

from spcob.core.errors import DomainError
from spcob.verify import Limits, battery, checks, run_all


@pytest.mark.parametrize("r", [1, 2, 3])
def test_symmetric_function_checks(r):
    assert checks.jacobi_trudi(r, 5).passed
    assert checks.h_consistency(r, 5).passed
    assert checks.straightening(r, 5).passed
    assert checks.lr_positivity(r, 4).passed


@pytest.mark.parametrize(("r", "n"), [(1, 1), (1, 3), (2, 2), (2, 4), (2, 5), (3, 5)])
def test_grassmannian_checks(r, n):
    for report in (
        checks.basis_property(r, n),
        checks.thom_inclusion_check(r, n),
        checks.exact_sequence(r, n),
        checks.stabilization_maps(r, n),
    ):
        assert report.passed, (report.check, report.witness)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_hp_ring(n):
    assert checks.hp_ring(n).passed


def test_class_checks():
    assert checks.cartan(3).passed
    assert checks.perp(3).passed
    assert checks.thom_sign(5).passed


def test_symplectic_closure():
    report = checks.symplectic_closure(3)
    assert report.check == "spmat.symplectic_closure"
    assert report.passed, report.witness
    with pytest.raises(DomainError):
        checks.symplectic_closure(1)


def test_report_params_are_recorded():
    report = checks.basis_property(2, 4)
    assert report.check == "grass.basis_property"
    assert report.params == {"r": 2, "n": 4}
    assert report.elapsed_ms >= 0
    assert report.to_json()["pass"] is True


def test_limits_validation():
    with pytest.raises(DomainError):
        Limits(max_r=0)
    with pytest.raises(DomainError):
        Limits(max_r=3, max_n=2)
    with pytest.raises(DomainError):
        Limits(max_deg=-1)


def test_battery_scales_with_limits():
    assert len(battery(Limits(1, 2, 2))) < len(battery(Limits(2, 3, 2)))


def test_run_all_passes_and_is_sorted():
    reports = run_all(Limits(max_r=1, max_n=2, max_deg=3), workers=2)
    assert reports
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]
    names = [r.check for r in reports]
    assert names == sorted(names)
    assert {"grass.basis_property", "stable.tower", "spmat.explicit_matrix", "spmat.shift_product"} <= set(names)


def test_ranks_are_binomial():
    report = checks.ranks(8)
    assert report.check == "grass.ranks"
    assert report.passed


def test_battery_covers_every_coproduct_pair():
    checks_run = [getattr(c, "func", c).__name__ for c in battery(Limits(3, 3, 4))]
    assert checks_run.count("coproduct_injectivity") == 10
    assert checks_run.count("coproduct_generator_images") == 9
