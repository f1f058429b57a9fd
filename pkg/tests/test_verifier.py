"""The identity checker itself: every tag passes on an honest grid, the
reports are deterministic and certify correctly, and a corrupted input
triangle is caught with a usable witness."""

import pytest

import degenpoly.triangles as triangles
from degenpoly.algebra import Triangle
from degenpoly.output import reports_to_json
from degenpoly.rationals import Q
from degenpoly.verifier import (
    IDENTITY_DESCRIPTIONS,
    IdentityId,
    SuiteConfig,
    default_lambda_samples,
    lambda_degree_bound,
    run_full_suite,
    verify,
)

ALL_TAGS = list(IdentityId)


def test_manifest_is_complete():
    assert len(ALL_TAGS) == 19
    assert set(IDENTITY_DESCRIPTIONS) == set(ALL_TAGS)
    assert all(IDENTITY_DESCRIPTIONS[t].strip() for t in ALL_TAGS)
    # tags are stable strings, usable from the command line
    assert IdentityId("LEMMA1") is IdentityId.LEMMA1
    assert IdentityId.THM9_ROUNDTRIP.value == "THM9_ROUNDTRIP"


@pytest.mark.parametrize("tag", ALL_TAGS, ids=[t.value for t in ALL_TAGS])
def test_every_identity_passes(tag):
    report = verify(tag, n_max=4)
    assert report.passed, report.witness
    assert report.witness is None
    assert len(report.points) > 0


def test_degree_bound_policy():
    assert lambda_degree_bound(IdentityId.LEMMA1, 8) == 32
    assert lambda_degree_bound(IdentityId.THM10, 5) == 20
    assert lambda_degree_bound(IdentityId.STIRLING_ORTHO, 8) == 0
    assert lambda_degree_bound(IdentityId.WHITNEY_ORACLE, 8) == 0
    assert lambda_degree_bound(IdentityId.THM2_DOBINSKI, 8) == 0
    assert lambda_degree_bound("lemma1", 2) == 8  # accepts lowercase names


def test_default_samples_are_usable():
    samples = default_lambda_samples(33)
    assert len(samples) == 33
    assert len(set(samples)) == 33
    for s in samples:
        assert s != 0
        assert s.denominator != 1  # never an integer
        for m in (2, 3):
            assert (s / m).denominator != 1
    # deterministic and prefix-stable
    assert default_lambda_samples(33) == samples
    assert default_lambda_samples(5) == samples[:5]


def test_certification_requires_enough_samples():
    # bound at n_max=4 is 16; five samples pass but cannot certify
    few = verify("DEG_STIRLING_ORTHO", n_max=4, lambda_samples=default_lambda_samples(5))
    assert few.passed
    assert not few.certified_polynomial_in_lambda
    assert few.distinct_passing_lambda_samples == 5
    # the default grid clears the bound
    full = verify("DEG_STIRLING_ORTHO", n_max=4)
    assert full.certified_polynomial_in_lambda
    assert full.distinct_passing_lambda_samples > full.lambda_degree_bound


def test_numeric_tag_never_certifies():
    report = verify("THM2_DOBINSKI", n_max=4)
    assert report.passed
    assert not report.certified_polynomial_in_lambda
    assert "numeric" in report.notes


def test_lambda_free_tags_certify_without_samples():
    report = verify("STIRLING_ORTHO", n_max=6)
    assert report.passed and report.certified_polynomial_in_lambda
    assert report.lambda_degree_bound == 0


def test_reports_are_deterministic():
    a = reports_to_json([verify("THM9_ROUNDTRIP", n_max=3)])
    b = reports_to_json([verify("THM9_ROUNDTRIP", n_max=3)])
    assert a == b
    cfg = SuiteConfig(n_max=2)
    assert reports_to_json(run_full_suite(cfg)) == reports_to_json(run_full_suite(cfg))


def test_full_suite_order_and_size():
    reports = run_full_suite(SuiteConfig(n_max=2))
    assert [r.identity for r in reports] == ALL_TAGS
    assert all(r.passed for r in reports)


def test_report_serialization_shape():
    d = verify("LEMMA1", n_max=3).to_dict()
    assert d["identity"] == "LEMMA1"
    assert d["passed"] is True
    assert d["witness"] is None
    assert isinstance(d["grid"], list)
    point = d["grid"][0]
    assert set(point) >= {"n", "lambda", "m", "k", "r", "ok"}
    # rationals travel as strings
    assert isinstance(point["lambda"], str)


def _corrupting(original, n0, k0):
    def wrapper(n_max, lam):
        tri = original(n_max, lam)
        rows = [list(r) for r in tri.rows]
        if n_max >= n0:
            rows[n0][k0] = rows[n0][k0] + 1
        return Triangle(tuple(tuple(r) for r in rows))

    return wrapper


def test_fault_injection_is_caught(monkeypatch):
    monkeypatch.setattr(
        triangles,
        "degenerate_stirling2",
        _corrupting(triangles.degenerate_stirling2, 3, 1),
    )
    report = verify("LEMMA1", n_max=5)
    assert not report.passed
    assert not report.certified_polynomial_in_lambda
    assert report.witness is not None
    assert report.witness["n"] == 3  # first grid point touching the bad entry
    assert report.witness["detail"]
    # the corruption also breaks downstream identities that reuse the triangle
    assert not verify("THM6", n_max=5).passed
    assert not verify("THM8", n_max=5).passed


def test_fault_injection_in_whitney_is_caught(monkeypatch):
    original = triangles.degenerate_whitney2

    def wrapper(n_max, m, lam):
        tri = original(n_max, m, lam)
        rows = [list(r) for r in tri.rows]
        if n_max >= 4 and m == 2:
            rows[4][2] = rows[4][2] - Q(1, 3)
        return Triangle(tuple(tuple(r) for r in rows))

    monkeypatch.setattr(triangles, "degenerate_whitney2", wrapper)
    report = verify("THM3_GF", n_max=5)
    assert not report.passed
    assert report.witness["m"] == 2
    assert report.witness["n"] == 4


def test_recovery_after_fault(monkeypatch):
    # caches never outlive a verification call, so clearing the patch
    # restores green without any other cleanup
    monkeypatch.setattr(
        triangles,
        "degenerate_stirling2",
        _corrupting(triangles.degenerate_stirling2, 2, 1),
    )
    assert not verify("LEMMA1", n_max=4).passed
    monkeypatch.undo()
    assert verify("LEMMA1", n_max=4).passed


def test_explicit_lambda_sample_override():
    report = verify("LEMMA1", n_max=3, lambda_samples=(Q(1, 2), Q(-1, 3)))
    lams = {p.lam for p in report.points}
    assert lams == {Q(1, 2), Q(-1, 3)}
    assert report.passed
