import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import ringcert

FIXTURES = Path(os.environ.get("RINGCERT_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))

CUBIC = [-10, -3, 0, 1]
GOOD_BASIS = [[2, 0, 0], [0, 2, 1], [0, 0, -1]]
POWER_BASIS = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_cauchy_bound():
    assert ringcert.cauchy_bound_scaled([3, 14, 15, 92, 65], Fraction(1, 2)) == Fraction(249, 130)


def test_resultant_and_discriminant():
    assert ringcert.resultant([-2, 1], [-5, 1]) == 3
    assert ringcert.disc_poly([1, 1, 1]) == 3
    assert ringcert.disc_poly(CUBIC) == 2592


@pytest.mark.parametrize("path", sorted((FIXTURES / "bundles").glob("*.bundle")), ids=lambda p: p.stem)
def test_fixture_bundles_verify(path):
    outcome = ringcert.verify_file(path, threads=2)
    assert outcome["status"] == "accepted"
    assert outcome["kind"] == "bundle"


def test_generate_and_claim():
    data = ringcert.generate_bundle(CUBIC, 2, GOOD_BASIS)
    assert ringcert.verify_bytes(data)["status"] == "accepted"
    assert ringcert.bundle_discriminant(data) == -648
    wrong = ringcert.generate_bundle(CUBIC, 2, GOOD_BASIS, claim=-649)
    outcome = ringcert.verify_bytes(wrong)
    assert outcome["status"] == "rejected"
    assert outcome["reason"].startswith("bundle/discriminant-claim/")


def test_not_maximal_reports_prime():
    with pytest.raises(ringcert.GenerationError, match="not maximal at 2"):
        ringcert.generate_bundle(CUBIC, 1, POWER_BASIS)


def test_irreducibility():
    tag, payload = ringcert.generate_irreducibility([1, 0, 0, 0, 1])
    assert tag == "certificate"
    assert ringcert.verify_bytes(payload)["status"] == "accepted"
    tag, factor = ringcert.generate_irreducibility([-1, 0, 1])
    assert tag == "reducible"
    assert len(factor) == 2


def test_verdict_json_is_stable():
    data = (FIXTURES / "bundles" / "cubic_x3-30x-80.bundle").read_bytes()
    one = ringcert.verdict_json(data, 1)
    assert one == ringcert.verdict_json(data, 8)
    assert json.loads(one)["schema_version"] == "ringcert-verdict/1"


def test_malformed_input():
    outcome = ringcert.verify_bytes(b"{not json")
    assert outcome["status"] == "malformed"
    assert outcome["reason"].startswith("parse/")
