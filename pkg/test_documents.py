import json

import pytest
from pydantic import ValidationError

from src.config import REPO_ROOT
from src.documents import ChainDocument, ReportDocument, dump, load_chain, load_profile
from src.errors import InputError
from src.stability import EulerIdentity, MiddleBounds, analyze

PROFILES = REPO_ROOT / "data" / "profiles"
CHAINS = REPO_ROOT / "data" / "chains"


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload, encoding="utf-8")
    return path


def test_load_bundled_profile():
    document = load_profile(PROFILES / "kummer.json")
    assert (document.n, document.d) == (2, 4)
    assert document.singularities[0].count == 16


def test_profile_rejects_unknown_keys(tmp_path):
    path = write(tmp_path, "bad.json", {"n": 2, "d": 4, "colour": "blue"})
    with pytest.raises(InputError, match="colour"):
        load_profile(path)


def test_profile_rejects_malformed_json(tmp_path):
    path = write(tmp_path, "bad.json", "{\"n\": 2,")
    with pytest.raises(InputError):
        load_profile(path)


def test_missing_file_is_an_input_error(tmp_path):
    with pytest.raises(InputError, match="Cannot read"):
        load_profile(tmp_path / "missing.json")


def test_singularity_points_accept_rationals(tmp_path):
    path = write(tmp_path, "p.json", {
        "n": 1,
        "d": 3,
        "polynomial": "-x^3 + x^2*z + y^2*z",
        "variables": ["x", "y", "z"],
        "singularities": [{"label": "node", "point": [0, 0, "1/1"]}],
    })
    profile = load_profile(path).to_profile()
    assert profile.singularities[0].point == ["0", "0", "1/1"]


def test_rho_override_wins():
    profile = load_profile(PROFILES / "fermat-quintic-125.json").to_profile(rho=7)
    assert profile.rho == 7


def test_chain_document_builds_pair():
    pair = load_chain(CHAINS / "pinched-torus.json").to_pair()
    assert pair.manifold_dim == 2
    assert pair.cutoff == 1
    assert load_chain(CHAINS / "pinched-torus.json").to_pair(cutoff=0).cutoff == 0


def test_chain_document_validates_cutoff():
    payload = json.loads((CHAINS / "disk-pair.json").read_text(encoding="utf-8"))
    payload["cutoff"] = -1
    with pytest.raises(ValidationError):
        ChainDocument.model_validate(payload)


def test_report_document_round_trips_through_json():
    report = analyze(load_profile(PROFILES / "kummer.json").to_profile())
    document = ReportDocument.from_report(report)
    payload = json.loads(dump(document))
    assert payload["intersection_space"] == [1, 15, 6, 15, 0]
    assert payload["stable"] is False
    assert payload["trace"] is None
    assert ReportDocument.model_validate(payload) == document


def test_verbose_report_carries_trace():
    report = analyze(load_profile(PROFILES / "kummer.json").to_profile())
    assert ReportDocument.from_report(report, verbose=True).trace


def _numeric_fields(document):
    numeric = []
    for name, value in document:
        if isinstance(value, bool) or value is None:
            continue
        if isinstance(value, (int, MiddleBounds, EulerIdentity)):
            numeric.append(name)
        elif isinstance(value, list) and value and all(isinstance(v, int) for v in value):
            numeric.append(name)
    return numeric


@pytest.mark.parametrize("name", ["kummer", "fermat-quintic-125", "intro-cubic", "conic", "plane-quintic-16"])
def test_every_numeric_report_field_has_provenance(name):
    report = analyze(load_profile(PROFILES / f"{name}.json").to_profile())
    document = ReportDocument.from_report(report)
    missing = [field for field in _numeric_fields(document) if field not in document.provenance]
    assert not missing
