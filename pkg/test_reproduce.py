import pytest

from src.errors import UnknownExampleError
from src.reproduce import CHAIN_EXAMPLES, PROFILE_EXAMPLES, example_ids, reproduce, run_example


def test_example_ids_cover_profiles_and_chains():
    assert set(example_ids()) == set(PROFILE_EXAMPLES) | set(CHAIN_EXAMPLES)


@pytest.mark.parametrize("example_id", example_ids())
def test_bundled_example_passes(example_id):
    frame = run_example(example_id)
    assert list(frame.columns) == ["example", "quantity", "expected", "actual", "status"]
    assert (frame["status"] == "PASS").all(), frame.to_string()


def test_reproduce_all():
    frame, passed = reproduce("all")
    assert passed
    assert set(frame["example"]) == set(example_ids())


def test_unknown_example():
    with pytest.raises(UnknownExampleError):
        run_example("no-such-example")


def test_failures_are_reported(tmp_path, monkeypatch):
    monkeypatch.setitem(CHAIN_EXAMPLES, "disk-pair", {"hi_from_pair": [1, 1, 0]})
    frame, passed = reproduce("disk-pair")
    assert not passed
    assert frame.loc[0, "status"] == "FAIL"
