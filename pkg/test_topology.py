import pytest
from pydantic import ValidationError

from src.errors import InconsistentDataError, InputError, RangeError
from src.topology import (
    BettiVector,
    LinkComponent,
    LinkProfile,
    euler_characteristic,
    link_betti,
    milnor_fiber_betti,
    singular_fiber_betti,
    smooth_hypersurface_betti,
    specialization_euler_defect,
    specialization_sequence_defect,
    truncated_link_euler,
    wang_sequence_defect,
)


@pytest.mark.parametrize(
    "n, d, expected",
    [
        (3, 5, [1, 0, 1, 204, 1, 0, 1]),
        (2, 4, [1, 0, 22, 0, 1]),
        (1, 3, [1, 2, 1]),
        (1, 2, [1, 0, 1]),
        (2, 1, [1, 0, 1, 0, 1]),
        (2, 3, [1, 0, 7, 0, 1]),
    ],
)
def test_smooth_hypersurface_betti(n, d, expected):
    assert smooth_hypersurface_betti(n, d).ranks == expected


def test_smooth_hypersurface_rejects_bad_degree():
    with pytest.raises(InputError):
        smooth_hypersurface_betti(2, 0)


def test_milnor_fiber_betti():
    assert milnor_fiber_betti(125, 3)[3] == 125
    assert milnor_fiber_betti(0, 2).ranks == [1, 0, 0, 0, 0]
    assert milnor_fiber_betti(1, 2).ranks == [1, 0, 1, 0, 0]


@pytest.mark.parametrize(
    "mu, rank, n, expected",
    [
        (1, 1, 2, [1, 0, 0, 1]),
        (1, 0, 3, [1, 0, 1, 1, 0, 1]),
        (1, 0, 1, [2, 2]),
        (8, 8, 1, [1, 1]),
    ],
)
def test_link_betti(mu, rank, n, expected):
    assert link_betti(mu, rank, n).ranks == expected


def test_link_betti_checks_ranges():
    with pytest.raises(RangeError):
        link_betti(1, 2, 2)
    with pytest.raises(InconsistentDataError):
        link_betti(1, 0, 1, branches=3)


def test_singular_fiber_betti_quintic():
    smooth = smooth_hypersurface_betti(3, 5)
    assert singular_fiber_betti(smooth, 125, 0, 101, 3).ranks == [1, 0, 1, 103, 25, 0, 1]


def test_singular_fiber_betti_kummer():
    smooth = smooth_hypersurface_betti(2, 4)
    assert singular_fiber_betti(smooth, 16, 16, 0, 2).ranks == [1, 0, 6, 0, 1]


def test_singular_fiber_betti_of_smooth_fiber_is_identity():
    smooth = smooth_hypersurface_betti(3, 5)
    assert singular_fiber_betti(smooth, 0, 0, 0, 3) == smooth


def test_singular_fiber_betti_ranges():
    smooth = smooth_hypersurface_betti(2, 4)
    with pytest.raises(RangeError):
        singular_fiber_betti(smooth, 16, 16, 1, 2)
    with pytest.raises(RangeError):
        singular_fiber_betti(smooth, 30, 0, 23, 2)
    with pytest.raises(InputError):
        singular_fiber_betti(smooth_hypersurface_betti(1, 3), 1, 0, 0, 1)


def _links(n, betti, count):
    return LinkProfile(n=n, components=[LinkComponent(label="L", betti=BettiVector(ranks=betti), count=count)])


def test_truncated_link_euler():
    assert truncated_link_euler(_links(3, [1, 0, 1, 1, 0, 1], 16)) == 32
    assert truncated_link_euler(_links(2, [1, 0, 0, 1], 16)) == 16
    assert truncated_link_euler(_links(1, [2, 2], 1)) == 2


def test_link_profile_rejects_non_palindromic_links():
    with pytest.raises(ValidationError):
        _links(2, [1, 1, 0, 1], 1)
    with pytest.raises(ValidationError):
        _links(2, [1, 0, 1], 1)


def test_euler_characteristic():
    assert euler_characteristic([1, 2, 1]) == 0
    assert euler_characteristic(smooth_hypersurface_betti(3, 5)) == -200


def test_specialization_defects_vanish_on_quintic():
    smooth = smooth_hypersurface_betti(3, 5)
    singular = BettiVector(ranks=[1, 0, 1, 103, 25, 0, 1])
    assert specialization_euler_defect(smooth, singular, 125, 3) == 0
    assert specialization_sequence_defect(smooth, singular, 125, 3) == 0


def test_specialization_defect_detects_bad_data():
    smooth = smooth_hypersurface_betti(3, 5)
    singular = BettiVector(ranks=[1, 0, 1, 104, 25, 0, 1])
    assert specialization_sequence_defect(smooth, singular, 125, 3) != 0


@pytest.mark.parametrize("mu, rank, n", [(1, 1, 2), (1, 0, 3), (1, 0, 1), (8, 8, 1), (5, 2, 4)])
def test_wang_sequence_is_exact_on_computed_links(mu, rank, n):
    assert wang_sequence_defect(link_betti(mu, rank, n), mu, rank, n) == (0, 0)


def test_wang_sequence_flags_wrong_link():
    assert wang_sequence_defect(BettiVector(ranks=[1, 0, 1, 1, 0, 1]), 1, 1, 3) == (1, 1)


def test_betti_vector_reads_zero_out_of_range():
    betti = BettiVector(ranks=[1, 2])
    assert betti[5] == 0
    assert betti[-1] == 0
    assert betti.reduced() == [0, 2]
