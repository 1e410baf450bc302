from fractions import Fraction
import warnings

import pytest

from bridge_census import formulas as F
from bridge_census.enumeration import census
from bridge_census.errors import DomainError, ModeTieWarning


def golden_k_row(c, data_dir):
    import csv
    with open(data_dir / "golden_k.csv") as fh:
        for rec in csv.DictReader(fh):
            if int(rec["c"]) == c:
                return {int(k): int(v) for k, v in rec.items() if k != "c" and int(v)}
    raise KeyError(c)


@pytest.mark.parametrize("fn, args, expected", [
    (F.e_closed, (9, 5), 32),
    (F.e_closed, (12, 7), 32),
    (F.ep_closed, (11, 6), 8),
    (F.ep_closed, (10, 4), 0),
    (F.ep_closed, (7, 4), 4),
    (F.e_total, (11,), 342),
    (F.e_total, (18,), 43690),
    (F.ep_total, (11,), 22),
    (F.ep_total, (4,), 2),
    (F.ep_total, (12,), 22),
    (F.k_closed, (20, 11), 136),
    (F.k_closed, (9, 4), 12),
    (F.k_closed, (7, 2), 1),
    (F.tbi, (3,), 4),
    (F.tbi, (5,), 16),
    (F.tbi_p, (5,), 4),
    (F.tbi2, (3,), 8),
    (F.tbi2, (5,), 44),
    (F.tbi_p2, (4,), 18),
])
def test_spot_values(fn, args, expected):
    assert fn(*args) == expected


def test_out_of_range_cells_are_zero():
    assert F.e_closed(10, 2) == 0
    assert F.e_closed(10, 7) == 0
    assert F.ep_closed(10, 11) == 0


@pytest.mark.parametrize("c", range(3, 15))
def test_seeds_and_closed_forms_match_census(c):
    cen = census(c)
    assert (cen.tbi, cen.tbi_p, cen.tbi2, cen.tbi_p2) == (
        F.tbi_recursive(c), F.tbi_p_recursive(c), F.tbi2_recursive(c), F.tbi_p2_recursive(c))
    for b, (e, ep, k) in cen.per_braid.items():
        assert (F.e_recursive(c, b), F.ep_recursive(c, b), F.k_closed(c, b)) == (e, ep, k)


@pytest.mark.parametrize("c", [3, 8, 9, 10, 57, 200, 401])
def test_k_row_paths_agree(c):
    assert F.k_row(c) == F.k_row_closed(c)
    assert len(F.k_row(c)) == F.max_braid(c) - 1


@pytest.mark.parametrize("fn", [F.e_total, F.tbi, F.mean_braid, F.variance_braid, F.summary])
def test_domain(fn):
    with pytest.raises(DomainError):
        fn(2)


def test_mean_small():
    assert F.mean_braid(3) == 2
    assert F.mean_braid(4) == 3


def test_mean_matches_golden_k_row12(data_dir):
    row = golden_k_row(12, data_dir)
    expected = Fraction(sum(b * k for b, k in row.items()), sum(row.values()))
    assert F.mean_braid(12) == expected


def test_variance_matches_golden_k_row8(data_dir):
    row = golden_k_row(8, data_dir)
    assert row == {3: 3, 4: 6, 5: 3}
    assert F.variance_braid(8) == Fraction(1, 2)
    assert F.variance_braid(3) == 0 and F.variance_braid(4) == 0


@pytest.mark.parametrize("c", range(3, 60))
def test_variance_from_counts(c):
    row = dict(zip(range(2, F.max_braid(c) + 1), F.k_row(c)))
    n = sum(row.values())
    mean = Fraction(sum(b * k for b, k in row.items()), n)
    var = Fraction(sum(b * b * k for b, k in row.items()), n) - mean**2
    assert (F.mean_braid(c), F.variance_braid(c)) == (mean, var)


def test_asymptotics_at_200():
    assert abs(float(F.mean_braid(200) - (Fraction(200, 3) + Fraction(11, 9)))) < 1e-6
    assert abs(float(F.variance_braid(200) - (Fraction(400, 27) - Fraction(10, 81)))) < 1e-4


def test_mode():
    assert F.mode_braid(10, verify=True) == 5
    assert F.mode_braid(20, verify=True) == 8
    assert F.braid_argmax(10) == [5]


def test_mode_tie_warns_at_5():
    with pytest.warns(ModeTieWarning):
        assert F.mode_braid(5, verify=True) == 3
    assert F.braid_argmax(5) == [2, 3]


def test_mode_no_warning_without_tie():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        F.mode_braid(11, verify=True)


def test_median_examples():
    assert F.median_braid(9) == 4
    assert F.median_braid(12) == 5
    assert F.median_braid(3) == 2


@pytest.mark.parametrize("seq, start, expected", [
    ([1, 2, 1], 1, 2),
    ([5], 2, 2),
    ([0, 3, 0], 1, 2),
    ([1, 1], 2, 3),         # exact split: both qualify
    ([1, 0, 0, 1], 1, 4),  # every index qualifies, largest kept
    ([1, 5, 1, 1], 1, 2),
])
def test_median_index(seq, start, expected):
    assert F.median_index(seq, start) == expected


@pytest.mark.parametrize("seq", [[], [0, 0], [1, -1, 3]])
def test_median_index_rejects(seq):
    with pytest.raises(ValueError):
        F.median_index(seq)


def test_median_indices_at_5():
    assert F.median_indices(F.k_row(5), start=2) == [2, 3]


@pytest.mark.parametrize("c", range(8, 60))
def test_difference_identities(c):
    m = F.predicted_mode(c)
    assert F.e_closed(c, m) - F.e_closed(c, m - 1) == F.diff_below_mode(c)
    assert F.e_closed(c, m) - F.e_closed(c, m + 1) == F.diff_above_mode(c)


def test_summary():
    s = F.summary(8)
    assert s.counts == {2: 0, 3: 3, 4: 6, 5: 3}
    assert (s.mode, s.median, s.mean, s.variance, s.total) == (4, 4, 4, Fraction(1, 2), 12)
    s = F.summary(3)
    assert (s.counts, s.mean, s.variance, s.argmax) == ({2: 1}, 2, 0, (2,))
