import math

import pytest

from sweepkit import (
    BelowDiagonal,
    Fuss,
    NotCoprime,
    NotFuss,
    WrongStepCounts,
    area,
    coarea,
    dinv,
    enumerate_paths,
    make_frame,
    parse_path,
    path_from_json,
    rank_complement,
    rank_sequence,
    ranks,
    sweep,
)
from helpers import (
    FIG_DINV,
    FIG_FRAME,
    FIG_RANK_SEQUENCE,
    FIG_RANKS,
    FIG_WORD,
    coprime_frames,
    frame_paths,
)


def fig_path():
    return parse_path(make_frame(*FIG_FRAME), FIG_WORD)


class TestMakeFrame:
    def test_non_fuss(self):
        f = make_frame(7, 5)
        assert (f.m, f.n, f.fuss) == (7, 5, None)

    def test_height_one_prefers_plus(self):
        # n=1 forces m = k+1 with k = m-1, canonically sign +1.
        assert make_frame(3, 1).fuss == Fuss(k=2, sign=+1)
        assert make_frame(17, 1).fuss == Fuss(k=16, sign=+1)

    def test_unit_square_is_minus(self):
        assert make_frame(1, 1).fuss == Fuss(k=2, sign=-1)

    def test_plus_wins_over_minus(self):
        # (3,2) fits both 3 = 1*2+1 and 3 = 2*2-1.
        assert make_frame(3, 2).fuss == Fuss(k=1, sign=+1)

    def test_minus_only(self):
        assert make_frame(1, 2).fuss == Fuss(k=1, sign=-1)
        assert make_frame(2, 3).fuss == Fuss(k=1, sign=-1)
        assert make_frame(11, 6).fuss == Fuss(k=2, sign=-1)

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            make_frame(6, 4)

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            make_frame(0, 3)


class TestParsePath:
    def test_golden(self):
        path = fig_path()
        assert ranks(path) == FIG_RANKS
        assert rank_sequence(path).values == FIG_RANK_SEQUENCE

    def test_trivial_strip(self):
        assert parse_path(make_frame(3, 1), "NEEE").steps == "NEEE"

    def test_below_diagonal_reports_prefix(self):
        with pytest.raises(BelowDiagonal) as err:
            parse_path(make_frame(3, 2), "ENNEE")
        assert err.value.prefix == 1

    def test_wrong_counts(self):
        with pytest.raises(WrongStepCounts):
            parse_path(make_frame(3, 2), "NNNEE")
        with pytest.raises(WrongStepCounts):
            parse_path(make_frame(3, 2), "NNEE")

    def test_bad_alphabet(self):
        with pytest.raises(ValueError):
            parse_path(make_frame(3, 2), "NNXEE")

    def test_json_roundtrip(self):
        path = fig_path()
        assert path_from_json(path.to_json()) == path


class TestRanks:
    def test_small(self):
        assert ranks(parse_path(make_frame(3, 2), "NNEEE")) == (0, 3, 6, 4, 2)
        assert ranks(parse_path(make_frame(3, 1), "NEEE")) == (0, 3, 2, 1)

    def test_sorted(self):
        assert rank_sequence(parse_path(make_frame(3, 2), "NNEEE")).values == (0, 2, 3, 4, 6)
        assert rank_sequence(parse_path(make_frame(3, 1), "NEEE")).values == (0, 1, 2, 3)

    def test_distinct_nonnegative_start_zero(self):
        for frame in coprime_frames(11):
            for path in frame_paths(frame.m, frame.n):
                rs = ranks(path)
                assert rs[0] == 0
                assert min(rs) == 0
                assert len(set(rs)) == len(rs)


class TestStatistics:
    def test_area_examples(self):
        assert area(parse_path(make_frame(3, 1), "NEEE")) == 0
        assert area(parse_path(make_frame(3, 2), "NNEEE")) == 1
        assert area(parse_path(make_frame(3, 2), "NENEE")) == 0

    def test_area_of_swept_golden(self):
        assert area(sweep(fig_path())) == 8

    def test_dinv_examples(self):
        assert dinv(fig_path()) == FIG_DINV
        assert dinv(parse_path(make_frame(3, 1), "NEEE")) == 0
        assert dinv(parse_path(make_frame(3, 2), "NENEE")) == 1

    def test_bounds(self):
        for frame in coprime_frames(11):
            bound = frame.statistic_bound()
            for path in frame_paths(frame.m, frame.n):
                assert 0 <= area(path) <= bound
                assert 0 <= dinv(path) <= bound

    def test_coarea(self):
        assert coarea(parse_path(make_frame(3, 1), "NEEE")) == 0
        # k*C(n,2) - area = 1 - 1 on the (3,2) frame
        assert coarea(parse_path(make_frame(3, 2), "NNEEE")) == 0
        assert coarea(parse_path(make_frame(3, 2), "NENEE")) == 1

    def test_coarea_needs_fuss(self):
        with pytest.raises(NotFuss):
            coarea(fig_path())

    def test_coarea_counts_cells_above(self):
        # coarea equals the number of whole cells above the path.
        for frame in coprime_frames(10):
            if frame.fuss is None:
                continue
            for path in frame_paths(frame.m, frame.n):
                above = 0
                x = 0
                for ch in path.steps:
                    if ch == "N":
                        above += x
                    else:
                        x += 1
                assert coarea(path) == above


class TestRankComplement:
    def test_involution_and_dinv(self):
        for frame in coprime_frames(14):
            for path in frame_paths(frame.m, frame.n):
                comp = rank_complement(path)
                assert rank_complement(comp) == path
                assert dinv(comp) == dinv(path)

    def test_small_frame_fixed_points(self):
        # Both (3,2) paths are self-complementary.
        for word in ("NNEEE", "NENEE"):
            path = parse_path(make_frame(3, 2), word)
            assert rank_complement(path) == path


class TestEnumerate:
    def test_small_sets(self):
        assert {p.steps for p in frame_paths(3, 2)} == {"NNEEE", "NENEE"}
        assert {p.steps for p in frame_paths(3, 1)} == {"NEEE"}

    def test_lexicographic_with_n_first(self):
        words = [p.steps for p in frame_paths(5, 3)]
        key = [w.replace("N", "0").replace("E", "1") for w in words]
        assert key == sorted(key)

    def test_counts(self):
        for frame in coprime_frames(16):
            count = math.comb(frame.size, frame.m) // frame.size
            assert len(frame_paths(frame.m, frame.n)) == count

    def test_seventy_five(self):
        assert len(frame_paths(7, 5)) == 66

    def test_prefix_partition(self):
        frame = make_frame(5, 3)
        whole = {p.steps for p in enumerate_paths(frame)}
        pieces = set()
        for prefix in ("NN", "NE"):
            pieces |= {p.steps for p in enumerate_paths(frame, prefix=prefix)}
        assert pieces == whole
