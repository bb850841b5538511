"""Rankings, profiles, tallies, and the two file formats."""

import pytest
from hypothesis import given, strategies as st

from votemanip.core import (
    Profile,
    ProfileFormatError,
    Ranking,
    all_rankings,
    default_labels,
    format_profile_json,
    format_profile_text,
    pairwise_tally,
    parse_profile_json,
    parse_profile_text,
    ranking_index,
)
from votemanip.fixtures import profile_of, ranking_of


def rankings(n_max=4):
    return st.integers(1, n_max).flatmap(
        lambda n: st.permutations(range(n)).map(lambda p: Ranking(tuple(p)))
    )


def profiles(n=3, m_max=5):
    return st.lists(
        st.sampled_from(all_rankings(n)), min_size=1, max_size=m_max
    ).map(lambda rs: Profile(tuple(rs)))


class TestRanking:
    def test_rejects_non_permutations(self):
        for bad in ((), (0, 0), (1, 2), (0, 2)):
            with pytest.raises(ValueError):
                Ranking(bad)

    def test_position_inverts_order(self):
        r = ranking_of("cab")
        assert r.order == (2, 0, 1)
        assert r.position == (1, 2, 0)
        assert r.rank_of(2) == 1
        assert r.top() == 2 and r.bottom() == 1

    def test_prefers_matches_positions(self):
        r = ranking_of("bca")
        assert r.prefers(1, 2) and r.prefers(2, 0) and not r.prefers(0, 1)

    def test_best_and_worst_of(self):
        r = ranking_of("bca")
        assert r.best_of({0, 2}) == 2
        assert r.worst_of({0, 2}) == 0
        assert r.best_of({0}) == r.worst_of({0}) == 0

    def test_restrict_preserves_relative_order(self):
        r = ranking_of("abc")
        assert r.restrict({0, 2}) == (0, 2)
        assert r.restrict({0, 1, 2}) == (0, 1, 2)
        assert ranking_of("cba").restrict({1}) == (1,)

    def test_restrict_rejects_bad_sets(self):
        r = ranking_of("abc")
        with pytest.raises(ValueError):
            r.restrict(set())
        with pytest.raises(ValueError):
            r.restrict({0, 7})

    @given(rankings())
    def test_restrict_is_idempotent(self, r):
        alive = set(r.order[:: 2])
        once = r.restrict(alive)
        assert tuple(x for x in once if x in alive) == once

    def test_all_rankings_is_lexicographic(self):
        rs = all_rankings(3)
        assert len(rs) == 6
        assert [r.order for r in rs] == sorted(r.order for r in rs)
        assert ranking_index(3)[(2, 1, 0)] == 5


class TestProfile:
    def test_needs_voters_and_common_candidates(self):
        with pytest.raises(ValueError):
            Profile(())
        with pytest.raises(ValueError):
            Profile((ranking_of("abc"), Ranking((0, 1))))

    def test_shape_properties(self):
        p = profile_of("abc bca cab cba")
        assert (p.n, p.m) == (3, 4)
        assert list(p.candidates) == [0, 1, 2]

    def test_replace_ranking_is_pure(self):
        p = profile_of("abc bca")
        q = p.replace_ranking(0, ranking_of("bac"))
        assert q.rankings[0] == ranking_of("bac")
        assert p.rankings[0] == ranking_of("abc")
        with pytest.raises(IndexError):
            p.replace_ranking(2, ranking_of("abc"))
        with pytest.raises(ValueError):
            p.replace_ranking(0, Ranking((1, 0)))

    @given(profiles(), st.data())
    def test_replace_then_restore_roundtrips(self, p, data):
        voter = data.draw(st.integers(0, p.m - 1))
        new = data.draw(st.sampled_from(all_rankings(p.n)))
        restored = p.replace_ranking(voter, new).replace_ranking(
            voter, p.rankings[voter]
        )
        assert restored == p


class TestPairwiseTally:
    def test_counts_and_net_on_worked_profile(self):
        t = pairwise_tally(profile_of("abc bca cab cba"))
        assert t.count(2, 0) == 3
        assert t.count(1, 2) == 2
        assert t.net(2, 0) == 2
        assert t.majority_prefers(2, 0)
        assert not t.majority_prefers(1, 2)  # 2-2 tie

    def test_single_ballot(self):
        t = pairwise_tally(profile_of("abc"))
        assert t.count(0, 1) == t.count(0, 2) == t.count(1, 2) == 1
        assert t.count(1, 0) == t.count(2, 0) == t.count(2, 1) == 0

    def test_diagonal_and_bad_pairs(self):
        t = pairwise_tally(profile_of("abc bca"))
        assert t.count(1, 1) == 0
        with pytest.raises(ValueError):
            t.net(1, 1)

    def test_mirror_ballots_cancel(self):
        t = pairwise_tally(profile_of("abc cba"))
        assert t.net(0, 2) == t.net(0, 1) == t.net(1, 2) == 0

    @given(profiles())
    def test_total_comparisons_fixed_by_shape(self, p):
        t = pairwise_tally(p)
        total = sum(
            t.count(x, y) for x in range(p.n) for y in range(p.n) if x != y
        )
        assert total == p.m * p.n * (p.n - 1) // 2

    @given(profiles())
    def test_net_is_antisymmetric(self, p):
        t = pairwise_tally(p)
        for x in range(p.n):
            for y in range(x + 1, p.n):
                assert t.net(x, y) == -t.net(y, x)


class TestParsing:
    def test_text_roundtrip(self):
        p = profile_of("abc bca cab cba")
        text = format_profile_text(p)
        assert text.splitlines()[0] == "3 4"
        parsed, labels = parse_profile_text(text)
        assert parsed == p and labels == ("a", "b", "c")

    def test_json_roundtrip(self):
        p = profile_of("abcd bdca cabd")
        parsed, labels = parse_profile_json(format_profile_json(p))
        assert parsed == p and labels == default_labels(4)

    def test_json_custom_labels(self):
        doc = '{"candidates": ["x", "y"], "rankings": [["y", "x"], ["x", "y"]]}'
        p, labels = parse_profile_json(doc)
        assert labels == ("x", "y")
        assert p.rankings[0].order == (1, 0)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "line 1"),
            ("3\na b c", "line 1"),
            ("x y\na b", "line 1"),
            ("0 2\n\n", "positive"),
            ("3 2\na b c", "expected 2 ballot lines"),
            ("3 1\na b q", "line 2"),
            ("3 1\na b b", "line 2"),
            ("3 1\na b", "line 2"),
        ],
    )
    def test_text_errors_name_the_line(self, text, fragment):
        with pytest.raises(ProfileFormatError, match=fragment):
            parse_profile_text(text)

    @pytest.mark.parametrize(
        "doc",
        [
            "not json",
            "[]",
            '{"candidates": ["a", "a"], "rankings": [["a", "a"]]}',
            '{"candidates": ["a", "b"], "rankings": []}',
            '{"candidates": ["a", "b"], "rankings": [["a"]]}',
            '{"candidates": ["a", "b"], "rankings": ["ab"]}',
        ],
    )
    def test_json_errors(self, doc):
        with pytest.raises(ProfileFormatError):
            parse_profile_json(doc)

    @given(profiles(n=3), st.booleans())
    def test_both_formats_roundtrip_any_profile(self, p, as_json):
        if as_json:
            parsed, _ = parse_profile_json(format_profile_json(p))
        else:
            parsed, _ = parse_profile_text(format_profile_text(p))
        assert parsed == p

    def test_default_labels_bounds(self):
        assert default_labels(3) == ("a", "b", "c")
        with pytest.raises(ValueError):
            default_labels(0)
        with pytest.raises(ValueError):
            default_labels(27)
