"""Lotteries induced by an uncertainty set, and stochastic dominance.

Treating each method in the set as equally likely and splitting each
method's ties evenly gives a lottery over candidates: candidate x gets
probability ``sum over methods electing x of 1 / (|S| * |winners|)``.
All arithmetic is exact (``fractions.Fraction``).

One lottery stochastically dominates another for a voter when, walking the
voter's ranking from the top, its cumulative probability is always at
least as large; it strictly dominates when the converse comparison fails
as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import Profile, Ranking, all_rankings
from .manipulation import UncertaintySet

Lottery = tuple[Fraction, ...]


def induced_lottery(methods: UncertaintySet, profile: Profile) -> Lottery:
    """The candidate lottery from even chances over methods and tied winners."""
    share = Fraction(1, len(methods))
    probs = [Fraction(0)] * profile.n
    for f in methods:
        winners = f.winners(profile)
        piece = share / len(winners)
        for x in winners:
            probs[x] += piece
    return tuple(probs)


def _validate_lottery(lottery: Sequence[Fraction], n: int) -> Lottery:
    probs = tuple(Fraction(p) for p in lottery)
    if len(probs) != n:
        raise ValueError(f"lottery has {len(probs)} entries for {n} candidates")
    if any(p < 0 for p in probs) or sum(probs) != 1:
        raise ValueError("lottery probabilities must be nonnegative and sum to 1")
    return probs


class SDComparison(NamedTuple):
    nonstrict: bool
    strict: bool


def stochastically_dominates(
    lottery: Sequence[Fraction], other: Sequence[Fraction], ranking: Ranking
) -> SDComparison:
    """Compares two lotteries by cumulative probability down ``ranking``."""
    probs = _validate_lottery(lottery, ranking.n)
    against = _validate_lottery(other, ranking.n)
    forward = backward = True
    acc = other_acc = Fraction(0)
    for x in ranking.order:
        acc += probs[x]
        other_acc += against[x]
        if acc < other_acc:
            forward = False
        elif acc > other_acc:
            backward = False
    return SDComparison(nonstrict=forward, strict=forward and not backward)


@dataclass(frozen=True)
class SDWitness:
    """A ballot change whose induced lottery strictly dominates the sincere one."""

    voter: int
    true_ranking: Ranking
    new_ranking: Ranking
    before: Lottery
    after: Lottery


def find_sd_manipulation(
    profile: Profile, voter: int, methods: UncertaintySet
) -> SDWitness | None:
    """The voter's first ballot change that strictly improves the lottery.

    Alternatives are tried in lexicographic order, judged by stochastic
    dominance under the voter's sincere ranking.
    """
    true_ranking = profile.rankings[voter]
    before = induced_lottery(methods, profile)
    for alt in all_rankings(profile.n):
        if alt == true_ranking:
            continue
        after = induced_lottery(methods, profile.replace_ranking(voter, alt))
        if stochastically_dominates(after, before, true_ranking).strict:
            return SDWitness(voter, true_ranking, alt, before, after)
    return None


def lottery_strings(lottery: Sequence[Fraction]) -> tuple[str, ...]:
    """Exact string forms like '2/3' and '0', for serialization."""
    return tuple(str(Fraction(p)) for p in lottery)
