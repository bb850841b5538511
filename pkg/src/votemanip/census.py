"""Exhaustive and sampled censuses of manipulable profiles.

A census fixes (n, m), a manipulation notion, a dominance kind, and one or
more uncertainty sets, then reports for each set how many of the (n!)^m
labeled profiles have at least one witnessing voter, along with the number
of witnessing pointed profiles (profile, voter pairs).  Percentages come
from exact integer counts and are rounded only when displayed.

Profiles are enumerated in lexicographic order (voter 0's ranking most
significant) and the enumeration is split into contiguous chunks keyed by
the first voters' rankings, so multi-worker runs reduce partial sums in a
fixed order and totals never depend on the worker count.

All eleven base methods and the tiebreak extension are anonymous, so a
profile's winners, and hence every witness verdict, depend only on how
many voters hold each ranking.  The engine memoizes winners and witness
verdicts on that ranking-count vector; the labeled scan then only counts
how many profiles fall into each class.  Uncertainty sets containing a
pairwise dictator are not anonymous and take a direct per-profile path.

Sampling draws each voter's ranking independently and uniformly using
numpy's PCG64 generator; the whole sample stream is materialized up front
from the one seed, so sampled counts are also identical for any worker
count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from .core import Profile, all_rankings
from .manipulation import UncertaintySet, _validate, notion_holds
from .dominance import dominates_nonstrict, dominates_strict
from .methods import VotingMethod

DEFAULT_BUDGET = 20_000_000


class BudgetExceededError(RuntimeError):
    """A census that would enumerate more profiles than the budget allows."""


@dataclass(frozen=True)
class CensusSpec:
    """A fully resolved census request."""

    n: int
    m: int
    method_sets: tuple[UncertaintySet, ...]
    notion: str = "sure"
    kind: str = "weak"
    weights: tuple[Fraction, ...] | None = None
    mode: str = "exhaustive"
    samples: int = 0
    seed: int | None = None
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError("need at least one candidate and one voter")
        if not self.method_sets:
            raise ValueError("a census needs at least one uncertainty set")
        ids = [s.id for s in self.method_sets]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate uncertainty sets in census")
        if self.mode not in ("exhaustive", "sample"):
            raise ValueError(f"unknown census mode {self.mode!r}")
        if self.mode == "sample":
            if self.samples < 1:
                raise ValueError("sample mode needs a positive sample count")
            if self.seed is None:
                raise ValueError("sample mode needs an explicit seed")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        normalized = None
        for s in self.method_sets:
            normalized = _validate(self.notion, self.kind, s, self.weights)
        object.__setattr__(self, "weights", normalized)

    @property
    def total(self) -> int:
        if self.mode == "sample":
            return self.samples
        return math.factorial(self.n) ** self.m

    def config(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "sets": [s.id for s in self.method_sets],
            "notion": self.notion,
            "kind": self.kind,
            "weights": None if self.weights is None else [str(w) for w in self.weights],
            "mode": self.mode,
            "samples": self.samples if self.mode == "sample" else None,
            "seed": self.seed if self.mode == "sample" else None,
            "workers": self.workers,
            "budget": self.budget,
        }


@dataclass(frozen=True)
class CensusResult:
    """Witness counts for one uncertainty set."""

    set_id: str
    notion: str
    kind: str
    n: int
    m: int
    total: int
    witness_profiles: int
    witness_pointed: int

    @property
    def percentage(self) -> float:
        return 100.0 * self.witness_profiles / self.total


@dataclass(frozen=True)
class CensusReport:
    spec: CensusSpec
    results: tuple[CensusResult, ...]

    def by_set(self) -> dict[str, CensusResult]:
        return {r.set_id: r for r in self.results}


# --- profile sources --------------------------------------------------------


def enumerate_profiles(n: int, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[Profile]:
    """All (n!)^m labeled profiles in lexicographic order, voter 0 outermost."""
    total = math.factorial(n) ** m
    if total > budget:
        raise BudgetExceededError(f"{total} profiles exceed the budget of {budget}")
    for combo in product(all_rankings(n), repeat=m):
        yield Profile(combo)


def _sample_rows(n: int, m: int, count: int, seed: int) -> list[list[int]]:
    # One materialized stream per seed keeps sampled censuses reproducible
    # for any worker count.
    rng = np.random.Generator(np.random.PCG64(seed))
    rows = rng.integers(0, math.factorial(n), size=(count, m), dtype=np.int64)
    return rows.tolist()


def sample_profiles(n: int, m: int, count: int, seed: int) -> list[Profile]:
    """``count`` profiles with each voter's ranking drawn i.i.d. uniformly."""
    if count < 1:
        raise ValueError("sample count must be positive")
    rankings = all_rankings(n)
    return [
        Profile(tuple(rankings[d] for d in row))
        for row in _sample_rows(n, m, count, seed)
    ]


# --- the anonymous-class kernel ----------------------------------------------


class _ClassKernel:
    """Winner sets and witness verdicts memoized per ranking-count vector.

    Keys are ``bytes(counts)`` where ``counts[i]`` is the number of voters
    holding the i-th lexicographic ranking; this is exactly the information
    an anonymous method can see.
    """

    def __init__(self, spec: CensusSpec) -> None:
        self.notion = spec.notion
        self.kind = spec.kind
        self.rankings = all_rankings(spec.n)
        self.fact = len(self.rankings)
        universe: list[VotingMethod] = []
        seen: dict[str, int] = {}
        members: list[tuple[int, ...]] = []
        for s in spec.method_sets:
            idxs = []
            for f in s:
                if f.id not in seen:
                    seen[f.id] = len(universe)
                    universe.append(f)
                idxs.append(seen[f.id])
            members.append(tuple(idxs))
        self.universe = tuple(universe)
        self.set_members = tuple(members)
        self.set_weights: tuple[tuple[Fraction, ...] | None, ...] = tuple(
            spec.weights for _ in spec.method_sets
        )
        self.all_anonymous = all(f.anonymous for f in self.universe)
        self._anon = tuple(u for u, f in enumerate(self.universe) if f.anonymous)
        self._winners: dict[bytes, tuple[frozenset[int], ...]] = {}
        self._flags: dict[tuple, tuple[bool, bool, bool]] = {}
        self._classes: dict[bytes, tuple[tuple[bool, ...], tuple[int, ...]]] = {}

    def _profile_for(self, key: bytes) -> Profile:
        rs: list = []
        for idx, cnt in enumerate(key):
            if cnt:
                rs.extend((self.rankings[idx],) * cnt)
        return Profile(tuple(rs))

    def winners_for(self, key: bytes) -> tuple[frozenset[int], ...]:
        """Winner sets of the whole universe on this class (anonymous only)."""
        assert self.all_anonymous
        w = self._winners.get(key)
        if w is None:
            profile = self._profile_for(key)
            w = self._winners[key] = tuple(f.fn(profile) for f in self.universe)
        return w

    def mixed_winners(self, key: bytes, profile: Profile) -> tuple[frozenset[int], ...]:
        """Winner sets when some universe methods are not anonymous."""
        anon = self._winners.get(key)
        if anon is None:
            synthetic = self._profile_for(key)
            anon = self._winners[key] = tuple(
                self.universe[u].fn(synthetic) for u in self._anon
            )
        out = []
        at = 0
        for u, f in enumerate(self.universe):
            if f.anonymous:
                out.append(anon[at])
                at += 1
            else:
                out.append(f.fn(profile))
        return tuple(out)

    def flag(self, r_idx: int, before: frozenset[int], after: frozenset[int]
             ) -> tuple[bool, bool, bool]:
        """(improves, not_worse, worsens) for a winner-set move, memoized."""
        cache_key = (r_idx, before, after)
        f = self._flags.get(cache_key)
        if f is None:
            ranking = self.rankings[r_idx]
            f = self._flags[cache_key] = (
                dominates_strict(self.kind, after, before, ranking),
                dominates_nonstrict(self.kind, after, before, ranking),
                dominates_strict(self.kind, before, after, ranking),
            )
        return f

    def class_result(self, key: bytes) -> tuple[tuple[bool, ...], tuple[int, ...]]:
        """Per-set (any-voter witness, pointed-witness count) for one class."""
        hit = self._classes.get(key)
        if hit is None:
            hit = self._classes[key] = self._evaluate(key)
        return hit

    def _evaluate(self, key: bytes) -> tuple[tuple[bool, ...], tuple[int, ...]]:
        base = self.winners_for(key)
        nsets = len(self.set_members)
        bits = [False] * nsets
        pointed = [0] * nsets
        for r_idx, cnt in enumerate(key):
            if not cnt:
                continue
            hits = self._ranking_hits(key, r_idx, base)
            for s in range(nsets):
                if hits[s]:
                    bits[s] = True
                    pointed[s] += cnt
        return tuple(bits), tuple(pointed)

    def _ranking_hits(self, key: bytes, r_idx: int, base) -> list[bool]:
        nsets = len(self.set_members)
        hits = [False] * nsets
        ranking = self.rankings[r_idx]
        # No outcome beats a unanimous win for this voter's top candidate,
        # so no notion can be witnessed from here.
        top_single = frozenset((ranking.order[0],))
        if all(w == top_single for w in base):
            return hits
        remaining = nsets
        nuniv = len(self.universe)
        flags: list = [None] * nuniv
        for r2 in range(self.fact):
            if r2 == r_idx:
                continue
            ba = bytearray(key)
            ba[r_idx] -= 1
            ba[r2] += 1
            after = self.winners_for(bytes(ba))
            for u in range(nuniv):
                flags[u] = None
            for s in range(nsets):
                if hits[s]:
                    continue
                fl = []
                for u in self.set_members[s]:
                    f = flags[u]
                    if f is None:
                        f = flags[u] = self.flag(r_idx, base[u], after[u])
                    fl.append(f)
                if notion_holds(self.notion, fl, self.set_weights[s]):
                    hits[s] = True
                    remaining -= 1
            if not remaining:
                break
        return hits


# --- labeled scans ------------------------------------------------------------


def _count_classes_range(args: tuple[int, int, int, int]) -> dict[bytes, int]:
    """Counts labeled profiles per ranking-count class over [start, end)."""
    n, m, start, end = args
    fact = math.factorial(n)
    digits = [0] * m
    x = start
    for v in range(m - 1, -1, -1):
        digits[v] = x % fact
        x //= fact
    counts = [0] * fact
    for d in digits:
        counts[d] += 1
    out: dict[bytes, int] = {}
    remaining = end - start
    key = bytes(counts)
    while True:
        out[key] = out.get(key, 0) + 1
        remaining -= 1
        if not remaining:
            return out
        v = m - 1
        while True:  # odometer with carry, voter 0 most significant
            d = digits[v]
            counts[d] -= 1
            if d + 1 < fact:
                digits[v] = d + 1
                counts[d + 1] += 1
                break
            digits[v] = 0
            counts[0] += 1
            v -= 1
        key = bytes(counts)


def _worker_ranges(fact: int, m: int, workers: int) -> list[tuple[int, int]]:
    """Contiguous index ranges aligned on first-voters ranking prefixes."""
    total = fact**m
    if workers <= 1:
        return [(0, total)]
    prefix = 2 if m >= 2 else 1
    step = fact ** (m - prefix)
    nchunks = fact**prefix
    base, extra = divmod(nchunks, workers)
    ranges = []
    at = 0
    for w in range(workers):
        take = base + (1 if w < extra else 0)
        if take:
            ranges.append((at * step, (at + take) * step))
            at += take
    return ranges


def _merge_counts(parts: Sequence[dict[bytes, int]]) -> dict[bytes, int]:
    merged: dict[bytes, int] = {}
    for part in parts:
        for key, cnt in part.items():
            merged[key] = merged.get(key, 0) + cnt
    return merged


def _count_all_classes(n: int, m: int, workers: int) -> dict[bytes, int]:
    fact = math.factorial(n)
    ranges = _worker_ranges(fact, m, workers)
    if len(ranges) == 1:
        return _count_classes_range((n, m, ranges[0][0], ranges[0][1]))
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:  # no fork on this platform: identical totals either way
        parts = [_count_classes_range((n, m, s, e)) for s, e in ranges]
        return _merge_counts(parts)
    with ctx.Pool(min(workers, len(ranges))) as pool:
        parts = pool.map(_count_classes_range, [(n, m, s, e) for s, e in ranges])
    return _merge_counts(parts)


def _count_sample_classes(rows: Sequence[Sequence[int]], fact: int) -> dict[bytes, int]:
    out: dict[bytes, int] = {}
    for row in rows:
        counts = [0] * fact
        for d in row:
            counts[d] += 1
        key = bytes(counts)
        out[key] = out.get(key, 0) + 1
    return out


def _aggregate(spec: CensusSpec, kernel: _ClassKernel,
               class_counts: dict[bytes, int]) -> tuple[CensusResult, ...]:
    nsets = len(spec.method_sets)
    profiles = [0] * nsets
    pointed = [0] * nsets
    for key, cnt in class_counts.items():
        bits, pts = kernel.class_result(key)
        for s in range(nsets):
            if bits[s]:
                profiles[s] += cnt
                pointed[s] += cnt * pts[s]
    return tuple(
        CensusResult(
            set_id=s.id, notion=spec.notion, kind=spec.kind, n=spec.n, m=spec.m,
            total=spec.total, witness_profiles=profiles[i], witness_pointed=pointed[i],
        )
        for i, s in enumerate(spec.method_sets)
    )


def _run_direct(spec: CensusSpec, kernel: _ClassKernel) -> tuple[CensusResult, ...]:
    """Per-profile scan for censuses that include non-anonymous methods."""
    fact = kernel.fact
    rankings = kernel.rankings
    nsets = len(spec.method_sets)
    profiles_count = [0] * nsets
    pointed_count = [0] * nsets
    if spec.mode == "sample":
        rows: Iterator[Sequence[int]] = iter(
            _sample_rows(spec.n, spec.m, spec.samples, spec.seed)
        )
    else:
        rows = product(range(fact), repeat=spec.m)
    nuniv = len(kernel.universe)
    for digits in rows:
        counts = [0] * fact
        for d in digits:
            counts[d] += 1
        key = bytes(counts)
        profile = Profile(tuple(rankings[d] for d in digits))
        base = kernel.mixed_winners(key, profile)
        profile_hits = [False] * nsets
        for voter in range(spec.m):
            r_idx = digits[voter]
            ranking = rankings[r_idx]
            top_single = frozenset((ranking.order[0],))
            if all(w == top_single for w in base):
                continue
            voter_hits = [False] * nsets
            remaining = nsets
            flags: list = [None] * nuniv
            for r2 in range(fact):
                if r2 == r_idx:
                    continue
                ba = bytearray(key)
                ba[r_idx] -= 1
                ba[r2] += 1
                changed = profile.replace_ranking(voter, rankings[r2])
                after = kernel.mixed_winners(bytes(ba), changed)
                for u in range(nuniv):
                    flags[u] = None
                for s in range(nsets):
                    if voter_hits[s]:
                        continue
                    fl = []
                    for u in kernel.set_members[s]:
                        f = flags[u]
                        if f is None:
                            f = flags[u] = kernel.flag(r_idx, base[u], after[u])
                        fl.append(f)
                    if notion_holds(spec.notion, fl, kernel.set_weights[s]):
                        voter_hits[s] = True
                        remaining -= 1
                if not remaining:
                    break
            for s in range(nsets):
                if voter_hits[s]:
                    profile_hits[s] = True
                    pointed_count[s] += 1
        for s in range(nsets):
            if profile_hits[s]:
                profiles_count[s] += 1
    return tuple(
        CensusResult(
            set_id=s.id, notion=spec.notion, kind=spec.kind, n=spec.n, m=spec.m,
            total=spec.total, witness_profiles=profiles_count[i],
            witness_pointed=pointed_count[i],
        )
        for i, s in enumerate(spec.method_sets)
    )


def run_census(spec: CensusSpec) -> CensusReport:
    """Runs the census described by ``spec``; see the module docstring."""
    if spec.total > spec.budget:
        raise BudgetExceededError(
            f"{spec.total} profiles exceed the budget of {spec.budget}"
        )
    kernel = _ClassKernel(spec)
    if not kernel.all_anonymous:
        return CensusReport(spec, _run_direct(spec, kernel))
    if spec.mode == "sample":
        rows = _sample_rows(spec.n, spec.m, spec.samples, spec.seed)
        class_counts = _count_sample_classes(rows, kernel.fact)
    else:
        class_counts = _count_all_classes(spec.n, spec.m, spec.workers)
    return CensusReport(spec, _aggregate(spec, kernel, class_counts))


# --- tables and scans over families of sets -----------------------------------


@dataclass(frozen=True)
class PairTable:
    """Census results for all singletons and pairs from a method list."""

    methods: tuple[VotingMethod, ...]
    report: CensusReport

    def cell(self, f: VotingMethod, g: VotingMethod) -> CensusResult:
        wanted = f.id if f.id == g.id else UncertaintySet((f, g)).id
        by_id = self.report.by_set()
        if wanted in by_id:
            return by_id[wanted]
        return by_id[UncertaintySet((g, f)).id]

    def below_both(self, f: VotingMethod, g: VotingMethod) -> bool:
        """True if the pair's count is strictly below both singleton counts."""
        if f.id == g.id:
            return False
        pair = self.cell(f, g).witness_profiles
        return (
            pair < self.cell(f, f).witness_profiles
            and pair < self.cell(g, g).witness_profiles
        )


def pair_table(
    methods: Sequence[VotingMethod],
    n: int,
    m: int,
    notion: str = "sure",
    kind: str = "weak",
    samples: int | None = None,
    seed: int | None = None,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> PairTable:
    """One census pass covering every singleton and unordered pair."""
    sets = [UncertaintySet((f,)) for f in methods]
    sets += [UncertaintySet(pair) for pair in combinations(methods, 2)]
    spec = CensusSpec(
        n=n, m=m, method_sets=tuple(sets), notion=notion, kind=kind,
        mode="exhaustive" if samples is None else "sample",
        samples=samples or 0, seed=seed, workers=workers, budget=budget,
    )
    return PairTable(tuple(methods), run_census(spec))


@dataclass(frozen=True)
class EliminationScanReport:
    report: CensusReport
    eliminating: tuple[str, ...]  # set ids with zero witnesses but none below


def elimination_scan(
    methods: Sequence[VotingMethod],
    n: int,
    m: int,
    notion: str = "sure",
    kind: str = "weak",
    max_set_size: int = 2,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> EliminationScanReport:
    """Finds subsets (up to ``max_set_size``) that eliminate manipulation.

    A set qualifies when it has zero witnessing profiles while every
    nonempty proper subset has at least one; all counts come from a single
    exhaustive census over the whole subset family.
    """
    if max_set_size < 2:
        raise ValueError("a set needs at least two methods to eliminate anything")
    family: list[UncertaintySet] = []
    for size in range(1, max_set_size + 1):
        for combo in combinations(methods, size):
            family.append(UncertaintySet(combo))
    spec = CensusSpec(
        n=n, m=m, method_sets=tuple(family), notion=notion, kind=kind,
        workers=workers, budget=budget,
    )
    report = run_census(spec)
    counts = {r.set_id: r.witness_profiles for r in report.results}
    eliminating = []
    for s in family:
        if len(s) < 2 or counts[s.id] != 0:
            continue
        if all(counts[sub.id] >= 1 for sub in s.subsets()):
            eliminating.append(s.id)
    return EliminationScanReport(report, tuple(eliminating))


# --- serialization -------------------------------------------------------------


CSV_COLUMNS = (
    "set", "notion", "kind", "n", "m", "total",
    "witness_profiles", "witness_pointed", "percentage",
)


def report_csv(report: CensusReport) -> str:
    """CSV rows for a census, preceded by '#' config-echo lines."""
    buf = io.StringIO()
    for k, v in report.spec.config().items():
        buf.write(f"# {k}={v}\n")
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for r in report.results:
        writer.writerow([
            r.set_id, r.notion, r.kind, r.n, r.m, r.total,
            r.witness_profiles, r.witness_pointed, f"{r.percentage:.4f}",
        ])
    return buf.getvalue()


def report_json(report: CensusReport) -> str:
    doc = {
        "config": report.spec.config(),
        "results": [
            {
                "set": r.set_id,
                "notion": r.notion,
                "kind": r.kind,
                "n": r.n,
                "m": r.m,
                "total": r.total,
                "witness_profiles": r.witness_profiles,
                "witness_pointed": r.witness_pointed,
                "percentage": r.percentage,
            }
            for r in report.results
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
