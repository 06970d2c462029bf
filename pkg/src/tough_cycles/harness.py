"""Theorem verification over graph corpora.

Three decidable predicates (the 2-connected bound c >= min{n, 2*delta},
the 1-tough bound c >= min{n, 2*delta + 2}, and the tau > 1 bound
c >= min{n, 2*delta + 4} with the Petersen graph as sole exception) and
a sweep driver that runs them over the internal enumerator or external
graph6 streams, with per-n accounting and optional lemma suites.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

from .enumeration import connected_graphs
from .graph import (
    Graph, Graph6Error, is_isomorphic, parse_graph6, petersen, write_graph6,
)
from .invariants import circumference, connectivity, min_degree, toughness
from .rational import ExactRational

THEOREMS = ("A", "B", "T1")

HOLDS = "holds"
VACUOUS = "vacuous"
EXCEPTION = "exception_petersen"
VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    status: str
    bound_required: int
    bound_observed: int | None
    graph6: str

    def __post_init__(self):
        if self.status == EXCEPTION and self.theorem != "T1":
            raise ValueError("exception status is reserved for theorem T1")
        if self.status == VIOLATION:
            assert self.bound_observed is not None
            assert self.bound_observed < self.bound_required

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "bound_required": self.bound_required,
            "bound_observed": self.bound_observed,
            "graph6": self.graph6,
        }


_ONE = ExactRational(1)


def verify_theoremA(g: Graph) -> TheoremVerdict:
    """2-connected graphs have c >= min{n, 2*delta}."""
    required = min(g.n, 2 * min_degree(g))
    g6 = write_graph6(g)
    if connectivity(g) < 2:
        return TheoremVerdict("A", VACUOUS, required, None, g6)
    c, _ = circumference(g)
    status = HOLDS if c >= required else VIOLATION
    return TheoremVerdict("A", status, required, c, g6)


def verify_theoremB(g: Graph) -> TheoremVerdict:
    """1-tough graphs have c >= min{n, 2*delta + 2}."""
    required = min(g.n, 2 * min_degree(g) + 2)
    g6 = write_graph6(g)
    tau, _ = toughness(g)
    if tau < _ONE:
        return TheoremVerdict("B", VACUOUS, required, None, g6)
    c, _ = circumference(g)
    status = HOLDS if c >= required else VIOLATION
    return TheoremVerdict("B", status, required, c, g6)


def _is_complete(g: Graph) -> bool:
    return g.edge_count() == g.n * (g.n - 1) // 2


def verify_theorem1(g: Graph) -> TheoremVerdict:
    """Graphs with tau > 1 have c >= min{n, 2*delta + 4}, except the
    Petersen graph.

    Cheap-first evaluation: an incomplete graph with kappa <= 2 has
    tau <= kappa / 2 <= 1 and is vacuous without a toughness scan.
    """
    required = min(g.n, 2 * min_degree(g) + 4)
    g6 = write_graph6(g)
    if not _is_complete(g) and connectivity(g) <= 2:
        return TheoremVerdict("T1", VACUOUS, required, None, g6)
    tau, _ = toughness(g)
    if not tau > _ONE:
        return TheoremVerdict("T1", VACUOUS, required, None, g6)
    c, _ = circumference(g)
    if c >= required:
        return TheoremVerdict("T1", HOLDS, required, c, g6)
    if g.n == 10 and is_isomorphic(g, petersen()):
        return TheoremVerdict("T1", EXCEPTION, required, c, g6)
    return TheoremVerdict("T1", VIOLATION, required, c, g6)


_VERIFIERS = {"A": verify_theoremA, "B": verify_theoremB, "T1": verify_theorem1}


def enumerate_connected_graphs(n: int, max_degree: int | None = None):
    """One canonical representative per connected class; n <= 10."""
    return connected_graphs(n, max_degree=max_degree)


@dataclass
class SweepReport:
    """Aggregated sweep outcome; schema versioned for golden tests."""
    schema: int = 1
    config: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)   # theorem -> n -> status -> int
    violations: list = field(default_factory=list)
    exceptions_list: list = field(default_factory=list)
    lemma_violations: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    processed: int = 0
    elapsed: float = 0.0

    def _bucket(self, theorem: str, n: int) -> dict:
        per_t = self.counts.setdefault(theorem, {})
        return per_t.setdefault(n, {
            "seen": 0, "vacuous": 0, "holds": 0,
            "exceptions": 0, "violations": 0,
        })

    def record(self, verdict: TheoremVerdict, n: int):
        b = self._bucket(verdict.theorem, n)
        b["seen"] += 1
        key = {HOLDS: "holds", VACUOUS: "vacuous",
               EXCEPTION: "exceptions", VIOLATION: "violations"}[verdict.status]
        b[key] += 1
        if verdict.status == VIOLATION:
            self.violations.append(verdict.graph6)
        elif verdict.status == EXCEPTION:
            self.exceptions_list.append(verdict.graph6)

    def merge(self, other: "SweepReport"):
        for theorem, per_n in other.counts.items():
            for n, bucket in per_n.items():
                mine = self._bucket(theorem, n)
                for k, v in bucket.items():
                    mine[k] += v
        self.violations.extend(other.violations)
        self.exceptions_list.extend(other.exceptions_list)
        self.lemma_violations.extend(other.lemma_violations)
        self.rejected.extend(other.rejected)
        self.processed += other.processed

    def finalize(self):
        self.violations = sorted(set(self.violations))
        self.exceptions_list = sorted(set(self.exceptions_list))
        self.lemma_violations = sorted(set(self.lemma_violations))

    def total(self, theorem: str, status: str) -> int:
        return sum(b[status] for b in self.counts.get(theorem, {}).values())

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "config": self.config,
            "counts": {t: {str(n): dict(b) for n, b in sorted(per_n.items())}
                       for t, per_n in sorted(self.counts.items())},
            "violations": list(self.violations),
            "exceptions": list(self.exceptions_list),
            "lemma_violations": list(self.lemma_violations),
            "rejected": list(self.rejected),
            "processed": self.processed,
            "elapsed": round(self.elapsed, 3),
        }

    def to_csv(self) -> str:
        """Per-n summary, one table per theorem (comment-separated when
        several theorems were swept)."""
        lines = []
        multi = len(self.counts) > 1
        for theorem in sorted(self.counts):
            if multi:
                lines.append(f"# theorem {theorem}")
            lines.append("n,seen,vacuous,holds,exceptions,violations")
            for n in sorted(self.counts[theorem]):
                b = self.counts[theorem][n]
                lines.append(f"{n},{b['seen']},{b['vacuous']},{b['holds']},"
                             f"{b['exceptions']},{b['violations']}")
        return "\n".join(lines) + "\n"


def _lemma_failures(g: Graph, cycle_cap=200, path_cap=200) -> list:
    """Names of failed lemma/claim checks on g (empty when all hold)."""
    from .structure import (
        check_claims_1_2, check_lemma1, check_lemma2, check_lemma3,
        decompose, extreme_pairs, DecompositionError,
    )
    failed = set()
    v3 = check_lemma3(g, cycle_cap=cycle_cap, path_cap=path_cap)
    if not v3.holds:
        failed.add("lemma3")
    pairs, _ = extreme_pairs(g, cycle_cap=cycle_cap, path_cap=path_cap)
    for c, p in pairs:
        if not check_lemma1(g, c, p).holds:
            failed.add("lemma1")
        for v in check_lemma2(g, c, p):
            if not v.holds:
                failed.add(v.lemma)
        try:
            d = decompose(g, c, p)
        except DecompositionError:
            continue
        for v in check_claims_1_2(g, d):
            if not v.holds:
                failed.add(v.lemma)
    return sorted(failed)


def _verify_one(g: Graph, theorems, lemmas: bool) -> tuple:
    verdicts = [_VERIFIERS[t](g) for t in theorems]
    lemma_failed = _lemma_failures(g) if lemmas else []
    return g.n, verdicts, lemma_failed


def _worker(args):
    g6, theorems, lemmas = args
    g = parse_graph6(g6)
    return _verify_one(g, theorems, lemmas)


def _reverify(g6: str, theorem: str) -> bool:
    """A violation is only reported after the definition-level oracles
    reproduce it."""
    from .invariants import circumference_oracle, toughness_oracle

    g = parse_graph6(g6)
    delta = min_degree(g)
    c = circumference_oracle(g)
    tau = toughness_oracle(g)
    if theorem == "A":
        from .invariants import connectivity_oracle
        return connectivity_oracle(g) >= 2 and c < min(g.n, 2 * delta)
    if theorem == "B":
        return tau >= _ONE and c < min(g.n, 2 * delta + 2)
    return (tau > _ONE and c < min(g.n, 2 * delta + 4)
            and not (g.n == 10 and is_isomorphic(g, petersen())))


def _graph6_source(records, report: SweepReport):
    for lineno, line in enumerate(records, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield write_graph6(parse_graph6(line))
        except Graph6Error as exc:
            report.rejected.append(f"line {lineno}: {line} ({exc})")


def _internal_source(min_n, max_n, max_degree, regular):
    for n in range(min_n, max_n + 1):
        for g in connected_graphs(n, max_degree=max_degree):
            if regular is not None and any(
                    g.degree(v) != regular for v in range(g.n)):
                continue
            yield write_graph6(g)


def resolve_workers(requested: int | None) -> int:
    env = os.environ.get("TOUGH_CYCLES_WORKERS")
    if env is not None:
        return max(1, int(env))
    if requested is None:
        return 1
    if requested < 1:
        raise ValueError("workers must be positive")
    return requested


def sweep(min_n: int = 1, max_n: int | None = None, records=None,
          theorems=("T1",), lemmas: bool = False, workers: int | None = None,
          max_degree: int | None = None, regular: int | None = None) -> SweepReport:
    """Run the selected theorem verifiers over an internal n-range or a
    graph6 record stream.

    Aggregates are deterministic for any worker count: counts are
    additive and the violation list is sorted before reporting.
    Malformed records are tallied, never fatal.
    """
    theorems = tuple(theorems)
    for t in theorems:
        if t not in THEOREMS:
            raise ValueError(f"unknown theorem {t!r}")
    nworkers = resolve_workers(workers)
    report = SweepReport()
    report.config = {
        "theorems": list(theorems), "lemmas": lemmas, "workers": nworkers,
        "source": "graph6" if records is not None else f"n={min_n}..{max_n}",
    }
    if regular is not None:
        report.config["regular"] = regular
        max_degree = regular if max_degree is None else min(max_degree, regular)

    start = time.monotonic()
    if records is not None:
        source = _graph6_source(records, report)
    else:
        if max_n is None:
            raise ValueError("max_n required for the internal enumerator")
        source = _internal_source(min_n, max_n, max_degree, regular)

    tasks = ((g6, theorems, lemmas) for g6 in source)
    if nworkers > 1:
        import multiprocessing as mp
        with mp.Pool(nworkers) as pool:
            results = pool.imap_unordered(_worker, tasks, chunksize=256)
            _consume(report, results, tasks_are_pairs=False)
    else:
        results = (_worker(t) for t in tasks)
        _consume(report, results, tasks_are_pairs=False)

    confirmed = []
    for g6 in sorted(set(report.violations)):
        for t in theorems:
            if _reverify(g6, t):
                confirmed.append(g6)
                break
    report.violations = confirmed
    report.finalize()
    report.elapsed = time.monotonic() - start
    return report


def _consume(report: SweepReport, results, tasks_are_pairs):
    for n, verdicts, lemma_failed in results:
        report.processed += 1
        for v in verdicts:
            report.record(v, n)
        for name in lemma_failed:
            report.lemma_violations.append(f"{verdicts[0].graph6}:{name}")


def report_to_json_str(report: SweepReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True, indent=2)
