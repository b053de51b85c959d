"""Closed-form homology predictions and the checks that compare against them."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .digraph import Digraph, blow_up, gen_family, is_acyclic, underlying
from .errors import BudgetExceeded, NotAcyclic, UnsupportedParameter
from .homology import Group, HomologyResult, homological_connectivity, homology
from .multipath import multipath_complex
from .simplicial import are_isomorphic, matching_complex

# family tag of expected_homology -> digraph family
GRAPH_OF = {
    "BL": "BL", "BP": "BP", "W": "W", "BLHAT": "BLHAT", "C": "C",
    "TAP1": "BP_MINUS1", "TAP2": "BP_MINUS2", "TAPSTAR": "BP_MINUS_STAR",
}
_MIN_N = {"BL": 1, "W": 1, "BLHAT": 1, "C": 1, "BP": 2, "TAP1": 2, "TAP2": 2, "TAPSTAR": 2}
CONJECTURAL = frozenset({"TAP1", "TAP2"})

SUITES = ("bl", "bp", "w", "blhat", "tap1", "tap2", "tapstar", "omega", "matching")
_SUITE_FAMILY = {"bl": "BL", "bp": "BP", "w": "W", "blhat": "BLHAT",
                 "tap1": "TAP1", "tap2": "TAP2", "tapstar": "TAPSTAR"}

OMEGA_CAP = 5
TT_CAP = 4


def nu(n: int) -> int:
    """floor((n-1)/2) - 1."""
    return (n - 1) // 2 - 1


def mu(n: int) -> int:
    """floor((2n-1)/3 - 2), evaluated in exact integer arithmetic."""
    return (2 * n - 7) // 3


@dataclass(frozen=True)
class ExpectedHomology:
    """Unreduced Betti numbers predicted for one member of a family."""

    family: str
    n: int
    betti: dict[int, int]
    conjectural: bool = False

    def as_result(self, reduced: bool = False) -> HomologyResult:
        h = HomologyResult.from_groups(False, (Group(d, b) for d, b in self.betti.items()))
        return h.to_reduced() if reduced else h


def _table(*rows: tuple[int, int]) -> dict[int, int]:
    # rows naming the same degree add up (only happens for tiny n)
    out: dict[int, int] = {}
    for deg, rank in rows:
        out[deg] = out.get(deg, 0) + rank
    return out


def _sphere(d: int) -> dict[int, int]:
    return _table((0, 1), (d, 1))


def expected_homology(family: str, n: int) -> ExpectedHomology:
    family = family.upper()
    if family not in _MIN_N:
        raise UnsupportedParameter(f"no prediction for family {family!r}")
    if n < _MIN_N[family]:
        raise UnsupportedParameter(f"{family} predictions need n >= {_MIN_N[family]}")
    r = n % 4
    mid = (n - 1) // 2

    if family == "BL":
        betti = _sphere(mid)
    elif family == "C":
        betti = _sphere(n - 1)
    elif family == "TAPSTAR":
        betti = _sphere(n - 1)
    elif family == "BLHAT":
        betti = _table((0, 1)) if n % 2 == 0 else _sphere((n - 1) // 2)
    elif family == "W":
        betti = _table((0, 1)) if r in (0, 1) else _sphere(mid)
    elif family == "BP":
        rows = [(0, 1), (n - 1, 2)]
        if r in (1, 2):
            rows.append((mid, 1))
        elif r == 3:
            rows.append((mid, 3))
        else:
            rows.append((mid + 1, 1))
        betti = _table(*rows)
    elif family == "TAP1":
        rows = [(0, 1), (n - 1, 1)]
        if r == 1:
            rows.append((mid, 1))
        elif r == 2:
            rows.append(((n - 2) // 2, 1))
        elif r == 3:
            rows.append((mid + 1, 2))
        betti = _table(*rows)
    else:  # TAP2
        rows = [(0, 1), (n - 1, 1)]
        if r == 2:
            rows.append(((n - 2) // 2, 1))
        elif r == 3:
            rows.append((mid + 1, 1))
        betti = _table(*rows)
    return ExpectedHomology(family, n, betti, family in CONJECTURAL)


@dataclass
class VerificationReport:
    family: str
    n: int
    verdict: str  # MATCH | MISMATCH | SKIPPED
    wall_time: float
    expected: HomologyResult | None = None
    computed: HomologyResult | None = None
    conjectural: bool = False
    note: str = ""
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "MATCH"

    def to_json(self) -> dict:
        out = {"family": self.family, "n": self.n, "verdict": self.verdict,
               "conjectural": self.conjectural,
               "expected": self.expected.to_json() if self.expected else None,
               "computed": self.computed.to_json() if self.computed else None,
               "seconds": round(self.wall_time, 4)}
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = self.details
        return out

    def csv_row(self) -> list:
        h = self.computed.describe() if self.computed else ""
        return [self.family, self.n, self.verdict, h, f"{self.wall_time:.4f}"]


def run_check(family: str, n: int, reduced: bool = False) -> VerificationReport:
    family = family.upper()
    start = time.perf_counter()
    expected = expected_homology(family, n)
    try:
        x = multipath_complex(gen_family(GRAPH_OF[family], n))
    except BudgetExceeded as exc:
        return VerificationReport(family, n, "SKIPPED", time.perf_counter() - start,
                                  expected.as_result(reduced), None,
                                  expected.conjectural, note=str(exc))
    computed = homology(x, reduced=reduced)
    want = expected.as_result(reduced)
    verdict = "MATCH" if computed == want else "MISMATCH"
    note = ""
    if expected.conjectural:
        note = "conjectural table" if verdict == "MATCH" else "counterexample candidate"
    return VerificationReport(family, n, verdict, time.perf_counter() - start,
                              want, computed, expected.conjectural, note)


def verify_matching_iso(g: Digraph, label: str = "MATCHING", n: int | None = None
                        ) -> VerificationReport:
    """Compare X(g) with the matching complex of the blown-up underlying graph."""
    if not is_acyclic(g):
        raise NotAcyclic("the multipath/matching isomorphism needs an acyclic digraph")
    start = time.perf_counter()
    x = multipath_complex(g)
    m = matching_complex(underlying(blow_up(g)))
    try:
        iso = are_isomorphic(x, m)
    except BudgetExceeded as exc:
        return VerificationReport(label, n if n is not None else g.n_edges, "SKIPPED",
                                  time.perf_counter() - start, note=str(exc))
    verdict = "MATCH" if iso is not None else "MISMATCH"
    details = {"f_vector": x.f_vector()}
    if iso is not None:
        details["bijection"] = [[a, b] for a, b in iso.items()]
    return VerificationReport(label, n if n is not None else g.n_edges, verdict,
                              time.perf_counter() - start, details=details)


def verify_omega(n: int, cap: int = OMEGA_CAP) -> VerificationReport:
    """Homological connectivity of X(K_n) against mu_n.

    The verdict only reflects the connectivity bound.  Whether the next group
    H~_{mu_n + 1} is nonzero (the sharpness conjecture) is recorded in
    ``details`` and does not affect the verdict.
    """
    if not 2 <= n <= cap:
        raise UnsupportedParameter(f"omega check needs 2 <= n <= {cap}")
    start = time.perf_counter()
    x = multipath_complex(gen_family("K", n))
    h = homology(x, reduced=True)
    conn = homological_connectivity(x)
    bound = mu(n)
    nxt = h.group(bound + 1)
    details = {"mu": bound, "connectivity": conn if conn != float("inf") else "inf",
               "next_group": str(nxt), "sharpness_holds": not nxt.is_zero()}
    verdict = "MATCH" if conn >= bound else "MISMATCH"
    return VerificationReport("OMEGA", n, verdict, time.perf_counter() - start,
                              None, h, details=details)


def _suite_tasks(suite: str, max_n: int) -> list[tuple]:
    suite = suite.lower()
    if suite == "all":
        return [t for s in SUITES for t in _suite_tasks(s, max_n)]
    if suite in _SUITE_FAMILY:
        fam = _SUITE_FAMILY[suite]
        return [("check", fam, n) for n in range(_MIN_N[fam], max_n + 1)]
    if suite == "omega":
        return [("omega", "OMEGA", n) for n in range(2, min(max_n, OMEGA_CAP) + 1)]
    if suite == "matching":
        tasks = [("matching", "I", n) for n in range(1, max_n + 1)]
        tasks += [("matching", "TT", n) for n in range(1, min(max_n, TT_CAP) + 1)]
        return tasks
    raise UnsupportedParameter(f"unknown suite {suite!r}")


def _run_task(task: tuple) -> VerificationReport:
    kind, fam, n = task
    if kind == "check":
        return run_check(fam, n)
    if kind == "omega":
        return verify_omega(n)
    return verify_matching_iso(gen_family(fam, n), label=f"MATCHING_{fam}", n=n)


def run_suite(suite: str, max_n: int, jobs: int = 1) -> list[VerificationReport]:
    """Run every check of a suite; reports come back in task order."""
    tasks = _suite_tasks(suite, max_n)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "n", "verdict", "homology", "seconds"])
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()
