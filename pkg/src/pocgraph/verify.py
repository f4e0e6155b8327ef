"""Theorem-by-theorem verification over exhaustively enumerated graphs.

Each check scans every connected graph up to its size cap (or a caller
supplied graph6 stream) and reports violations as replayable graph6
strings.  Reports are deterministic for fixed caps: the enumeration
order is canonical and violations keep scan order.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import gadgets, recognizers, solver
from .enumeration import enumerate_connected, enumerate_connected_chordal
from .graph import Graph, complete_graph, path_graph
from .io import emit_graph6
from .patterns import PATTERNS
from .recognizers import FORBIDDEN_SETS, PocClass


@dataclass(frozen=True)
class Violation:
    graph6: str
    detail: str


@dataclass
class TheoremReport:
    theorem: str
    scanned: int
    violations: list[Violation] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "scanned": self.scanned,
            "violations": [{"graph6": v.graph6, "detail": v.detail} for v in self.violations],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.theorem}: {status} ({self.scanned} graphs scanned, "
                 f"{len(self.violations)} violations, {self.elapsed_ms} ms)"]
        for v in self.violations:
            lines.append(f"  violation {v.graph6}: {v.detail}")
        return "\n".join(lines)


def _source(max_n: int, graphs: Optional[Iterable[Graph]], min_n: int = 1,
            cap: Optional[int] = None) -> Iterable[Graph]:
    if graphs is not None:
        return (g for g in graphs if min_n <= g.n <= max_n)

    def gen():
        for n in range(min_n, max_n + 1):
            yield from enumerate_connected(n, cap=max(max_n, 8) if cap is None else cap)
    return gen()


def _finish(report: TheoremReport, t0: float) -> TheoremReport:
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


# -- Observation 1 -------------------------------------------------------------

def check_observation1(max_n: int = 8, graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """tau_c <= 2*tau - 1 for every connected graph with at least one edge."""
    t0 = time.perf_counter()
    report = TheoremReport("observation1", 0)
    for g in _source(max_n, graphs, min_n=2):
        if g.m == 0:
            continue
        report.scanned += 1
        tau, tauc = solver.tau_tauc(g)
        if tauc > 2 * tau - 1:
            report.violations.append(Violation(emit_graph6(g), f"tau={tau}, tau_c={tauc}"))
    return _finish(report, t0)


# -- forbidden-subgraph characterizations --------------------------------------

_CHARACTERIZATIONS: dict[Fraction, tuple[str, ...]] = {
    Fraction(1): FORBIDDEN_SETS[PocClass.POC_PERFECT],
    Fraction(4, 3): FORBIDDEN_SETS[PocClass.NEAR_PERFECT_4_3],
    Fraction(3, 2): FORBIDDEN_SETS[PocClass.NEAR_PERFECT_3_2],
}


def check_characterization(max_n: int, threshold: Fraction, forbidden: tuple[str, ...],
                           graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """(A) every forbidden-set-free graph satisfies poc <= threshold;
    (B) every member of the forbidden set has poc > threshold.

    Freeness is hereditary, so the pointwise sweep covers every induced
    subgraph up to the cap.  For threshold 1 the sweep also verifies the
    alternative characterization: free of {P5,C5,C4} iff chordal and
    P5-free.
    """
    t0 = time.perf_counter()
    expected = _CHARACTERIZATIONS.get(threshold)
    if expected is None or tuple(forbidden) != expected:
        raise ValueError(f"threshold {threshold} goes with forbidden set {expected}, "
                         f"got {tuple(forbidden)}")
    name = f"poc<={threshold}-iff-({','.join(forbidden)})-free"
    report = TheoremReport(name, 0)
    for pat in forbidden:
        ratio = solver.poc(PATTERNS[pat].graph)
        if not ratio > threshold:
            report.violations.append(Violation(
                emit_graph6(PATTERNS[pat].graph),
                f"forbidden member {pat} has poc {ratio} <= {threshold}"))
    for g in _source(max_n, graphs, min_n=2):
        if g.m == 0:
            continue
        report.scanned += 1
        free = all(recognizers.contains_induced(g, p) is None for p in forbidden)
        if free:
            ratio = solver.poc(g)
            if ratio > threshold:
                report.violations.append(Violation(
                    emit_graph6(g), f"({','.join(forbidden)})-free but poc={ratio} > {threshold}"))
        if threshold == 1:
            alt = (recognizers.is_chordal(g).chordal
                   and recognizers.contains_induced(g, "P5") is None)
            if free != alt:
                report.violations.append(Violation(
                    emit_graph6(g),
                    f"(P5,C5,C4)-free={free} but chordal-and-P5-free={alt}"))
    return _finish(report, t0)


def check_corollary_chordal_p7free(max_n: int = 8,
                                   graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """Every chordal P7-free connected graph satisfies poc <= 3/2."""
    t0 = time.perf_counter()
    report = TheoremReport("corollary-chordal-p7free", 0)
    bound = Fraction(3, 2)
    for g in _source(max_n, graphs, min_n=2):
        if g.m == 0:
            continue
        report.scanned += 1
        if not recognizers.is_chordal(g).chordal:
            continue
        if recognizers.contains_induced(g, "P7") is not None:
            continue
        ratio = solver.poc(g)
        if ratio > bound:
            report.violations.append(Violation(
                emit_graph6(g), f"chordal P7-free but poc={ratio} > 3/2"))
    return _finish(report, t0)


# -- criticality ----------------------------------------------------------------

def _criticality_eligible(g: Graph) -> bool:
    # K2 has no proper induced subgraph with an edge; the comparison is vacuous
    return g.m >= 1 and g.n >= 3


def check_critical_chordal(max_n: int = 9,
                           graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """Over connected chordal graphs: special tree <=> critical <=>
    strongly critical, and each positive satisfies poc = 2 - 1/tau.

    Strongly critical graphs are critical by definition (proper induced
    subgraphs are proper subgraphs), so the expensive subgraph sweep only
    runs on the critical ones.
    """
    t0 = time.perf_counter()
    report = TheoremReport("critical-chordal", 0)
    if graphs is None:
        src: Iterable[Graph] = (g for n in range(2, max_n + 1)
                                for g in enumerate_connected_chordal(n, cap=max(max_n, 9)))
    else:
        src = (g for g in graphs
               if 2 <= g.n <= max_n and recognizers.is_chordal(g).chordal)
    for g in src:
        if g.m == 0:
            continue
        report.scanned += 1
        special = recognizers.is_special_tree(g).ok
        critical = _criticality_eligible(g) and recognizers.is_critical(g, size_cap=max_n)
        strongly = critical and recognizers.is_strongly_critical(g, size_cap=max_n)
        if not (special == critical == strongly):
            report.violations.append(Violation(
                emit_graph6(g),
                f"special={special}, critical={critical}, strongly={strongly}"))
            continue
        if special:
            tau, tauc = solver.tau_tauc(g)
            if Fraction(tauc, tau) != 2 - Fraction(1, tau):
                report.violations.append(Violation(
                    emit_graph6(g), f"special tree with poc {tauc}/{tau} != 2 - 1/{tau}"))
    return _finish(report, t0)


def find_strongly_critical(max_n: int = 7,
                           graphs: Optional[Iterable[Graph]] = None) -> list[Graph]:
    """All strongly critical connected graphs up to max_n, in scan order."""
    out = []
    for g in _source(max_n, graphs, min_n=3):
        if g.m == 0 or not _criticality_eligible(g):
            continue
        if not recognizers.is_critical(g, size_cap=max_n):
            continue
        if recognizers.is_strongly_critical(g, size_cap=max_n):
            out.append(g)
    return out


def check_strongly_critical_structure(max_n: int = 7,
                                      graphs: Optional[Iterable[Graph]] = None) -> TheoremReport:
    """Every strongly critical graph found is bipartite, all its minimum
    vertex covers are independent, no minimum vertex cover contains both
    endpoints of a bridge, and a cutvertex forces it to be a special tree."""
    t0 = time.perf_counter()
    report = TheoremReport("strongly-critical-structure", 0)
    for g in _source(max_n, graphs, min_n=3):
        if g.m == 0 or not _criticality_eligible(g):
            continue
        report.scanned += 1
        if not recognizers.is_critical(g, size_cap=max_n):
            continue
        if not recognizers.is_strongly_critical(g, size_cap=max_n):
            continue
        g6 = emit_graph6(g)
        if not g.bipartition().bipartite:
            report.violations.append(Violation(g6, "strongly critical but not bipartite"))
        covers = solver.all_minimum_vertex_covers(g)
        for cover in covers:
            if any(g.rows[v] & cover.mask for v in cover):
                report.violations.append(Violation(
                    g6, f"minimum vertex cover {sorted(cover)} is not independent"))
                break
        bridges = g.bridges()
        for cover in covers:
            if any(u in cover and v in cover for u, v in bridges):
                report.violations.append(Violation(
                    g6, "a minimum vertex cover contains both endpoints of a bridge"))
                break
        if len(g.cutvertices()) > 0 and not recognizers.is_special_tree(g).ok:
            report.violations.append(Violation(
                g6, "has a cutvertex but is not a special tree"))
    return _finish(report, t0)


# -- gadget formulas --------------------------------------------------------------

def verify_gadgets(max_n: int = 5, graphs: Optional[Iterable[Graph]] = None,
                   seed: int = 1729) -> TheoremReport:
    """Solver-check the gadget predictions on every connected graph up to
    max_n: the two pinning constructions, replication, join additivity,
    caterpillar deltas, and a fixed-seed sample of the padding solver."""
    t0 = time.perf_counter()
    report = TheoremReport("gadget-formulas", 0)

    def check(out: gadgets.GadgetOutput, g6: str) -> None:
        tau, tauc = solver.tau_tauc(out.graph)
        if tau != out.predicted_tau:
            report.violations.append(Violation(
                g6, f"{out.provenance}: predicted tau={out.predicted_tau}, solver tau={tau}"))
        if out.predicted_tauc is not None and tauc != out.predicted_tauc:
            report.violations.append(Violation(
                g6, f"{out.provenance}: predicted tau_c={out.predicted_tauc}, solver tau_c={tauc}"))

    for g in _source(max_n, graphs, min_n=2):
        if g.m == 0 or not g.is_connected():
            continue
        report.scanned += 1
        g6 = emit_graph6(g)
        check(gadgets.fix_tauc(g), g6)
        check(gadgets.fix_tau(g), g6)
        if g.n <= 4:
            for k in (2, 3):
                check(gadgets.replicate_join(g, k, 0), g6)

    pieces = [gadgets.fix_tauc(complete_graph(2)), gadgets.fix_tauc(path_graph(3)),
              gadgets.fix_tau(complete_graph(2)), gadgets.fix_tau(path_graph(3))]
    for a in pieces:
        for b in pieces:
            check(gadgets.join_disjoint(a, b), f"{a.provenance}+{b.provenance}")
    base = gadgets.fix_tauc(complete_graph(2))
    for a in range(3):
        for b in range(3):
            check(gadgets.attach_caterpillars(base, a, b), f"caterpillar(a={a},b={b})")

    rng = random.Random(seed)
    for r1, r2 in ((4, 3), (3, 2), (7, 4)):
        for _ in range(50):
            phi2 = rng.randint(2, 10**6)
            phi1 = rng.randint(phi2 + 1, 2 * phi2 - 1)
            a, b, c = gadgets.solve_ab(phi1, phi2, r1, r2)
            if (a + 2 * b + phi1) * r2 != (a + b + phi2) * r1:
                report.violations.append(Violation(
                    "-", f"solve_ab({phi1},{phi2},{r1},{r2}) violates the ratio equation"))
    return _finish(report, t0)


# -- check registry for the CLI ----------------------------------------------------

@dataclass(frozen=True)
class CheckSpec:
    name: str
    default_max_n: int
    run: Callable[..., TheoremReport]


CHECKS: dict[str, CheckSpec] = {
    "obs1": CheckSpec("obs1", 8, check_observation1),
    "thm2": CheckSpec("thm2", 8, lambda max_n, graphs=None: check_characterization(
        max_n, Fraction(1), _CHARACTERIZATIONS[Fraction(1)], graphs)),
    "thm3": CheckSpec("thm3", 8, lambda max_n, graphs=None: check_characterization(
        max_n, Fraction(4, 3), _CHARACTERIZATIONS[Fraction(4, 3)], graphs)),
    "thm4": CheckSpec("thm4", 8, lambda max_n, graphs=None: check_characterization(
        max_n, Fraction(3, 2), _CHARACTERIZATIONS[Fraction(3, 2)], graphs)),
    "cor1": CheckSpec("cor1", 8, check_corollary_chordal_p7free),
    "thm5": CheckSpec("thm5", 9, check_critical_chordal),
    "thm6": CheckSpec("thm6", 7, check_strongly_critical_structure),
    "gadgets": CheckSpec("gadgets", 5, verify_gadgets),
}
