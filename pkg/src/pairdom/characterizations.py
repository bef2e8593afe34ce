"""Deciders for the equality "upper paired domination = twice upper
domination", plus structural verifiers used to stress the supporting
lemmas on exhaustive graph streams.

Each verifier returns a Verdict: holds, fails (with a counterexample
witness), or not-applicable when the graph misses the hypothesis. A
not-applicable verdict is never silently treated as holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .domination import (
    InvariantReport,
    IsolatedVertexError,
    has_isolated_vertex,
    invariants,
    is_minimal_dominating,
    minimal_dominating_masks,
    minimal_paired_dominating_masks,
)
from .families import (
    ClassFlags,
    FamilyLabel,
    classify,
    every_block_edge_or_cycle,
    recognize_family,
)
from .graph import Graph, GraphError, bits_of, encode_graph6
from .matching import all_perfect_matchings, perfect_matching_tester


@dataclass(frozen=True)
class Decision:
    equality_holds: bool
    method: str  # "brute-force" or a fast-path class name
    evidence: object = None  # InvariantReport (brute) or FamilyLabel (fast)


@dataclass(frozen=True)
class Verdict:
    check_id: str
    graph6: str
    status: str  # "holds" | "fails" | "na"
    witness: dict | None = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_record(self) -> dict:
        rec = {
            "check_id": self.check_id,
            "graph6": self.graph6,
            "holds": {"holds": True, "fails": False, "na": None}[self.status],
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


def _verts(mask: int) -> list[int]:
    return list(bits_of(mask))


class Facts:
    """Lazily computed exact data for one graph, shared across checks."""

    def __init__(self, g: Graph):
        self.g = g
        self._matchings_cache: dict[int, list] = {}

    @cached_property
    def graph6(self) -> str:
        return encode_graph6(self.g)

    @cached_property
    def flags(self) -> ClassFlags:
        return classify(self.g)

    @cached_property
    def no_isolated(self) -> bool:
        return not has_isolated_vertex(self.g)

    @cached_property
    def family(self) -> FamilyLabel | None:
        return recognize_family(self.g)

    @cached_property
    def componentwise_c3free_cactus(self) -> bool:
        return self.flags.c3_free and every_block_edge_or_cycle(self.g)

    @cached_property
    def report(self) -> InvariantReport:
        return invariants(self.g)

    @cached_property
    def pm_test(self):
        return perfect_matching_tester(self.g)

    @cached_property
    def minimal_dominating_set_masks(self) -> frozenset:
        return frozenset(minimal_dominating_masks(self.g))

    @cached_property
    def minimal_pds_masks(self) -> list[int]:
        return minimal_paired_dominating_masks(self.g)

    @cached_property
    def upper_pds_masks(self) -> list[int]:
        """All maximum-size minimal paired dominating sets, as masks."""
        target = self.report.upper_gamma_pr
        return [m for m in self.minimal_pds_masks if m.bit_count() == target]

    @cached_property
    def equality(self) -> bool | None:
        """Whether the upper paired bound is met with equality; None when
        paired domination is undefined."""
        r = self.report
        if r.upper_gamma_pr is None:
            return None
        return r.upper_gamma_pr == 2 * r.upper_gamma

    def matchings(self, mask: int):
        got = self._matchings_cache.get(mask)
        if got is None:
            got = all_perfect_matchings(self.g, mask)
            self._matchings_cache[mask] = got
        return got


# --- equality deciders --------------------------------------------------


def decide_equality_bruteforce(g: Graph, facts: Facts | None = None) -> Decision:
    """Decide the equality by computing both invariants exactly."""
    if has_isolated_vertex(g):
        raise IsolatedVertexError("equality undefined: graph has an isolated vertex")
    facts = facts or Facts(g)
    return Decision(bool(facts.equality), "brute-force", facts.report)


def _fastpath_votes(facts: Facts) -> list[tuple[str, bool]]:
    fam = facts.family
    kind = fam.kind if fam else None
    votes = []
    if facts.flags.girth >= 6:
        votes.append(("girth-at-least-6", kind == "mK2"))
    if facts.componentwise_c3free_cactus:
        votes.append(("c3-free-cactus", kind in ("mK2", "C5", "mK2+mC5")))
    if facts.flags.unicyclic:
        votes.append(
            (
                "unicyclic",
                kind in ("C3", "C5")
                or (kind == "star" and fam.params[1] == 1),
            )
        )
    if facts.flags.connected and facts.flags.bipartite:
        votes.append(("bipartite", kind == "mK2" and fam.params[0] == 1))
    return votes


def decide_equality_fastpath(g: Graph, facts: Facts | None = None) -> Decision | None:
    """Decide by family recognition alone when the graph lies in a
    characterized class; None when no characterization applies."""
    if g.n == 0 or has_isolated_vertex(g):
        return None
    facts = facts or Facts(g)
    votes = _fastpath_votes(facts)
    if not votes:
        return None
    answers = {verdict for _, verdict in votes}
    if len(answers) != 1:
        raise RuntimeError(
            f"fast paths disagree on {facts.graph6}: {votes}"
        )
    method, verdict = votes[0]
    return Decision(verdict, method, facts.family)


# --- lemma verifiers ------------------------------------------------------


def _na(check_id: str, facts: Facts) -> Verdict:
    return Verdict(check_id, facts.graph6, "na")


def check_independent_gamma_set(g: Graph, facts: Facts | None = None) -> Verdict:
    """Every maximum minimal PDS contains an independent minimal dominating
    set of maximum size."""
    facts = facts or Facts(g)
    check_id = "independent-core"
    if not facts.no_isolated or facts.equality is not True:
        return _na(check_id, facts)
    target = facts.report.upper_gamma
    for pmask in facts.upper_pds_masks:
        found = False
        for sub in combinations(_verts(pmask), target):
            smask = 0
            independent = True
            for v in sub:
                if g.adj[v] & smask:
                    independent = False
                    break
                smask |= 1 << v
            if independent and is_minimal_dominating(g, smask):
                found = True
                break
        if not found:
            return Verdict(
                check_id,
                facts.graph6,
                "fails",
                {"pds": _verts(pmask), "needed_size": target},
            )
    return Verdict(check_id, facts.graph6, "holds")


def check_unicyclic_gamma_bound(g: Graph, facts: Facts | None = None) -> Verdict:
    """Upper domination of a connected unicyclic graph is at least n/2
    (even n) or (n-1)/2 (odd n)."""
    facts = facts or Facts(g)
    if not facts.flags.unicyclic:
        raise GraphError("graph is not connected unicyclic")
    bound = g.n // 2 if g.n % 2 == 0 else (g.n - 1) // 2
    if facts.report.upper_gamma >= bound:
        return Verdict("unicyclic-gamma-bound", facts.graph6, "holds")
    return Verdict(
        "unicyclic-gamma-bound",
        facts.graph6,
        "fails",
        {"upper_gamma": facts.report.upper_gamma, "bound": bound},
    )


STRUCTURAL_CHECKS = (
    "pair-has-leaf",
    "outside-two-neighbors",
    "outside-partners-adjacent",
    "outside-no-common-neighbor",
    "pds-max-degree-two",
    "pair-one-outside-contact",
    "outside-set-independent",
)


def _structural_violation(facts: Facts, which: str) -> dict | None:
    """First violating configuration across all maximum minimal PDSs and,
    where the property mentions matched pairs, all perfect matchings."""
    g = facts.g
    for pmask in facts.upper_pds_masks:
        outside = g.full_mask & ~pmask
        pset = _verts(pmask)

        def deg_in_p(v: int) -> int:
            return (g.adj[v] & pmask).bit_count()

        if which == "outside-two-neighbors":
            for x in bits_of(outside):
                if (g.adj[x] & pmask).bit_count() != 2:
                    return {"pds": pset, "vertex": x,
                            "neighbors_in_pds": _verts(g.adj[x] & pmask)}
            continue
        if which == "outside-no-common-neighbor":
            for x1, x2 in combinations(_verts(outside), 2):
                common = g.adj[x1] & g.adj[x2] & pmask
                if common:
                    return {"pds": pset, "pair": [x1, x2],
                            "common": _verts(common)}
            continue
        if which == "pds-max-degree-two":
            for v in pset:
                if deg_in_p(v) > 2:
                    return {"pds": pset, "vertex": v, "degree": deg_in_p(v)}
            continue
        if which == "outside-set-independent":
            for x in bits_of(outside):
                bad = g.adj[x] & outside
                if bad:
                    return {"pds": pset, "pair": [x, _verts(bad)[0]]}
            continue

        for matching in facts.matchings(pmask):
            partner = {}
            for a, b in matching.pairs:
                partner[a] = b
                partner[b] = a
            if which == "pair-has-leaf":
                for a, b in matching.pairs:
                    if deg_in_p(a) > 1 and deg_in_p(b) > 1:
                        return {"pds": pset,
                                "matching": list(matching.pairs),
                                "pair": [a, b]}
            elif which == "outside-partners-adjacent":
                for x in bits_of(outside):
                    nbrs = _verts(g.adj[x] & pmask)
                    if len(nbrs) != 2:
                        return {"pds": pset, "vertex": x,
                                "neighbors_in_pds": nbrs}
                    p1, p2 = partner[nbrs[0]], partner[nbrs[1]]
                    if not g.has_edge(p1, p2):
                        return {"pds": pset,
                                "matching": list(matching.pairs),
                                "vertex": x, "partners": [p1, p2]}
            elif which == "pair-one-outside-contact":
                for a, b in matching.pairs:
                    if g.adj[a] & outside and g.adj[b] & outside:
                        return {"pds": pset,
                                "matching": list(matching.pairs),
                                "pair": [a, b]}
            else:
                raise GraphError(f"unknown structural check {which!r}")
    return None


def check_structural_lemma(g: Graph, which: str, facts: Facts | None = None) -> Verdict:
    """Verify one structural property of triangle-free cactus graphs that
    meet the equality, quantified over every maximum minimal PDS."""
    if which not in STRUCTURAL_CHECKS:
        raise GraphError(f"unknown structural check {which!r}")
    facts = facts or Facts(g)
    if (
        not facts.no_isolated
        or not facts.componentwise_c3free_cactus
        or facts.equality is not True
    ):
        return _na(which, facts)
    witness = _structural_violation(facts, which)
    if witness is None:
        return Verdict(which, facts.graph6, "holds")
    return Verdict(which, facts.graph6, "fails", witness)


# --- open-question hunt ---------------------------------------------------


@dataclass
class HuntReport:
    """Outcome of a counterexample hunt over a stream of graphs.

    Satisfiers are triangle-free graphs without isolated vertices meeting
    the equality; exceptions are satisfiers that are not disjoint unions of
    edges and 5-cycles. The report only collects evidence; it never claims
    the open question is settled.
    """

    scanned: int = 0
    skipped: int = 0
    satisfiers: list = field(default_factory=list)
    exceptions: list = field(default_factory=list)

    @property
    def non_cactus_satisfiers(self) -> list:
        return [s for s in self.satisfiers if not s["cactus"]]

    def to_record(self) -> dict:
        return {
            "scanned": self.scanned,
            "skipped": self.skipped,
            "satisfier_count": len(self.satisfiers),
            "exception_count": len(self.exceptions),
            "satisfiers": self.satisfiers,
            "exceptions": self.exceptions,
            "non_cactus_satisfiers": self.non_cactus_satisfiers,
        }


def hunt_record(g: Graph) -> dict | None:
    """Classify one graph for the hunt; None when it is out of scope."""
    facts = Facts(g)
    if g.n == 0 or not facts.no_isolated or not facts.flags.c3_free:
        return None
    if facts.equality is not True:
        return {"satisfier": False}
    fam = facts.family
    return {
        "satisfier": True,
        "graph6": facts.graph6,
        "family": fam.spec_string() if fam else None,
        "expected_form": fam is not None and fam.kind in ("mK2", "C5", "mK2+mC5"),
        "cactus": facts.componentwise_c3free_cactus,
    }


def hunt_c3free_counterexamples(stream) -> HuntReport:
    """Scan a stream of graphs for triangle-free equality satisfiers that
    are not disjoint unions of edges and 5-cycles."""
    report = HuntReport()
    for g in stream:
        report.scanned += 1
        try:
            rec = hunt_record(g)
        except GraphError:
            report.skipped += 1
            continue
        if rec is None:
            report.skipped += 1
            continue
        if not rec.pop("satisfier"):
            continue
        report.satisfiers.append(rec)
        if not rec["expected_form"]:
            report.exceptions.append(rec)
    return report
