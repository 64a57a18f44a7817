"""Charges, the R1-R8 transfer rules and per-graph audits.

All arithmetic uses :class:`fractions.Fraction`, so conservation checks are
exact.  Charges start at ``deg(v) - 6``; a plane triangulation totals -12 and
a projective-plane triangulation totals -6.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config_match import (
    Configuration,
    Matching,
    NoConfigurationFound,
    find_configuration,
    load_catalog,
)
from .graph_core import PLANE, EmbeddedGraph, GraphError, is_triangulation


class TotalChargeMismatch(GraphError):
    pass


class NotDegreeFour(GraphError):
    pass


def expected_total(G: EmbeddedGraph) -> Fraction:
    return Fraction(-12) if G.surface == PLANE else Fraction(-6)


@dataclass
class ChargeMap:
    charge: Dict[int, Fraction]
    phase: str  # "initial" or "final"

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def negatives(self) -> List[int]:
        return sorted(v for v, c in self.charge.items() if c < 0)


@dataclass(frozen=True)
class Transfer:
    source: int
    target: int
    amount: Fraction
    rule: str


@dataclass
class TransferLedger:
    entries: List[Transfer] = field(default_factory=list)

    def replay(self, initial: ChargeMap) -> ChargeMap:
        out = dict(initial.charge)
        for t in self.entries:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return ChargeMap(out, "final")

    def by_rule(self) -> Counter:
        return Counter(t.rule for t in self.entries)


def initial_charges(G: EmbeddedGraph) -> ChargeMap:
    charge = {v: Fraction(G.degree(v) - 6) for v in G.vertices}
    cm = ChargeMap(charge, "initial")
    if cm.total() != expected_total(G):
        raise TotalChargeMismatch(
            f"initial charges sum to {cm.total()}, expected {expected_total(G)} on {G.surface}"
        )
    return cm


# 4-vertex patterns over the sorted (descending) degrees of all four
# neighbours, listed in precedence order.
def _r8(d):
    return d[0] >= 8 and d[1] == 7 and d[2] == 6 and d[3] == 6


def _r7(d):
    return d[0] >= 8 and d[3] == 6 and ((d[1] >= 8 and d[2] == 6) or (d[1] == 7 and d[2] == 7))


def _r5(d):
    return d[0] >= 8 and d[1] >= 8 and d[2] == 7 and d[3] == 6


def _r4(d):
    return d[2] >= 8 and d[3] == 6


def _r6(d):
    return d[0] >= 8 and d[3] >= 7


FOUR_VERTEX_RULES: Sequence[Tuple[str, object, Fraction]] = (
    ("R8", _r8, Fraction(3, 2)),
    ("R7", _r7, Fraction(1)),
    ("R5", _r5, Fraction(3, 4)),
    ("R4", _r4, Fraction(2, 3)),
    ("R6", _r6, Fraction(1, 2)),
)


def four_vertex_patterns(degrees: Sequence[int]) -> List[str]:
    """Every R4-R8 pattern the neighbour-degree multiset fits, ignoring precedence."""
    d = sorted(degrees, reverse=True)
    return [rule for rule, pred, _ in FOUR_VERTEX_RULES if pred(d)]


def classify_four_vertex(degrees: Sequence[int]) -> Optional[Tuple[str, Fraction]]:
    """The rule an 8+-neighbour applies to a 4-vertex with these neighbour degrees."""
    if len(degrees) != 4:
        raise NotDegreeFour(f"expected 4 neighbour degrees, got {len(degrees)}")
    d = sorted(degrees, reverse=True)
    for rule, pred, amount in FOUR_VERTEX_RULES:
        if pred(d):
            return rule, amount
    return None


def neighbor_degrees(G: EmbeddedGraph, v: int) -> List[int]:
    return [G.degree(u) for u in G.neighbors(v)]


def is_bad_4_vertex(G: EmbeddedGraph, v: int) -> bool:
    if G.degree(v) != 4:
        raise NotDegreeFour(f"vertex {v} has degree {G.degree(v)}")
    return _r8(sorted(neighbor_degrees(G, v), reverse=True))


def _transfer(G: EmbeddedGraph, s: int, t: int) -> Optional[Tuple[str, Fraction]]:
    ds, dt = G.degree(s), G.degree(t)
    if ds == 7:
        if dt == 5:
            return "R1", Fraction(1, 3)
        if dt == 4:
            return "R2", Fraction(1, 2)
    elif ds >= 8:
        if dt == 5:
            return "R3", Fraction(1, 2)
        if dt == 4:
            return classify_four_vertex(neighbor_degrees(G, t))
    return None


def discharge(G: EmbeddedGraph) -> Tuple[ChargeMap, TransferLedger]:
    """Apply R1-R8 once, all decided from the initial degrees."""
    if not is_triangulation(G):
        raise GraphError("discharge expects a triangulation")
    init = initial_charges(G)
    ledger = TransferLedger()
    for s in G.vertices:
        if G.degree(s) < 7:
            continue
        for t in G.neighbors(s):
            hit = _transfer(G, s, t)
            if hit is not None:
                ledger.entries.append(Transfer(s, t, hit[1], hit[0]))
    final = ledger.replay(init)
    if final.total() != init.total():  # cannot happen with exact arithmetic
        raise TotalChargeMismatch("ledger replay changed the total charge")
    return final, ledger


@dataclass
class AuditReport:
    initial_total: Fraction
    final_total: Fraction
    expected_total: Fraction
    negative: List[int]
    config_id: Optional[str]
    matching: Optional[Matching]
    rule_counts: Counter

    @property
    def conserved(self) -> bool:
        return self.initial_total == self.final_total == self.expected_total

    @property
    def contradiction(self) -> bool:
        """No configuration found even though the total charge is negative.

        The unavoidability argument would then force every final charge to be
        non-negative, which conservation rules out.
        """
        return self.config_id is None and self.final_total < 0

    @property
    def ok(self) -> bool:
        return self.conserved and self.config_id is not None


def audit(G: EmbeddedGraph, catalog: Optional[List[Configuration]] = None) -> AuditReport:
    catalog = load_catalog() if catalog is None else catalog
    init = initial_charges(G)
    final, ledger = discharge(G)
    try:
        cid, m = find_configuration(G, catalog)
    except NoConfigurationFound:
        cid, m = None, None
    return AuditReport(
        initial_total=init.total(),
        final_total=final.total(),
        expected_total=expected_total(G),
        negative=final.negatives(),
        config_id=cid,
        matching=m,
        rule_counts=ledger.by_rule(),
    )


def format_discharge_report(G: EmbeddedGraph, catalog: Optional[List[Configuration]] = None) -> str:
    init = initial_charges(G)
    final, ledger = discharge(G)
    rep = audit(G, catalog)
    lines = [f"{v} initial {init.charge[v]} final {final.charge[v]}" for v in G.vertices]
    lines += [f"{t.rule} {t.source} {t.target} {t.amount}" for t in ledger.entries]
    lines.append(f"total initial {rep.initial_total} final {rep.final_total}")
    lines.append(f"config {rep.config_id if rep.config_id else 'NONE'}")
    return "\n".join(lines) + "\n"
