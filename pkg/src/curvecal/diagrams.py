"""Combinatorial crossing data for two transverse closed curves.

A diagram records the signed crossings of curves M and M' together with
the cyclic order in which the crossings are met along each curve.  A
bigon is a pair of opposite-sign crossings adjacent on both curves;
removing one deletes exactly those two crossings and conserves the
algebraic sum of signs.  Diagrams are immutable; reduction returns new
diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, NamedTuple, Optional, Sequence

from .errors import DiagramError, InputFormatError


class Crossing(NamedTuple):
    id: str
    sign: int


class Bigon(NamedTuple):
    p: str
    q: str


@dataclass(frozen=True)
class CrossingDiagram:
    """Signed crossings plus the two cyclic orders (stored as plain tuples).

    The orders are cyclic sequences: rotating either tuple describes the
    same diagram, though equality compares the stored representatives.
    """

    order_on_m: tuple[str, ...]
    order_on_mprime: tuple[str, ...]
    signs: tuple[tuple[str, int], ...]

    @property
    def ids(self) -> frozenset[str]:
        return frozenset(self.order_on_m)

    @property
    def count(self) -> int:
        return len(self.order_on_m)

    @property
    def signed_sum(self) -> int:
        return sum(sign for _, sign in self.signs)

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        return tuple(Crossing(i, s) for i, s in self.signs)

    def sign_of(self, crossing_id: str) -> int:
        for i, s in self.signs:
            if i == crossing_id:
                return s
        raise DiagramError(f"no crossing {crossing_id!r} in this diagram")


def build_diagram(
    order_on_m: Sequence[str],
    order_on_mprime: Sequence[str],
    signs: Mapping[str, int],
) -> CrossingDiagram:
    """Validate and build a diagram.

    Both orders must be permutations of the same id set, every id needs a
    sign of +1 or -1, and ids must be strings (they double as JSON keys).
    """
    m_order = tuple(order_on_m)
    mprime_order = tuple(order_on_mprime)
    for order, name in ((m_order, "m_order"), (mprime_order, "mprime_order")):
        if len(set(order)) != len(order):
            raise DiagramError(f"duplicate ids in {name}")
        for crossing_id in order:
            if not isinstance(crossing_id, str):
                raise DiagramError(f"crossing ids must be strings, got {crossing_id!r}")
    if set(m_order) != set(mprime_order):
        raise DiagramError("the two cyclic orders list different id sets")
    if set(signs) != set(m_order):
        missing = set(m_order) - set(signs)
        extra = set(signs) - set(m_order)
        raise DiagramError(
            f"sign table does not match ids (missing {sorted(missing)}, extra {sorted(extra)})"
        )
    for crossing_id, sign in signs.items():
        if sign not in (1, -1):
            raise DiagramError(f"sign of {crossing_id!r} must be +1 or -1, got {sign!r}")
    return CrossingDiagram(
        m_order,
        mprime_order,
        tuple(sorted((i, signs[i]) for i in m_order)),
    )


def _positions(order: tuple[str, ...]) -> dict[str, int]:
    return {crossing_id: i for i, crossing_id in enumerate(order)}


def _adjacent(positions: dict[str, int], n: int, p: str, q: str) -> bool:
    if n < 2:
        return False
    d = abs(positions[p] - positions[q])
    return d == 1 or d == n - 1


def is_bigon(diagram: CrossingDiagram, p: str, q: str) -> bool:
    """True when (p, q) are opposite-sign crossings adjacent in both cyclic orders."""
    if p not in diagram.ids or q not in diagram.ids or p == q:
        return False
    if diagram.sign_of(p) == diagram.sign_of(q):
        return False
    n = diagram.count
    return _adjacent(_positions(diagram.order_on_m), n, p, q) and _adjacent(
        _positions(diagram.order_on_mprime), n, p, q
    )


def all_bigons(diagram: CrossingDiagram) -> tuple[Bigon, ...]:
    """Every bigon of the diagram, as sorted id pairs in lexicographic order."""
    pos_m = _positions(diagram.order_on_m)
    pos_mp = _positions(diagram.order_on_mprime)
    sign = dict(diagram.signs)
    n = diagram.count
    found = []
    for p, q in combinations(sorted(diagram.ids), 2):
        if sign[p] != sign[q] and _adjacent(pos_m, n, p, q) and _adjacent(pos_mp, n, p, q):
            found.append(Bigon(p, q))
    return tuple(found)


def find_bigon(diagram: CrossingDiagram) -> Optional[Bigon]:
    """The lexicographically least bigon, or None."""
    bigons = all_bigons(diagram)
    return bigons[0] if bigons else None


def remove_bigon(diagram: CrossingDiagram, bigon: Bigon) -> CrossingDiagram:
    """Delete both crossings of ``bigon`` from both cyclic orders.

    All other crossings and their relative order are untouched; the
    algebraic sum of signs is conserved because the two signs cancel.
    """
    p, q = bigon
    if not is_bigon(diagram, p, q):
        raise DiagramError(f"({p!r}, {q!r}) is not a bigon of this diagram")
    removed = {p, q}
    return CrossingDiagram(
        tuple(i for i in diagram.order_on_m if i not in removed),
        tuple(i for i in diagram.order_on_mprime if i not in removed),
        tuple(item for item in diagram.signs if item[0] not in removed),
    )


def reduce_trace(diagram: CrossingDiagram) -> tuple[CrossingDiagram, tuple[Bigon, ...]]:
    """Remove bigons (least pair first) until none remains; returns the trace."""
    trace = []
    current = diagram
    while True:
        bigon = find_bigon(current)
        if bigon is None:
            return current, tuple(trace)
        current = remove_bigon(current, bigon)
        trace.append(bigon)


def reduce_to_minimal(diagram: CrossingDiagram) -> tuple[CrossingDiagram, int]:
    """Fully reduced diagram plus the number of removal steps.

    Terminates in at most count/2 steps; the final count is at least
    ``abs(signed_sum)`` and congruent to it mod 2.
    """
    reduced, trace = reduce_trace(diagram)
    return reduced, len(trace)


def diagram_to_dict(diagram: CrossingDiagram) -> dict:
    """JSON-ready form: ``{"m_order": [...], "mprime_order": [...], "signs": {...}}``."""
    return {
        "m_order": list(diagram.order_on_m),
        "mprime_order": list(diagram.order_on_mprime),
        "signs": {i: s for i, s in diagram.signs},
    }


def diagram_from_dict(payload: dict) -> CrossingDiagram:
    """Parse the diagram JSON schema."""
    try:
        m_order = payload["m_order"]
        mprime_order = payload["mprime_order"]
        signs = payload["signs"]
    except (TypeError, KeyError) as exc:
        raise InputFormatError(f"diagram payload missing field: {exc}") from exc
    if not isinstance(signs, Mapping):
        raise InputFormatError("diagram signs must be an object of id -> sign")
    return build_diagram(m_order, mprime_order, {str(k): v for k, v in signs.items()})
