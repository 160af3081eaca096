"""Bookkeeping rewriter for stacks of elementary cobordism records.

Each record is a critical point with an index in 0..3 and optional
incidence pairings against records of index one greater (the pairing of
its right-hand sphere with the partner's left-hand sphere on the shared
level surface).  Chains rewrite by commuting independent records and by
cancelling a pair of adjacent-index records whose pairing is +1 or -1;
every move preserves the alternating sum r0 - r1 + r2 - r3.

Incidence values are caller-supplied integers: this layer rewrites
symbolically and does not derive pairings from any geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import ChainError, InputFormatError

_VALID_INDICES = (0, 1, 2, 3)


@dataclass(frozen=True)
class CriticalRecord:
    """One critical point: an id, an index in 0..3, and incidence pairings.

    ``incidence`` maps partner ids (which must belong to records of index
    one greater) to signed integers; it is stored as a sorted tuple so
    records stay hashable.
    """

    id: str
    index: int
    incidence: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.id, str):
            raise ChainError(f"record ids must be strings, got {self.id!r}")
        if self.index not in _VALID_INDICES:
            raise ChainError(f"invalid index {self.index!r} for record {self.id!r}")
        items = (
            self.incidence.items()
            if isinstance(self.incidence, Mapping)
            else tuple(self.incidence)
        )
        for partner, value in items:
            if not isinstance(partner, str):
                raise ChainError(f"incidence partners must be string ids, got {partner!r}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise ChainError(f"incidence values must be integers, got {value!r}")
        normalized = tuple(sorted((partner, value) for partner, value in items))
        partners = [p for p, _ in normalized]
        if len(set(partners)) != len(partners):
            raise ChainError(f"duplicate incidence partner on record {self.id!r}")
        object.__setattr__(self, "incidence", normalized)

    @property
    def incidence_map(self) -> dict[str, int]:
        return dict(self.incidence)


@dataclass(frozen=True)
class CobordismChain:
    """An ordered stack of records (composition order along the chain)."""

    records: tuple[CriticalRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        by_id = {}
        for record in self.records:
            if record.id in by_id:
                raise ChainError(f"duplicate record id {record.id!r}")
            by_id[record.id] = record
        for record in self.records:
            for partner, _ in record.incidence:
                if partner not in by_id:
                    raise ChainError(
                        f"incidence of {record.id!r} references missing record {partner!r}"
                    )
                if by_id[partner].index != record.index + 1:
                    raise ChainError(
                        f"incidence partner {partner!r} of {record.id!r} must have index "
                        f"{record.index + 1}"
                    )
        if self.is_closed and self.euler != 0:
            raise ChainError(
                f"closed chain must satisfy r0 - r1 + r2 - r3 = 0, got {self.euler}"
            )

    @property
    def type_vector(self) -> tuple[int, int, int, int]:
        counts = [0, 0, 0, 0]
        for record in self.records:
            counts[record.index] += 1
        return tuple(counts)

    @property
    def euler(self) -> int:
        r0, r1, r2, r3 = self.type_vector
        return r0 - r1 + r2 - r3

    @property
    def is_closed(self) -> bool:
        r0, _, _, r3 = self.type_vector
        return r0 >= 1 and r3 >= 1

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(record.id for record in self.records)

    def record(self, record_id: str) -> CriticalRecord:
        for record in self.records:
            if record.id == record_id:
                return record
        raise ChainError(f"no record {record_id!r} in this chain")


RecordLike = Union[CriticalRecord, Mapping]


def build_chain(records: Iterable[RecordLike]) -> CobordismChain:
    """Build a chain from records or from ``{"id", "index", "incidence"}`` mappings."""
    normalized = []
    for item in records:
        if isinstance(item, CriticalRecord):
            normalized.append(item)
        elif isinstance(item, Mapping):
            try:
                normalized.append(
                    CriticalRecord(
                        item["id"], item["index"], item.get("incidence", {})
                    )
                )
            except KeyError as exc:
                raise InputFormatError(f"record payload missing field: {exc}") from exc
        else:
            raise InputFormatError(f"cannot build a record from {item!r}")
    return CobordismChain(tuple(normalized))


def pairing_between(chain: CobordismChain, first: str, second: str) -> int:
    """Recorded pairing between two records; 0 when absent or indices not adjacent."""
    a, b = chain.record(first), chain.record(second)
    if b.index == a.index + 1:
        return a.incidence_map.get(second, 0)
    if a.index == b.index + 1:
        return b.incidence_map.get(first, 0)
    return 0


def _commutes(chain: CobordismChain, first: str, second: str) -> bool:
    # Equal-index records always commute; records of adjacent index commute
    # when no nonzero pairing is recorded.  No pairing data exists between
    # non-adjacent indices, so those commute as well.
    if chain.record(first).index == chain.record(second).index:
        return True
    return pairing_between(chain, first, second) == 0


def boundary_genus_profile(chain: CobordismChain) -> tuple[int, ...]:
    """Genus of each level surface between consecutive records.

    Requires a closed chain sorted by index: each index-1 record adds a
    handle, each index-2 record removes one.
    """
    if not chain.is_closed:
        raise ChainError("genus profile requires a closed chain")
    indices = [record.index for record in chain.records]
    if indices != sorted(indices):
        raise ChainError("genus profile requires records sorted by index")
    profile = []
    genus = 0
    for record in chain.records[:-1]:
        if record.index == 1:
            genus += 1
        elif record.index == 2:
            genus -= 1
        profile.append(genus)
    return tuple(profile)


def rearrange(chain: CobordismChain, target_order: Sequence[str]) -> CobordismChain:
    """Reorder the records to ``target_order`` by commuting independent records.

    Any pair whose relative order flips must commute (equal index or zero
    pairing); the type vector and all incidence data are unchanged.
    """
    order = tuple(target_order)
    if sorted(order) != sorted(chain.ids):
        raise ChainError("target order must be a permutation of the record ids")
    new_position = {record_id: i for i, record_id in enumerate(order)}
    old = chain.ids
    for a in range(len(old)):
        for b in range(a + 1, len(old)):
            x, y = old[a], old[b]
            if new_position[x] > new_position[y] and not _commutes(chain, x, y):
                raise ChainError(
                    f"cannot commute {x!r} past {y!r}: nonzero pairing between "
                    "records of adjacent index"
                )
    return CobordismChain(tuple(chain.record(record_id) for record_id in order))


def _strip_incidence(record: CriticalRecord, removed: set[str]) -> CriticalRecord:
    if not any(partner in removed for partner, _ in record.incidence):
        return record
    kept = tuple(item for item in record.incidence if item[0] not in removed)
    return CriticalRecord(record.id, record.index, kept)


def cancel_pair(chain: CobordismChain, id1: str, id2: str) -> CobordismChain:
    """Cancel two records of adjacent index whose pairing is +1 or -1.

    The pair must be movable into adjacency: every record between them in
    the chain must commute with ``id1``, or every one must commute with
    ``id2``.  Both records are deleted; survivors keep their order and
    their pairings (entries referencing the deleted pair are dropped).
    """
    first, second = chain.record(id1), chain.record(id2)
    if second.index != first.index + 1:
        raise ChainError(
            f"cancellation needs indices k and k+1, got {first.index} and {second.index}"
        )
    value = pairing_between(chain, id1, id2)
    if value not in (1, -1):
        raise ChainError(f"pairing {value} between {id1!r} and {id2!r} is not +1 or -1")
    positions = {record_id: i for i, record_id in enumerate(chain.ids)}
    lo, hi = sorted((positions[id1], positions[id2]))
    between = [chain.records[i].id for i in range(lo + 1, hi)]
    if not (
        all(_commutes(chain, x, id1) for x in between)
        or all(_commutes(chain, x, id2) for x in between)
    ):
        raise ChainError(
            f"records between {id1!r} and {id2!r} block the cancellation"
        )
    removed = {id1, id2}
    survivors = tuple(
        _strip_incidence(record, removed)
        for record in chain.records
        if record.id not in removed
    )
    return CobordismChain(survivors)


def _eligible_pairs(
    chain: CobordismChain, index_pairs: tuple[tuple[int, int], ...]
) -> list[tuple[str, str]]:
    found = []
    for record in chain.records:
        for partner, value in record.incidence:
            if value not in (1, -1):
                continue
            if (record.index, record.index + 1) not in index_pairs:
                continue
            try:
                cancel_pair(chain, record.id, partner)
            except ChainError:
                continue
            found.append((record.id, partner))
    return sorted(found)


def normalize(
    chain: CobordismChain,
) -> tuple[CobordismChain, tuple[tuple[str, str], ...]]:
    """Greedily cancel unit-pairing pairs, lowest id pair first.

    First pass: 0/1 and 2/3 pairs, keeping at least one record of index 0
    and one of index 3.  Second pass: 1/2 pairs.  Returns the fixed point
    together with the trace of cancelled pairs.
    """
    if not chain.is_closed:
        raise ChainError("normalize requires a closed chain")
    current = chain
    moves: list[tuple[str, str]] = []

    def sweep(pair_picker) -> None:
        nonlocal current
        while True:
            pairs = pair_picker(current)
            if not pairs:
                return
            move = pairs[0]
            current = cancel_pair(current, *move)
            moves.append(move)

    def outer_pairs(c: CobordismChain) -> list[tuple[str, str]]:
        r0, _, _, r3 = c.type_vector
        allowed = []
        if r0 >= 2:
            allowed.append((0, 1))
        if r3 >= 2:
            allowed.append((2, 3))
        return _eligible_pairs(c, tuple(allowed)) if allowed else []

    sweep(outer_pairs)
    sweep(lambda c: _eligible_pairs(c, ((1, 2),)))
    return current, tuple(moves)


def dual(chain: CobordismChain) -> CobordismChain:
    """Run the chain backwards: index k becomes 3-k and incidence transposes."""
    transposed: dict[str, dict[str, int]] = {record.id: {} for record in chain.records}
    for record in chain.records:
        for partner, value in record.incidence:
            transposed[partner][record.id] = value
    return CobordismChain(
        tuple(
            CriticalRecord(record.id, 3 - record.index, transposed[record.id])
            for record in reversed(chain.records)
        )
    )


def chain_to_dict(chain: CobordismChain) -> dict:
    """JSON-ready form: ``{"records": [{"id", "index", "incidence"}, ...]}``."""
    return {
        "records": [
            {
                "id": record.id,
                "index": record.index,
                "incidence": {p: v for p, v in record.incidence},
            }
            for record in chain.records
        ]
    }


def chain_from_dict(payload: dict) -> CobordismChain:
    """Parse the chain JSON schema."""
    try:
        records = payload["records"]
    except (TypeError, KeyError) as exc:
        raise InputFormatError(f"chain payload missing field: {exc}") from exc
    return build_chain(records)
