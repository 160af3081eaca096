"""Fundamental-group bookkeeping for genus-k attaching data.

A diagram is a genus together with k attaching words on the boundary
surface.  Projecting a word to the handlebody deletes every a-letter
(each bounds a disc on the inside) and keeps the b-letters in order;
the projected attaching words are the relators of a presentation on the
b-generators.  When each canonical a-curve pairs with exactly one
attaching word, the group is a free product of cyclic factors and the
diagram classifies; otherwise the verdict is "undecided".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import IndexOutOfGenusError, InputFormatError, InvalidGenusError
from .intersections import pairing
from .words import CurveWord, alpha_word, parse_word


@dataclass(frozen=True)
class HeegaardDiagram:
    """Genus k plus the k attaching words, all of that genus."""

    genus: int
    attaching: tuple[CurveWord, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidGenusError(f"genus must be a positive integer, got {self.genus!r}")
        object.__setattr__(self, "attaching", tuple(self.attaching))
        if len(self.attaching) != self.genus:
            raise InputFormatError(
                f"expected {self.genus} attaching words, got {len(self.attaching)}"
            )
        for word in self.attaching:
            if word.genus != self.genus:
                raise InputFormatError(
                    f"attaching word has genus {word.genus}, expected {self.genus}"
                )


def build_heegaard(genus: int, words: Sequence[str]) -> HeegaardDiagram:
    """Parse the attaching words at the given genus and validate the count."""
    return HeegaardDiagram(genus, tuple(parse_word(text, genus) for text in words))


def project_to_handlebody(word: CurveWord) -> CurveWord:
    """Image of a boundary word in the handlebody group.

    Every a-letter bounds a disc on the handlebody side and dies; the
    b-letters survive in their original order and the result is freely
    reduced.  This is a homomorphism with respect to concatenation.
    """
    kept = tuple(s for s in word.syllables if s[0].kind == "b")
    return CurveWord(word.genus, kept)


@dataclass(frozen=True)
class Presentation:
    """Group presentation on the b-generators with one relator per handle.

    ``abelianization`` row i holds the b-exponent sums of relator i.
    """

    genus: int
    relators: tuple[CurveWord, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidGenusError(f"genus must be a positive integer, got {self.genus!r}")
        object.__setattr__(self, "relators", tuple(self.relators))
        for relator in self.relators:
            if any(letter.kind != "b" for letter, _ in relator.syllables):
                raise InputFormatError("relators may only use b-letters")

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(f"b{i}" for i in range(1, self.genus + 1))

    @property
    def abelianization(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(relator.exponent_sum("b", j) for j in range(1, self.genus + 1))
            for relator in self.relators
        )

    def render(self) -> str:
        relators = ", ".join(str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {relators} >"


def presentation(diagram: HeegaardDiagram) -> Presentation:
    """Presentation with relator i the handlebody projection of attaching word i."""
    return Presentation(
        diagram.genus,
        tuple(project_to_handlebody(word) for word in diagram.attaching),
    )


def homogeneity_check(word: CurveWord, j: int) -> bool:
    """True when the a_j and b_j occurrences of ``word`` each balance.

    Words are stored freely reduced, so occurrence balance for the stored
    product form is exactly the vanishing of both exponent sums at index
    ``j``.
    """
    if j < 1 or j > word.genus:
        raise IndexOutOfGenusError(f"index {j} outside 1..{word.genus}")
    return word.exponent_sum("a", j) == 0 and word.exponent_sum("b", j) == 0


class BlockDecomposition(NamedTuple):
    """``sigma[i-1]`` is the 1-based attaching word matched to canonical index i;
    ``blocks[i-1]`` is ``(i, r_i)`` with ``r_i`` the absolute pairing of that word
    against ``a_i`` (0 encodes an infinite cyclic block)."""

    sigma: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]


def block_decompose(diagram: HeegaardDiagram) -> Optional[BlockDecomposition]:
    """Search for a permutation pairing each a-curve with one attaching word.

    Succeeds when every canonical index i is paired against at most one
    attaching word (all off-permutation pairings vanish); indices paired
    with nothing receive leftover words and order 0.  Returns None when
    some a-curve pairs with two or more words or two indices would claim
    the same word.
    """
    k = diagram.genus
    alphas = [alpha_word(k, i) for i in range(1, k + 1)]
    table = [
        [pairing(word, alpha) for alpha in alphas] for word in diagram.attaching
    ]
    forced: dict[int, int] = {}
    for i in range(1, k + 1):
        support = [j for j in range(1, k + 1) if table[j - 1][i - 1] != 0]
        if len(support) > 1:
            return None
        if support:
            forced[i] = support[0]
    if len(set(forced.values())) != len(forced):
        return None
    free_words = [j for j in range(1, k + 1) if j not in forced.values()]
    sigma = []
    for i in range(1, k + 1):
        sigma.append(forced[i] if i in forced else free_words.pop(0))
    blocks = tuple((i, abs(table[sigma[i - 1] - 1][i - 1])) for i in range(1, k + 1))
    return BlockDecomposition(tuple(sigma), blocks)


@dataclass(frozen=True)
class ClassificationReport:
    """Free-product classification of a diagram.

    ``orders`` holds the per-index cyclic orders r_i (0 for an infinite
    cyclic block); ``pi1`` is the rendered free product with order-1
    blocks dropped.  Blocks of order 1 are trivial connected summands and
    are discarded before the finite and prime verdicts.
    """

    sigma: Optional[tuple[int, ...]]
    orders: Optional[tuple[int, ...]]
    pi1: str
    simply_connected: bool
    finite: bool
    prime: bool
    note: str = ""


def classify(diagram: HeegaardDiagram) -> ClassificationReport:
    """Classify a diagram through its block decomposition.

    Non-block diagrams report "undecided".  Otherwise the group is the
    free product of the per-block cyclic factors: simply connected iff
    every order is 1; finite iff at most one nontrivial block remains and
    it is a finite cyclic factor; prime iff at most one nontrivial block
    remains.
    """
    decomposition = block_decompose(diagram)
    if decomposition is None:
        return ClassificationReport(
            None, None, "undecided", False, False, False,
            note="non-block diagram: no exclusive pairing permutation",
        )
    orders = tuple(r for _, r in decomposition.blocks)
    nontrivial = [r for r in orders if r != 1]
    factors = ["Z" if r == 0 else f"Z/{r}" for r in nontrivial]
    pi1 = " * ".join(factors) if factors else "1"
    return ClassificationReport(
        sigma=decomposition.sigma,
        orders=orders,
        pi1=pi1,
        simply_connected=not nontrivial,
        finite=len(nontrivial) <= 1 and all(r >= 2 for r in nontrivial),
        prime=len(nontrivial) <= 1,
    )


def report_to_dict(report: ClassificationReport) -> dict:
    """JSON-ready form with the fixed report schema keys."""
    return {
        "sigma": list(report.sigma) if report.sigma is not None else None,
        "orders": list(report.orders) if report.orders is not None else None,
        "pi1": report.pi1,
        "simply_connected": report.simply_connected,
        "finite": report.finite,
        "prime": report.prime,
    }


_GENUS_LINE = re.compile(r"genus\s+([0-9]+)")


def parse_diagram_file(text: str) -> HeegaardDiagram:
    """Parse the line-oriented diagram format.

    Line 1 is ``genus k``; the next k lines hold one attaching word each;
    ``#`` starts a comment anywhere on a line.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputFormatError("empty diagram file")
    match = _GENUS_LINE.fullmatch(lines[0])
    if match is None:
        raise InputFormatError(f"first line must be 'genus k', got {lines[0]!r}")
    genus = int(match.group(1))
    words = lines[1:]
    if len(words) != genus:
        raise InputFormatError(
            f"expected {genus} attaching words after the genus line, got {len(words)}"
        )
    return build_heegaard(genus, words)
