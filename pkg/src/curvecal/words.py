"""Cyclic words in the canonical generators of a genus-k surface group.

A word is a sequence of syllables ``(letter, exponent)`` over the 2k
generators ``a1, b1, ..., ak, bk``.  Words are stored freely reduced at
all times: adjacent syllables never share a letter, no exponent is zero,
and the empty word is the identity class.  All values are immutable and
every operation is a pure function, so values can be shared freely
between threads or processes.

The text grammar is whitespace-separated tokens ``('a'|'b') index
['^' signed-nonzero-integer]`` with 1-based indices; a missing exponent
means 1 and the empty string denotes the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    ExponentLimitError,
    GenusMismatchError,
    IndexOutOfGenusError,
    InvalidGenusError,
    WordSyntaxError,
    ZeroExponentError,
)

DEFAULT_MAX_EXPONENT = 10**6

_max_exponent = DEFAULT_MAX_EXPONENT


def get_max_exponent() -> int:
    """Current bound on the magnitude of any stored exponent."""
    return _max_exponent


def set_max_exponent(limit: int) -> None:
    """Override the exponent bound (the CLI maps ``CURVECAL_MAX_EXP`` here)."""
    global _max_exponent
    if limit < 1:
        raise ValueError("exponent limit must be positive")
    _max_exponent = limit


class Letter(NamedTuple):
    """A single canonical generator: kind ``'a'`` or ``'b'`` plus a 1-based index."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def _check_exponent(exponent: int) -> None:
    if abs(exponent) > _max_exponent:
        raise ExponentLimitError(
            f"exponent {exponent} exceeds the configured limit {_max_exponent}"
        )


def _reduced(syllables: Iterable[tuple[Letter, int]]) -> tuple[tuple[Letter, int], ...]:
    # Stack-based free reduction; cascading cancellations fall out of the pop.
    out: list[tuple[Letter, int]] = []
    for letter, exponent in syllables:
        if exponent == 0:
            continue
        _check_exponent(exponent)
        if out and out[-1][0] == letter:
            merged = out[-1][1] + exponent
            if merged == 0:
                out.pop()
            else:
                _check_exponent(merged)
                out[-1] = (letter, merged)
        else:
            out.append((letter, exponent))
    return tuple(out)


@dataclass(frozen=True)
class CurveWord:
    """A freely reduced word on a genus-``genus`` surface.

    ``cyclic`` marks a free-homotopy (conjugacy class) representative; it
    is informational and excluded from equality, which compares the genus
    and the reduced syllables only.
    """

    genus: int
    syllables: tuple[tuple[Letter, int], ...] = ()
    cyclic: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidGenusError(f"genus must be a positive integer, got {self.genus!r}")
        for letter, _ in self.syllables:
            if letter.kind not in ("a", "b"):
                raise ValueError(f"letter kind must be 'a' or 'b', got {letter.kind!r}")
            if letter.index < 1 or letter.index > self.genus:
                raise IndexOutOfGenusError(
                    f"letter {letter} outside 1..{self.genus}"
                )
        object.__setattr__(self, "syllables", _reduced(self.syllables))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        """Letter length (sum of exponent magnitudes)."""
        return sum(abs(e) for _, e in self.syllables)

    def __mul__(self, other: "CurveWord") -> "CurveWord":
        return concat(self, other)

    def inverse(self) -> "CurveWord":
        return invert(self)

    __invert__ = inverse

    def exponent_sum(self, kind: str, index: int) -> int:
        """Total exponent of the generator ``kind index`` in this word."""
        return sum(e for l, e in self.syllables if l.kind == kind and l.index == index)

    def render(self) -> str:
        """Canonical text form: lowercase tokens, ``^`` only for exponent != 1."""
        return " ".join(
            str(l) if e == 1 else f"{l}^{e}" for l, e in self.syllables
        )

    def __str__(self) -> str:
        return self.render() or "1"


@dataclass(frozen=True)
class AbelianCoords:
    """Exponent-sum vectors of a word: ``m`` over the a-letters, ``n`` over the b-letters.

    For the word ``l`` these are exactly the pairing coefficients
    ``m[i-1] == pairing(l, b_i)`` and ``n[i-1] == -pairing(l, a_i)``.
    """

    genus: int
    m: tuple[int, ...]
    n: tuple[int, ...]

    def __post_init__(self):
        if len(self.m) != self.genus or len(self.n) != self.genus:
            raise ValueError("coordinate vectors must have length equal to the genus")

    @property
    def is_zero(self) -> bool:
        return not any(self.m) and not any(self.n)

    def __add__(self, other: "AbelianCoords") -> "AbelianCoords":
        if self.genus != other.genus:
            raise GenusMismatchError(f"genus mismatch: {self.genus} vs {other.genus}")
        return AbelianCoords(
            self.genus,
            tuple(x + y for x, y in zip(self.m, other.m)),
            tuple(x + y for x, y in zip(self.n, other.n)),
        )

    def __neg__(self) -> "AbelianCoords":
        return AbelianCoords(self.genus, tuple(-x for x in self.m), tuple(-x for x in self.n))

    def __sub__(self, other: "AbelianCoords") -> "AbelianCoords":
        return self + (-other)


_TOKEN = re.compile(r"([ab])([0-9]+)(?:\^([+-]?[0-9]+))?")


def parse_word(text: str, genus: int) -> CurveWord:
    """Parse a word string at the given genus, returning its reduced form.

    Whitespace-insensitive; the empty string yields the identity word.
    Raises :class:`WordSyntaxError` (with the character position),
    :class:`IndexOutOfGenusError` or :class:`ZeroExponentError` on bad
    input.
    """
    if not isinstance(genus, int) or genus < 1:
        raise InvalidGenusError(f"genus must be a positive integer, got {genus!r}")
    syllables = []
    for match in re.finditer(r"\S+", text):
        token, pos = match.group(), match.start()
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise WordSyntaxError(f"bad token {token!r}", pos)
        kind, index = m.group(1), int(m.group(2))
        if index < 1:
            raise WordSyntaxError(f"index must be at least 1 in {token!r}", pos)
        if index > genus:
            raise IndexOutOfGenusError(
                f"letter {kind}{index} exceeds genus {genus}"
            )
        exponent = 1 if m.group(3) is None else int(m.group(3))
        if exponent == 0:
            raise ZeroExponentError(f"zero exponent in token {token!r}")
        syllables.append((Letter(kind, index), exponent))
    return CurveWord(genus, tuple(syllables))


def render(word: CurveWord) -> str:
    """Canonical text form of ``word`` (inverse of :func:`parse_word`)."""
    return word.render()


def free_reduce(word: CurveWord) -> CurveWord:
    """Freely reduced form of ``word``.

    Construction reduces eagerly, so this is the identity on any value
    built through the public API; it exists for symmetry and for data
    assembled by hand.
    """
    return CurveWord(word.genus, word.syllables, word.cyclic)


def cyclic_reduce(word: CurveWord) -> CurveWord:
    """A cyclically reduced conjugacy representative of ``word``.

    The first and last syllables of the result never share a letter; the
    result is marked ``cyclic``.
    """
    syllables = list(word.syllables)
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        letter, first_exp = syllables[0]
        merged = syllables[-1][1] + first_exp
        middle = syllables[1:-1]
        syllables = middle if merged == 0 else middle + [(letter, merged)]
    return CurveWord(word.genus, tuple(syllables), cyclic=True)


def concat(left: CurveWord, right: CurveWord) -> CurveWord:
    """Freely reduced concatenation of two words of the same genus."""
    if left.genus != right.genus:
        raise GenusMismatchError(f"genus mismatch: {left.genus} vs {right.genus}")
    return CurveWord(left.genus, left.syllables + right.syllables)


def invert(word: CurveWord) -> CurveWord:
    """The reverse word with negated exponents; ``concat(w, invert(w))`` is the identity."""
    return CurveWord(
        word.genus,
        tuple((letter, -e) for letter, e in reversed(word.syllables)),
        word.cyclic,
    )


def abelianize(word: CurveWord) -> AbelianCoords:
    """Exponent sums of ``word``: invariant under free reduction, rotation and conjugation."""
    m = [0] * word.genus
    n = [0] * word.genus
    for letter, e in word.syllables:
        (m if letter.kind == "a" else n)[letter.index - 1] += e
    return AbelianCoords(word.genus, tuple(m), tuple(n))


def alpha_word(genus: int, index: int) -> CurveWord:
    """The canonical a-generator ``a_index`` as a word."""
    return CurveWord(genus, ((Letter("a", index), 1),))


def beta_word(genus: int, index: int) -> CurveWord:
    """The canonical b-generator ``b_index`` as a word."""
    return CurveWord(genus, ((Letter("b", index), 1),))


def commutator(u: CurveWord, v: CurveWord) -> CurveWord:
    """``u v u^-1 v^-1``, freely reduced."""
    return concat(concat(u, v), concat(invert(u), invert(v)))


def surface_relator(genus: int) -> CurveWord:
    """The product of commutators ``[a_1, b_1] ... [a_k, b_k]``."""
    word = CurveWord(genus)
    for i in range(1, genus + 1):
        word = concat(word, commutator(alpha_word(genus, i), beta_word(genus, i)))
    return word
