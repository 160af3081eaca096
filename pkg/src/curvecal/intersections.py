"""Intersection pairing of curve classes and change-of-basis machinery.

The pairing is the standard symplectic form on abelianized coordinates,
normalized so that ``pairing(alpha_word(k, i), beta_word(k, i)) == +1``
and all other canonical pairings vanish.  Everything is exact integer
arithmetic; determinants use fraction-free (Bareiss) elimination, never
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import GenusMismatchError, InputFormatError, InvalidGenusError
from .words import CurveWord, abelianize, alpha_word, beta_word

# The signed intersection number is a bare integer; it is antisymmetric
# in its arguments and bilinear over concatenation.
PairingValue = int


def _require_same_genus(left: CurveWord, right: CurveWord) -> None:
    if left.genus != right.genus:
        raise GenusMismatchError(f"genus mismatch: {left.genus} vs {right.genus}")


def pairing(l: CurveWord, g: CurveWord) -> PairingValue:
    """Signed intersection number of the classes of ``l`` and ``g``.

    Equals the sum over i of the 2x2 determinants of the canonical
    pairing coefficients of the two words; depends only on abelianized
    coordinates, hence is invariant under conjugation and rotation of
    either argument.
    """
    _require_same_genus(l, g)
    a, b = abelianize(l), abelianize(g)
    return sum(a.m[i] * b.n[i] - a.n[i] * b.m[i] for i in range(l.genus))


def mu_coords(l: CurveWord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair of pairing vectors ``(l . a_i, l . b_i)`` against the canonical basis."""
    coords = abelianize(l)
    return tuple(-x for x in coords.n), coords.m


def degree_lower_bound(l: CurveWord, g: CurveWord) -> int:
    """Lower bound for the crossing count of any transverse representatives.

    The sum of the per-index absolute 2x2 determinants.  This is only a
    bound for genus >= 2; it is not claimed to be the exact minimal
    crossing number there.
    """
    _require_same_genus(l, g)
    a, b = abelianize(l), abelianize(g)
    return sum(abs(a.m[i] * b.n[i] - a.n[i] * b.m[i]) for i in range(l.genus))


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _subscript(i: int) -> str:
    return str(i).translate(_SUBSCRIPTS)


def linear_expression(l: CurveWord) -> str:
    """Render ``l`` modulo the commutator subgroup as an integer combination.

    The coefficient of each alpha generator is ``pairing(l, b_i)`` and of
    each beta generator ``-pairing(l, a_i)``; a word with all zero
    coordinates renders as ``"0"``.
    """
    coords = abelianize(l)
    terms: list[tuple[int, str]] = []
    for symbol, coefs in (("α", coords.m), ("β", coords.n)):
        for i, coef in enumerate(coefs, start=1):
            if coef:
                terms.append((coef, f"{symbol}{_subscript(i)}"))
    if not terms:
        return "0"
    pieces = [f"{terms[0][0]}·{terms[0][1]}"]
    for coef, name in terms[1:]:
        sign = "+" if coef > 0 else "-"
        pieces.append(f"{sign} {abs(coef)}·{name}")
    return " ".join(pieces)


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise InputFormatError("matrix must be square")
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Fraction-free update: the division is exact.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class BasisCandidate:
    """A candidate generator system: k theta words and k gamma words of the same genus."""

    genus: int
    theta: tuple[CurveWord, ...]
    gamma: tuple[CurveWord, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidGenusError(f"genus must be a positive integer, got {self.genus!r}")
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if len(self.theta) != self.genus or len(self.gamma) != self.genus:
            raise InputFormatError(
                f"candidate needs exactly {self.genus} theta and gamma words"
            )
        for word in self.theta + self.gamma:
            if word.genus != self.genus:
                raise GenusMismatchError(
                    f"candidate word has genus {word.genus}, expected {self.genus}"
                )


@dataclass(frozen=True)
class BasisMatrix:
    """The 2k x 2k pairing matrix of a candidate system against the canonical basis.

    Rows are indexed by the theta words then the gamma words; the first k
    columns hold the alpha coefficients (pairings against b) and the last
    k the beta coefficients (negated pairings against a).
    """

    genus: int
    H: tuple[tuple[int, ...], ...]
    det: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidGenusError(f"genus must be a positive integer, got {self.genus!r}")
        size = 2 * self.genus
        for row in self.H:
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise InputFormatError(f"matrix entries must be integers, got {entry!r}")
        rows = tuple(tuple(row) for row in self.H)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise InputFormatError(f"matrix must be {size}x{size} for genus {self.genus}")
        object.__setattr__(self, "H", rows)
        determinant = integer_determinant(rows)
        if self.det is not None and self.det != determinant:
            raise InputFormatError(
                f"declared determinant {self.det} does not match computed {determinant}"
            )
        object.__setattr__(self, "det", determinant)


@dataclass(frozen=True)
class BasisVerdict:
    """Outcome of :func:`verify_basis`.

    ``block_permutation`` is present only for unimodular matrices whose
    candidate pairs each pair exclusively with one canonical index;
    entry i-1 names the candidate pair matched to canonical index i.
    """

    unimodular: bool
    block_permutation: Optional[tuple[int, ...]]
    diagnostics: str


def basis_matrix(candidate: BasisCandidate) -> BasisMatrix:
    """Pairing matrix of the candidate rows against the canonical single-letter words."""
    k = candidate.genus
    alphas = [alpha_word(k, i) for i in range(1, k + 1)]
    betas = [beta_word(k, i) for i in range(1, k + 1)]
    rows = []
    for word in candidate.theta + candidate.gamma:
        row = [pairing(word, b) for b in betas] + [-pairing(word, a) for a in alphas]
        rows.append(tuple(row))
    return BasisMatrix(k, tuple(rows))


def inverse_change_matrix(candidate: BasisCandidate) -> tuple[tuple[int, ...], ...]:
    """Matrix expressing the canonical generators through the candidate system.

    Rows are indexed by the alpha then beta words; the first k columns
    pair against the gamma words, the last k negate the pairings against
    the theta words.  For a genuine generator system this is the exact
    integer inverse of ``basis_matrix(candidate).H``.
    """
    k = candidate.genus
    alphas = [alpha_word(k, i) for i in range(1, k + 1)]
    betas = [beta_word(k, i) for i in range(1, k + 1)]
    rows = []
    for word in alphas + betas:
        row = [pairing(word, g) for g in candidate.gamma]
        row += [-pairing(word, t) for t in candidate.theta]
        rows.append(tuple(row))
    return tuple(rows)


def _block(matrix: BasisMatrix, pair: int, slot: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # 2x2 block of candidate pair `pair` (1-based) against canonical slot `slot`.
    k = matrix.genus
    r, c = pair - 1, slot - 1
    return (
        (matrix.H[r][c], matrix.H[r][k + c]),
        (matrix.H[k + r][c], matrix.H[k + r][k + c]),
    )


def verify_basis(matrix: BasisMatrix) -> BasisVerdict:
    """Check unimodularity and search for an exclusive block permutation.

    A candidate pair j is admissible for canonical slot i when both of
    its rows vanish outside columns (i, k+i) and the remaining 2x2 block
    has determinant +1 or -1.  Exclusivity gives each pair at most one
    admissible slot, so the perfect matching degenerates to an
    injectivity check.
    """
    k = matrix.genus
    if abs(matrix.det) != 1:
        return BasisVerdict(False, None, f"determinant {matrix.det} is not +1 or -1")
    assignment: dict[int, int] = {}
    for pair in range(1, k + 1):
        support = [
            slot
            for slot in range(1, k + 1)
            if any(any(row) for row in _block(matrix, pair, slot))
        ]
        if len(support) != 1:
            detail = (
                "has all-zero rows"
                if not support
                else f"meets canonical slots {support}"
            )
            return BasisVerdict(
                True, None, f"candidate pair {pair} {detail}; no block permutation"
            )
        slot = support[0]
        block = _block(matrix, pair, slot)
        d = block[0][0] * block[1][1] - block[0][1] * block[1][0]
        if abs(d) != 1:
            return BasisVerdict(
                True,
                None,
                f"block of candidate pair {pair} at slot {slot} has determinant {d}",
            )
        assignment[pair] = slot
    if len(set(assignment.values())) != k:
        return BasisVerdict(
            True, None, "two candidate pairs claim the same canonical slot"
        )
    sigma = tuple(
        next(pair for pair, slot in assignment.items() if slot == i)
        for i in range(1, k + 1)
    )
    return BasisVerdict(True, sigma, "ok")


def matrix_to_dict(matrix: BasisMatrix) -> dict:
    """JSON-ready form: ``{"genus": k, "H": [[int, ...], ...], "det": int}``."""
    return {"genus": matrix.genus, "H": [list(row) for row in matrix.H], "det": matrix.det}


def matrix_from_dict(payload: dict) -> BasisMatrix:
    """Parse the matrix JSON schema, recomputing and checking the determinant."""
    try:
        genus = payload["genus"]
        rows = payload["H"]
    except (TypeError, KeyError) as exc:
        raise InputFormatError(f"matrix payload missing field: {exc}") from exc
    if not isinstance(genus, int) or genus < 1:
        raise InputFormatError(f"bad genus in matrix payload: {genus!r}")
    det = payload.get("det")
    return BasisMatrix(genus, tuple(tuple(row) for row in rows), det)
