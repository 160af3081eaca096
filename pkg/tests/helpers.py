"""Shared test utilities: independent oracles, deterministic random
generators, and tiny exact-integer matrix helpers."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from curvecal.cobordism import CobordismChain, CriticalRecord
from curvecal.diagrams import (
    CrossingDiagram,
    all_bigons,
    build_diagram,
    remove_bigon,
)
from curvecal.intersections import BasisCandidate
from curvecal.words import (
    CurveWord,
    Letter,
    alpha_word,
    beta_word,
    concat,
    invert,
)

# ---------------------------------------------------------------------------
# words


def word_from_letters(genus, letters):
    """Build a word from (kind, index, sign) unit letters; reduction is eager."""
    return CurveWord(genus, tuple((Letter(k, i), e) for k, i, e in letters))


def random_word(rng: random.Random, genus: int, max_letters: int) -> CurveWord:
    n = rng.randint(0, max_letters)
    letters = [
        (rng.choice("ab"), rng.randint(1, genus), rng.choice((1, -1)))
        for _ in range(n)
    ]
    return word_from_letters(genus, letters)


def expand_letters(word: CurveWord):
    """Unit-letter expansion of a word: a list of (kind, index, sign)."""
    out = []
    for letter, exponent in word.syllables:
        sign = 1 if exponent > 0 else -1
        out.extend((letter.kind, letter.index, sign) for _ in range(abs(exponent)))
    return out


def abelian_oracle(word: CurveWord):
    """One-pass brute-force letter counter, independent of abelianize()."""
    m = [0] * word.genus
    n = [0] * word.genus
    for kind, index, sign in expand_letters(word):
        (m if kind == "a" else n)[index - 1] += sign
    return tuple(m), tuple(n)


def pairing_oracle(left: CurveWord, right: CurveWord) -> int:
    """Bilinear expansion of the pairing over single-letter pairs.

    Seeded by the canonical table: a_i pairs b_i to +1, b_i pairs a_i to
    -1, everything else to 0; signs of the unit letters multiply.
    """
    total = 0
    for k1, i1, s1 in expand_letters(left):
        for k2, i2, s2 in expand_letters(right):
            if i1 != i2:
                continue
            if k1 == "a" and k2 == "b":
                total += s1 * s2
            elif k1 == "b" and k2 == "a":
                total -= s1 * s2
    return total


# hypothesis strategies -----------------------------------------------------


def _letter_lists(genus, max_letters):
    letter = st.tuples(
        st.sampled_from("ab"), st.integers(1, genus), st.sampled_from((1, -1))
    )
    return st.lists(letter, max_size=max_letters)


@st.composite
def words_with_genus(draw, n=1, max_genus=3, max_letters=24):
    """Strategy producing (genus, word_1, ..., word_n) with a shared genus."""
    genus = draw(st.integers(1, max_genus))
    ws = tuple(
        word_from_letters(genus, draw(_letter_lists(genus, max_letters)))
        for _ in range(n)
    )
    return (genus, *ws)


# ---------------------------------------------------------------------------
# integer matrices


def matmul(a, b):
    n, inner, cols = len(a), len(b), len(b[0]) if b else 0
    assert all(len(row) == inner for row in a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(cols))
        for i in range(n)
    )


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def det_oracle(rows):
    """Leibniz-formula determinant, independent of Bareiss elimination."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        product = 1
        for i in range(n):
            product *= rows[i][perm[i]]
        total += (-1) ** inversions * product
    return total


def xgcd(a, b):
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


# ---------------------------------------------------------------------------
# symplectic candidates

_MOVES = ("theta_shear", "gamma_shear", "swap", "rotate", "cross", "conjugate")


def random_symplectic_candidate(
    rng: random.Random, genus: int, n_moves: int = 12
) -> BasisCandidate:
    """Apply random elementary symplectic moves to the canonical system.

    Every move preserves the pairing relations of a generator system, so
    the resulting matrix is a product of elementary unimodular matrices.
    """
    theta = [alpha_word(genus, i) for i in range(1, genus + 1)]
    gamma = [beta_word(genus, i) for i in range(1, genus + 1)]
    for _ in range(n_moves):
        move = rng.choice(_MOVES)
        i = rng.randrange(genus)
        if move == "theta_shear":
            factor = gamma[i] if rng.random() < 0.5 else invert(gamma[i])
            theta[i] = concat(theta[i], factor)
        elif move == "gamma_shear":
            factor = theta[i] if rng.random() < 0.5 else invert(theta[i])
            gamma[i] = concat(gamma[i], factor)
        elif move == "swap" and genus >= 2:
            j = rng.randrange(genus)
            theta[i], theta[j] = theta[j], theta[i]
            gamma[i], gamma[j] = gamma[j], gamma[i]
        elif move == "rotate":
            theta[i], gamma[i] = gamma[i], invert(theta[i])
        elif move == "cross" and genus >= 2:
            j = rng.choice([t for t in range(genus) if t != i])
            theta[i], theta[j] = (
                concat(theta[i], gamma[j]),
                concat(theta[j], gamma[i]),
            )
        elif move == "conjugate":
            conjugator = random_word(rng, genus, 4)
            target = theta if rng.random() < 0.5 else gamma
            target[i] = concat(concat(conjugator, target[i]), invert(conjugator))
    return BasisCandidate(genus, tuple(theta), tuple(gamma))


# ---------------------------------------------------------------------------
# crossing diagrams


def random_diagram(rng: random.Random, max_crossings: int = 20) -> CrossingDiagram:
    n = rng.randint(0, max_crossings)
    ids = [f"x{i}" for i in range(n)]
    m_order = ids[:]
    rng.shuffle(m_order)
    mprime_order = ids[:]
    rng.shuffle(mprime_order)
    signs = {i: rng.choice((1, -1)) for i in ids}
    return build_diagram(m_order, mprime_order, signs)


def all_small_diagrams(n: int):
    """Every diagram with n crossings, up to relabelling and rotation.

    The order along M is fixed to the identity and the order along M' to
    cyclic sequences starting at the first id; signs range over all
    assignments.
    """
    ids = tuple(f"c{i}" for i in range(n))
    if n == 0:
        yield build_diagram((), (), {})
        return
    for rest in itertools.permutations(ids[1:]):
        mprime = (ids[0],) + rest
        for signs in itertools.product((1, -1), repeat=n):
            yield build_diagram(ids, mprime, dict(zip(ids, signs)))


def exhaustive_final_counts(diagram: CrossingDiagram, memo=None) -> frozenset[int]:
    """Final crossing counts over every possible bigon-removal order."""
    if memo is None:
        memo = {}
    cached = memo.get(diagram)
    if cached is not None:
        return cached
    bigons = all_bigons(diagram)
    if not bigons:
        result = frozenset({diagram.count})
    else:
        result = frozenset().union(
            *(
                exhaustive_final_counts(remove_bigon(diagram, bigon), memo)
                for bigon in bigons
            )
        )
    memo[diagram] = result
    return result


# ---------------------------------------------------------------------------
# cobordism chains


def random_admissible_chain(rng: random.Random) -> CobordismChain:
    """A closed chain with planted unit-pairing 0/1 and 2/3 pairs.

    Type vector {1+a, a+k, b+k, 1+b}, so the alternating sum is zero; the
    extra 0- and 3-handles each carry one unit-pairing partner and the k
    core 1/2 pairs get arbitrary pairings.
    """
    a = rng.randint(1, 3)
    b = rng.randint(1, 3)
    k = rng.randint(0, 2)
    records = [CriticalRecord("m0", 0), CriticalRecord("m3", 3)]
    for j in range(a):
        records.append(CriticalRecord(f"z{j}", 0, {f"u{j}": rng.choice((1, -1))}))
        records.append(CriticalRecord(f"u{j}", 1))
    for j in range(b):
        records.append(CriticalRecord(f"v{j}", 2, {f"t{j}": rng.choice((1, -1))}))
        records.append(CriticalRecord(f"t{j}", 3))
    for j in range(k):
        records.append(
            CriticalRecord(f"p{j}", 1, {f"q{j}": rng.randint(-5, 5)})
        )
        records.append(CriticalRecord(f"q{j}", 2))
    records.sort(key=lambda record: (record.index, record.id))
    return CobordismChain(tuple(records))
