"""Exact linear algebra and combinatorics for binary linear codes.

Words are plain Python ints used as bit vectors. Coordinate i (1-indexed,
matching the convention that the coordinate set is {1, ..., n}) lives in bit
i-1, so the printed string '1100' is the word with coordinates 1 and 2 set.

Codes are stored in reduced row echelon form with strictly increasing pivot
columns, which makes code equality literal equality of basis tuples. That
canonical form is what lets subcode enumeration deduplicate by hashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import EnumerationLimit
from .matrixio import parse_binary_matrix

# Above this dimension, full span enumeration is refused and operations fall
# back to weight-limited searches (or raise EnumerationLimit).
SPAN_ENUM_CAP = 28
_COMB_ENUM_CAP = 1 << 26


def weight(word: int) -> int:
    """Hamming weight of a word."""
    return word.bit_count()


def parse_word(s: str) -> int:
    """Read a word from a 0/1 string, first character = coordinate 1."""
    w = 0
    for i, ch in enumerate(s):
        if ch == "1":
            w |= 1 << i
        elif ch != "0":
            raise ValueError(f"unexpected character {ch!r} in word")
    return w


def format_word(word: int, n: int) -> str:
    return "".join("1" if word >> i & 1 else "0" for i in range(n))


def support(word: int) -> tuple[int, ...]:
    """1-indexed coordinates of the set bits, ascending."""
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length())
        word ^= low
    return tuple(out)


def _rref(rows) -> tuple[int, ...]:
    basis: list[tuple[int, int]] = []  # (pivot, row), sorted by pivot
    for row in rows:
        for p, b in basis:
            if row >> p & 1:
                row ^= b
        if row:
            p = (row & -row).bit_length() - 1
            basis = [(q, b ^ row if b >> p & 1 else b) for q, b in basis]
            basis.append((p, row))
            basis.sort()
    return tuple(b for _, b in basis)


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code in canonical (RREF) form."""

    length: int
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def contains(self, word: int) -> bool:
        for b in self.basis:
            low = b & -b
            if word & low:
                word ^= b
        return word == 0

    def __contains__(self, word: int) -> bool:
        return self.contains(word)

    def codewords(self):
        """Iterate all codewords in Gray-code order (dim capped)."""
        if self.dim > SPAN_ENUM_CAP:
            raise EnumerationLimit(
                f"dim {self.dim} above span enumeration cap {SPAN_ENUM_CAP}"
            )
        w = 0
        yield 0
        for i in range(1, 1 << self.dim):
            w ^= self.basis[(i & -i).bit_length() - 1]
            yield w

    def __str__(self):
        rows = ",".join(format_word(b, self.length) for b in self.basis)
        return f"[{self.length},{self.dim}]<{rows}>"


def span(length: int, generators) -> BinaryCode:
    """Canonical code spanned by the given words (ints or 0/1 strings).

    Dependent or duplicate generators are fine; string generators must have
    exactly the stated length.
    """
    masks = []
    for g in generators:
        if isinstance(g, str):
            if len(g) != length:
                raise ValueError(f"generator {g!r} has length {len(g)}, expected {length}")
            g = parse_word(g)
        if g < 0 or g >> length:
            raise ValueError(f"generator 0b{g:b} does not fit in length {length}")
        masks.append(g)
    return BinaryCode(length, _rref(masks))


def from_text(text: str) -> BinaryCode:
    n, rows = parse_binary_matrix(text)
    return span(n, rows)


def zero_code(n: int) -> BinaryCode:
    return BinaryCode(n, ())


def dual(c: BinaryCode) -> BinaryCode:
    """Dual under the intersection-parity pairing <x,y> = |x & y| mod 2."""
    pivots = [(b & -b).bit_length() - 1 for b in c.basis]
    pivot_set = set(pivots)
    gens = []
    for f in range(c.length):
        if f in pivot_set:
            continue
        w = 1 << f
        for p, b in zip(pivots, c.basis):
            if b >> f & 1:
                w |= 1 << p
        gens.append(w)
    return span(c.length, gens)


def weight_words(c: BinaryCode, m: int, *, cap: int = _COMB_ENUM_CAP) -> list[int]:
    """All codewords of weight exactly m, sorted by support.

    Uses whichever of span enumeration and weight-m membership scanning is
    cheaper; raises EnumerationLimit if both exceed the cap.
    """
    if not 0 <= m <= c.length:
        raise ValueError(f"weight {m} out of range for length {c.length}")
    cost_span = 1 << c.dim if c.dim <= SPAN_ENUM_CAP else None
    cost_comb = comb(c.length, m)
    found = []
    if cost_span is not None and (cost_span <= cost_comb or cost_comb > cap):
        if cost_span > cap:
            raise EnumerationLimit(f"span of size 2^{c.dim} above cap")
        found = [w for w in c.codewords() if w.bit_count() == m]
    else:
        if cost_comb > cap:
            raise EnumerationLimit(f"C({c.length},{m}) candidates above cap")
        for coords in combinations(range(c.length), m):
            w = 0
            for i in coords:
                w |= 1 << i
            if c.contains(w):
                found.append(w)
    return sorted(found, key=support)


def min_weight(c: BinaryCode, *, cap: int = _COMB_ENUM_CAP) -> int:
    """Minimum nonzero codeword weight."""
    if c.dim == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if c.dim <= 20:
        return min(w.bit_count() for w in c.codewords() if w)
    budget = cap
    for m in range(1, c.length + 1):
        cost = comb(c.length, m)
        if cost > budget:
            raise EnumerationLimit(
                f"minimum-weight search for [{c.length},{c.dim}] exceeds cap at weight {m}"
            )
        budget -= cost
        if weight_words(c, m, cap=cap):
            return m
    raise AssertionError("unreachable: nonzero code has a nonzero word")


def weight_distribution(c: BinaryCode) -> dict[int, int]:
    """Weight enumerator as a dict weight -> count (span enumeration)."""
    dist: dict[int, int] = {}
    for w in c.codewords():
        k = w.bit_count()
        dist[k] = dist.get(k, 0) + 1
    return dist


# ---------------------------------------------------------------------------
# Doubling maps d, e : Z2^n -> Z2^(2n)
# ---------------------------------------------------------------------------

def d_word(word: int) -> int:
    """(c1,...,cn) -> (c1,c1,...,cn,cn)."""
    out = 0
    while word:
        low = word & -word
        i = low.bit_length() - 1
        out |= 0b11 << (2 * i)
        word ^= low
    return out


def e_word(word: int) -> int:
    """(c1,...,cn) -> (0,c1,0,c2,...,0,cn)."""
    out = 0
    while word:
        low = word & -word
        i = low.bit_length() - 1
        out |= 1 << (2 * i + 1)
        word ^= low
    return out


def d_map(c: BinaryCode) -> BinaryCode:
    return span(2 * c.length, [d_word(b) for b in c.basis])


def e_map(c: BinaryCode) -> BinaryCode:
    return span(2 * c.length, [e_word(b) for b in c.basis])


# ---------------------------------------------------------------------------
# Code families
# ---------------------------------------------------------------------------

def full_code(n: int) -> BinaryCode:
    return span(n, [1 << i for i in range(n)])


def even_code(n: int) -> BinaryCode:
    """All even-weight words of length n."""
    if n < 1:
        raise ValueError("length must be positive")
    return span(n, [0b11 << i for i in range(n - 1)])


def repetition_code(n: int) -> BinaryCode:
    return span(n, [(1 << n) - 1])


def reed_muller(r: int, m: int) -> BinaryCode:
    """RM(r, m) via evaluation vectors of monomials of degree <= r.

    Point j of F_2^m is the coordinate j+1; variable x_i evaluates to bit i
    of the point index.
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    n = 1 << m
    ones = (1 << n) - 1
    var = []
    for i in range(m):
        v = 0
        for j in range(n):
            if j >> i & 1:
                v |= 1 << j
        var.append(v)
    gens = []
    for deg in range(r + 1):
        for vs in combinations(range(m), deg):
            w = ones
            for i in vs:
                w &= var[i]
            gens.append(w)
    return span(n, gens)


def hamming8() -> BinaryCode:
    """The [8,4,4] extended Hamming code, realized as RM(1,3)."""
    return reed_muller(1, 3)


@lru_cache(maxsize=1)
def golay24() -> BinaryCode:
    """The [24,12,8] binary Golay code as the extended quadratic-residue code.

    Built from cyclic shifts of the quadratic-residue indicator of length 23
    plus an overall parity coordinate; the construction re-verifies the
    [24,12,8] self-dual parameters before returning.
    """
    p = 23
    residues = {pow(i, 2, p) for i in range(1, p)}
    base = sum(1 << r for r in residues)
    shifts = []
    for s in range(p):
        w = ((base << s) | (base >> (p - s))) & ((1 << p) - 1)
        shifts.append(w)
    for extra in ([], [(1 << p) - 1]):
        c23 = span(p, shifts + extra)
        ext = span(24, [b | ((b.bit_count() & 1) << p) for b in c23.basis])
        if ext.dim != 12:
            continue
        if ext != dual(ext):
            continue
        if min_weight(ext) != 8:
            continue
        return ext
    raise AssertionError("extended quadratic-residue construction failed self-check")


def family(name: str, *params: int) -> BinaryCode:
    """Dispatch for named code families used throughout the catalog."""
    name = name.lower()
    if name in ("even", "e"):
        (n,) = params
        return even_code(n)
    if name == "full":
        (n,) = params
        return full_code(n)
    if name in ("hamming8", "h8"):
        return hamming8()
    if name == "rm":
        r, m = params
        return reed_muller(r, m)
    if name == "golay":
        return golay24()
    raise ValueError(f"unknown code family {name!r}")


def is_equivalent(a: BinaryCode, b: BinaryCode):
    """Permutation carrying a onto b, or None. See autsearch for the search."""
    from . import autsearch

    return autsearch.code_isomorphism(a, b)
