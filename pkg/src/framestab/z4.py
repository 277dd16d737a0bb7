"""Linear codes over Z4: Howell canonical form, duality, weights, Type II.

Words over Z4 are digit tuples. The canonical basis is the Howell normal
form; since Z4 has zero divisors, plain row echelon form does not determine
the row span uniquely, but the Howell form does, so code equality is again
literal equality of bases. Rows with a unit pivot come with every multiple
of the pivot column realized; rows with pivot 2 get their double appended
during reduction so that trailing spans survive.

The Euclidean weight of a word uses representatives {0, +-1, 2}: digits 0,
1, 2, 3 contribute 0, 1, 4, 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .errors import EnumerationLimit
from .matrixio import parse_z4_matrix

_EUCLIDEAN = (0, 1, 4, 1)

# Default cap for full codeword enumeration.
ENUM_CAP = 1 << 30


def euclidean_weight(word) -> int:
    return sum(_EUCLIDEAN[d] for d in word)


def hamming_weight(word) -> int:
    return sum(1 for d in word if d)


def inner_product(x, y) -> int:
    return sum(a * b for a, b in zip(x, y)) % 4


def add_words(x, y):
    return tuple((a + b) % 4 for a, b in zip(x, y))


def scale_word(k: int, x):
    return tuple(k * a % 4 for a in x)


def _howell(rows, n):
    """Howell normal form; returns tuple of (pivot_col, pivot_type, row)."""
    work = [list(r) for r in rows if any(r)]
    placed = []
    for col in range(n):
        unit_idx = next((i for i, r in enumerate(work) if r[col] % 2 == 1), None)
        if unit_idx is not None:
            row = work.pop(unit_idx)
            if row[col] == 3:
                row = [3 * x % 4 for x in row]
            for r in work:
                k = r[col]
                if k:
                    for j in range(col, n):
                        r[j] = (r[j] - k * row[j]) % 4
            placed.append((col, 1, row))
        else:
            two_idx = next((i for i, r in enumerate(work) if r[col]), None)
            if two_idx is None:
                continue
            row = work.pop(two_idx)
            for r in work:
                if r[col]:
                    for j in range(col, n):
                        r[j] = (r[j] - row[j]) % 4
            # keep the span of trailing coordinates: 2*row starts later
            double = [2 * x % 4 for x in row]
            if any(double):
                work.append(double)
            placed.append((col, 2, row))
        work = [r for r in work if any(r)]
    # clear entries above each pivot (fully for unit pivots, mod 2 above 2-pivots)
    for i, (col, typ, row) in enumerate(placed):
        for j in range(i):
            above = placed[j][2]
            e = above[col]
            k = e if typ == 1 else e >> 1
            if k:
                for t in range(col, n):
                    above[t] = (above[t] - k * row[t]) % 4
    return tuple((col, typ, tuple(row)) for col, typ, row in placed)


@dataclass(frozen=True)
class Z4Code:
    """A linear code over Z4 in Howell canonical form."""

    length: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def pivots(self) -> tuple[tuple[int, int], ...]:
        """(column, pivot value in {1,2}) per basis row."""
        out = []
        for row in self.basis:
            col = next(i for i, d in enumerate(row) if d)
            out.append((col, 2 if row[col] == 2 else 1))
        return tuple(out)

    @property
    def k1(self) -> int:
        """Number of unit-pivot rows (Z4-free rank)."""
        return sum(1 for _, t in self.pivots if t == 1)

    @property
    def k2(self) -> int:
        """Number of 2-pivot rows."""
        return sum(1 for _, t in self.pivots if t == 2)

    def size(self) -> int:
        return 4**self.k1 * 2**self.k2

    def reduce(self, word):
        word = list(word)
        for (col, typ), row in zip(self.pivots, self.basis):
            e = word[col] % 4
            k = e if typ == 1 else (e >> 1 if e % 2 == 0 else 0)
            if k:
                for j in range(col, self.length):
                    word[j] = (word[j] - k * row[j]) % 4
        return tuple(d % 4 for d in word)

    def contains(self, word) -> bool:
        return not any(self.reduce(word))

    def __contains__(self, word) -> bool:
        return self.contains(word)

    def codewords(self, cap: int = ENUM_CAP):
        """Iterate all codewords as digit tuples (constant memory)."""
        if self.size() > cap:
            raise EnumerationLimit(f"|C| = {self.size()} above enumeration cap {cap}")
        rows = list(self.basis)
        radix = [2 if typ == 2 else 4 for _, typ in self.pivots]

        def rec(i, acc):
            if i == len(rows):
                yield acc
                return
            word = acc
            for k in range(radix[i]):
                yield from rec(i + 1, word)
                if k + 1 < radix[i]:
                    word = add_words(word, rows[i])

        return rec(0, tuple([0] * self.length))

    def __str__(self):
        rows = ",".join("".join(map(str, r)) for r in self.basis)
        return f"Z4[{self.length}]{self.shape()}<{rows}>"


def z4_span(length: int, generators) -> Z4Code:
    """Howell-canonical code spanned by the given Z4 words."""
    rows = []
    for g in generators:
        if isinstance(g, str):
            g = tuple(int(ch) for ch in g)
        g = tuple(int(d) % 4 for d in g)
        if len(g) != length:
            raise ValueError(f"generator has length {len(g)}, expected {length}")
        rows.append(g)
    placed = _howell(rows, length)
    return Z4Code(length, tuple(row for _, _, row in placed))


def from_text(text: str) -> Z4Code:
    n, rows = parse_z4_matrix(text)
    return z4_span(n, rows)


def zero_code(n: int) -> Z4Code:
    return Z4Code(n, ())


def z4_dual(c: Z4Code) -> Z4Code:
    """Annihilator of c under <x,y> = sum x_i y_i in Z4."""
    n = c.length
    k = len(c.basis)
    # rows (column_i of the generator matrix | e_i); Howell rows whose left
    # block vanishes generate exactly the kernel of x -> Gx.
    aug = []
    for i in range(n):
        left = tuple(row[i] for row in c.basis)
        right = tuple(1 if j == i else 0 for j in range(n))
        aug.append(left + right)
    placed = _howell(aug, k + n)
    gens = [row[k:] for _, _, row in placed if not any(row[:k])]
    return z4_span(n, gens)


def residue(c: Z4Code) -> gf2.BinaryCode:
    """The mod-2 image of c (written C1)."""
    return gf2.span(
        c.length,
        [sum((d & 1) << i for i, d in enumerate(row)) for row in c.basis],
    )


def torsion(c: Z4Code) -> gf2.BinaryCode:
    """The binary code C0 with 2*C0 = c intersect 2*Z4^n."""
    twos = z4_span(c.length, [tuple(2 if j == i else 0 for j in range(c.length)) for i in range(c.length)])
    even_part = z4_dual(_sum_codes(z4_dual(c), twos))
    return gf2.span(
        c.length,
        [sum((d >> 1) << i for i, d in enumerate(row)) for row in even_part.basis],
    )


def _sum_codes(a: Z4Code, b: Z4Code) -> Z4Code:
    return z4_span(a.length, list(a.basis) + list(b.basis))


def group_shape(c: Z4Code) -> str:
    """Abelian group shape 4^k1 * 2^(k0-k1) with k1 = dim C1, k0 = dim C0.

    Note this is basis-independent, unlike the pivot-type counts of the
    Howell form (a 2-pivot row may still have order 4, e.g. span{(2,1)}).
    """
    k1 = residue(c).dim
    k2 = torsion(c).dim - k1
    parts = []
    if k1:
        parts.append(f"4^{k1}" if k1 > 1 else "4")
    if k2:
        parts.append(f"2^{k2}" if k2 > 1 else "2")
    return "*".join(parts) if parts else "1"


def is_self_orthogonal(c: Z4Code) -> bool:
    rows = c.basis
    return all(
        inner_product(rows[i], rows[j]) == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_self_dual(c: Z4Code) -> bool:
    return c == z4_dual(c)


def is_type_ii(c: Z4Code) -> bool:
    """Self-dual with every Euclidean weight divisible by 8.

    For small codes the weight condition is checked on every codeword. Above
    2^20 codewords it is checked on the generators only, which suffices for a
    self-orthogonal code: wt(x+y) = wt(x) + wt(y) + 2<x,y> mod 8, and the
    pairing of any two codewords of a self-orthogonal code vanishes mod 4.
    """
    if not is_self_dual(c):
        return False
    if c.size() <= 1 << 20:
        return all(euclidean_weight(w) % 8 == 0 for w in c.codewords())
    return all(euclidean_weight(row) % 8 == 0 for row in c.basis)


def all_weights_divisible_by_8(c: Z4Code) -> bool:
    """Whether every Euclidean weight in c is divisible by 8."""
    if is_self_orthogonal(c):
        return all(euclidean_weight(row) % 8 == 0 for row in c.basis)
    if c.size() <= 1 << 20:
        return all(euclidean_weight(w) % 8 == 0 for w in c.codewords())
    raise EnumerationLimit("code too large for the weight-divisibility scan")


# ---------------------------------------------------------------------------
# Packed enumeration for Euclidean weights
# ---------------------------------------------------------------------------
# A word is packed as two bitplanes (lo, hi): digit d = lo_bit + 2*hi_bit.
# Addition mod 4 is then three XORs and one AND per word, and the Euclidean
# weight is popcount(lo) + 4*popcount(hi & ~lo).

def _pack(word):
    lo = hi = 0
    for i, d in enumerate(word):
        lo |= (d & 1) << i
        hi |= (d >> 1) << i
    return lo, hi


def _unpack(lo, hi, n):
    return tuple(((lo >> i) & 1) + 2 * ((hi >> i) & 1) for i in range(n))


def _packed_add(a, b):
    lo = a[0] ^ b[0]
    hi = a[1] ^ b[1] ^ (a[0] & b[0])
    return lo, hi


def _packed_weight(lo, hi):
    return lo.bit_count() + 4 * (hi & ~lo).bit_count()


@lru_cache(maxsize=8)
def _weight_scan(c: Z4Code, cap: int = ENUM_CAP):
    """Full enumeration pass: (min Euclidean weight, packed words at minimum).

    The word list is truncated at 1<<18 entries; the count of minimum-weight
    words is exact either way.
    """
    if c.size() > cap:
        raise EnumerationLimit(f"|C| = {c.size()} above enumeration cap {cap}")
    if c.size() == 1:
        raise ValueError("the zero code has no nonzero codeword")
    mult_table = []
    for (_, typ), row in zip(c.pivots, c.basis):
        p1 = _pack(row)
        p2 = _packed_add(p1, p1)
        if typ == 2:
            mult_table.append(((0, 0), p1))
        else:
            mult_table.append(((0, 0), p1, p2, _packed_add(p2, p1)))
    best = [1 << 62, 0, []]  # weight, count, sample words
    limit = 1 << 18
    last = len(mult_table) - 1

    def rec(i, lo, hi):
        if i == last:
            for mlo, mhi in mult_table[i]:
                wlo = lo ^ mlo
                whi = hi ^ mhi ^ (lo & mlo)
                if not (wlo | whi):
                    continue
                w = wlo.bit_count() + 4 * (whi & ~wlo).bit_count()
                if w < best[0]:
                    best[0] = w
                    best[1] = 1
                    best[2] = [(wlo, whi)]
                elif w == best[0]:
                    best[1] += 1
                    if best[1] <= limit:
                        best[2].append((wlo, whi))
        else:
            for mlo, mhi in mult_table[i]:
                rec(i + 1, lo ^ mlo, hi ^ mhi ^ (lo & mlo))

    if last < 0:
        raise ValueError("the zero code has no nonzero codeword")
    rec(0, 0, 0)
    return best[0], best[1], tuple(best[2])


def min_euclidean_weight(c: Z4Code, cap: int = ENUM_CAP) -> int:
    return _weight_scan(c, cap)[0]


def min_weight_words(c: Z4Code, cap: int = ENUM_CAP):
    """Packed (lo, hi) pairs of the minimum-Euclidean-weight codewords."""
    _, count, words = _weight_scan(c, cap)
    if count > len(words):
        raise EnumerationLimit("minimum-weight word list truncated")
    return words


def is_extremal(c: Z4Code, cap: int = ENUM_CAP) -> bool:
    """Type II meeting the bound 8*(floor(n/24) + 1) on the minimum weight."""
    if not is_type_ii(c):
        return False
    return min_euclidean_weight(c, cap) == 8 * (c.length // 24 + 1)


def random_self_orthogonal(n: int, rows: int, rng: random.Random) -> Z4Code:
    """Random self-orthogonal code built by greedy orthogonal extension."""
    gens: list[tuple[int, ...]] = []
    attempts = 0
    while len(gens) < rows and attempts < 200 * rows:
        attempts += 1
        cand = tuple(rng.randrange(4) for _ in range(n))
        if euclidean_weight(cand) % 4 != 0:
            continue
        if any(inner_product(cand, g) != 0 for g in gens):
            continue
        gens.append(cand)
    return z4_span(n, gens)
