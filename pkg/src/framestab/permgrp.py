"""Exact permutation groups: base and strong generating set, big-int orders.

Permutations are tuples of images on 0-indexed points; composition is left
to right, compose(p, q)[x] = q[p[x]]. All I/O (cycle strings, JSON image
lists) is 1-indexed to match the coordinate convention elsewhere.

The Schreier-Sims construction is deterministic and processes every
Schreier generator, so strong generation is verified rather than sampled;
orders are exact products of fundamental orbit lengths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(p[i] == i for i in range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_from_cycles(n: int, cycles) -> Perm:
    """Build a permutation from 1-indexed cycles."""
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def cycle_string(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "()"


def images_1indexed(p: Perm) -> list[int]:
    return [x + 1 for x in p]


def apply_word(p: Perm, word: int) -> int:
    """Permute a binary word: bit i moves to bit p[i]."""
    out = 0
    while word:
        low = word & -word
        out |= 1 << p[low.bit_length() - 1]
        word ^= low
    return out


def apply_code(p: Perm, code):
    from . import gf2

    return gf2.span(code.length, [apply_word(p, b) for b in code.basis])


@dataclass(frozen=True)
class SignedPerm:
    """A monomial transformation of Z4^n: permute coordinates, then flip signs.

    The image word satisfies (g.x)[perm[i]] = signs[i] * x[i] mod 4, with
    signs in {+1, -1}.
    """

    perm: Perm
    signs: tuple[int, ...]

    def apply(self, word):
        out = [0] * len(self.perm)
        for i, d in enumerate(word):
            out[self.perm[i]] = (self.signs[i] * d) % 4
        return tuple(out)


class PermGroup:
    """A permutation group with a verified base and strong generating set."""

    def __init__(self, degree: int, generators, base=()):
        self.degree = degree
        gens = [tuple(g) for g in generators if not is_identity(tuple(g))]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the right degree")
        self.generators = tuple(gens)
        self._base: list[int] = []
        self._level_gens: list[list[Perm]] = []
        self._transversals: list[dict[int, Perm]] = []
        self._build(list(base))

    # -- construction -----------------------------------------------------

    def _orbit_transversal(self, beta: int, gens) -> dict[int, Perm]:
        trans = {beta: identity(self.degree)}
        queue = [beta]
        while queue:
            pt = queue.pop()
            u = trans[pt]
            for g in gens:
                img = g[pt]
                if img not in trans:
                    trans[img] = compose(u, g)
                    queue.append(img)
        return trans

    def _greedy_base_point(self, gens) -> int:
        moved = set()
        for g in gens:
            moved.update(i for i in range(self.degree) if g[i] != i)
        best = None
        for pt in sorted(moved):
            size = len(self._orbit_transversal(pt, gens))
            if best is None or size > best[0]:
                best = (size, pt)
        return best[1]

    def _rebuild_level(self, l: int):
        gens = [g for g in self._strong if all(g[b] == b for b in self._base[:l])]
        self._level_gens[l] = gens
        self._transversals[l] = self._orbit_transversal(self._base[l], gens)

    def _build(self, base_hint: list[int]):
        self._strong: list[Perm] = list(self.generators)
        self._base = []
        self._level_gens = []
        self._transversals = []
        for b in base_hint:
            self._base.append(b)
            self._level_gens.append([])
            self._transversals.append({})
        # extend the hint with greedily chosen points until no generator
        # fixes the whole base
        def base_complete():
            return all(
                any(g[b] != b for b in self._base) for g in self._strong
            ) or not self._strong

        while not base_complete():
            fixing = [g for g in self._strong if all(g[b] == b for b in self._base)]
            self._base.append(self._greedy_base_point(fixing))
            self._level_gens.append([])
            self._transversals.append({})
        for l in range(len(self._base)):
            self._rebuild_level(l)
        # deterministic closure over Schreier generators
        l = 0
        while l < len(self._base):
            beta = self._base[l]
            trans = self._transversals[l]
            gens = self._level_gens[l]
            dirty = False
            for pt in list(trans):
                u = trans[pt]
                for s in gens:
                    target = trans[s[pt]]
                    sg = compose(compose(u, s), inverse(target))
                    if is_identity(sg):
                        continue
                    residue, lev = self._strip(sg)
                    if is_identity(residue):
                        continue
                    if lev == len(self._base):
                        self._base.append(
                            min(i for i in range(self.degree) if residue[i] != i)
                        )
                        self._level_gens.append([])
                        self._transversals.append({})
                    self._strong.append(residue)
                    for j in range(lev + 1):
                        self._rebuild_level(j)
                    dirty = True
                    break
                if dirty:
                    break
            if dirty:
                l = 0 if lev is None else min(l, lev)
                continue
            l += 1

    def _strip(self, g: Perm):
        for l in range(len(self._base)):
            x = g[self._base[l]]
            if x == self._base[l]:
                continue
            u = self._transversals[l].get(x)
            if u is None:
                return g, l
            g = compose(g, inverse(u))
        return g, len(self._base)

    # -- queries -----------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(self._base)

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        return tuple(self._strong)

    def order(self) -> int:
        out = 1
        for t in self._transversals:
            out *= len(t)
        return out

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            return False
        residue, _ = self._strip(tuple(p))
        return is_identity(residue)

    def __contains__(self, p) -> bool:
        return self.contains(tuple(p))

    def basic_orbit(self, l: int):
        return self._transversals[l].keys()

    def transversal(self, l: int) -> dict[int, Perm]:
        return self._transversals[l]

    def level_generators(self, l: int) -> list[Perm]:
        """Strong generators fixing base[:l] pointwise."""
        return [g for g in self._strong if all(g[b] == b for b in self._base[:l])]

    def extended(self, new_gens) -> "PermGroup":
        """Group generated by this group and new_gens, keeping the base prefix."""
        return PermGroup(
            self.degree, list(self._strong) + [tuple(g) for g in new_gens], base=self._base
        )

    def stabilizer_generators(self, points) -> list[Perm]:
        """Generators of the pointwise stabilizer of the given points."""
        chain = PermGroup(self.degree, self._strong, base=list(points))
        k = len(points)
        return [g for g in chain._strong if all(g[b] == b for b in points[:k])] or []

    def elements(self, cap: int = 1 << 20):
        """Iterate all elements (order capped); intended for cross-checks."""
        if self.order() > cap:
            raise ValueError(f"order {self.order()} above element-iteration cap")

        def rec(l, current):
            if l == len(self._base):
                yield current
                return
            for u in self._transversals[l].values():
                yield from rec(l + 1, compose(u, current))

        yield from rec(0, identity(self.degree))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def schreier_sims(generators, degree: int | None = None, base=()) -> PermGroup:
    """Deterministic BSGS construction from a generator list."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("need a degree for the trivial group")
        degree = len(gens[0])
    return PermGroup(degree, gens, base=base)


def trivial_group(degree: int, base=()) -> PermGroup:
    return PermGroup(degree, [], base=base)


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [perm_from_cycles(n, [[1, 2]]), perm_from_cycles(n, [list(range(1, n + 1))])]
    return PermGroup(n, gens)


def order(g: PermGroup) -> int:
    return g.order()


def index(g: PermGroup, h: PermGroup) -> int:
    """Index |g : h|; h must be a subgroup of g."""
    if h.degree != g.degree:
        raise ValueError("degree mismatch")
    for s in h.strong_generators:
        if not g.contains(s):
            raise ValueError("h is not a subgroup of g")
    og, oh = g.order(), h.order()
    if og % oh:
        raise ValueError("subgroup order does not divide group order")
    return og // oh


def wreath_2(pairs, top: PermGroup) -> PermGroup:
    """The stabilizer shape 2 wr G on a set of disjoint pairs (1-indexed).

    Generated by the per-pair swaps together with block permutations induced
    by the top group; order 2^n * |top|.
    """
    pairs = [tuple(sorted(p)) for p in pairs]
    n = len(pairs)
    points = [x for p in pairs for x in p]
    if len(set(points)) != 2 * n:
        raise ValueError("pairs overlap")
    if top.degree != n:
        raise ValueError(f"top group degree {top.degree} != number of pairs {n}")
    degree = max(points)
    if set(points) != set(range(1, degree + 1)):
        raise ValueError("pairs must partition {1,...,2n}")
    gens = []
    for a, b in pairs:
        sw = list(range(degree))
        sw[a - 1], sw[b - 1] = b - 1, a - 1
        gens.append(tuple(sw))
    for t in top.generators:
        img = list(range(degree))
        for i, (a, b) in enumerate(pairs):
            a2, b2 = pairs[t[i]]
            img[a - 1] = a2 - 1
            img[b - 1] = b2 - 1
        gens.append(tuple(img))
    return PermGroup(degree, gens)


def project(signed) -> PermGroup:
    """Image in Sym_n of a set of signed permutations (sign data dropped)."""
    signed = list(signed)
    if not signed:
        raise ValueError("need at least one signed permutation")
    return PermGroup(len(signed[0].perm), [s.perm for s in signed])


# ---------------------------------------------------------------------------
# Subgroup backtrack search
# ---------------------------------------------------------------------------

def subgroup_search(
    group: PermGroup,
    test,
    *,
    vertex_inv=None,
    pair_inv=None,
    budget: int | None = None,
    progress=None,
) -> PermGroup:
    """All elements of ``group`` satisfying ``test`` (must form a subgroup).

    Classic base-image backtracking, processed bottom-up along the stabilizer
    chain: at level l we look for one witness per new coset of the part of
    the subgroup already known, so the found group grows monotonically and
    prunes its own search. ``vertex_inv[x]`` and ``pair_inv[x][y]``, when
    given, are invariants every solution must preserve; they only prune.
    """
    base = group.base
    k = len(base)
    degree = group.degree
    found = trivial_group(degree, base=base)
    nodes = 0
    node_cap = budget if budget is not None else 10**8

    def tick():
        nonlocal nodes
        nodes += 1
        if progress and nodes % 200_000 == 0:
            progress(nodes)
        if nodes > node_cap:
            raise BudgetExceeded(
                f"subgroup search exceeded {node_cap} nodes", partial=found
            )

    def compatible(depth: int, images: list[int], y: int) -> bool:
        if vertex_inv is not None and vertex_inv[base[depth]] != vertex_inv[y]:
            return False
        if pair_inv is not None:
            for i in range(depth):
                if pair_inv[base[i]][base[depth]] != pair_inv[images[i]][y]:
                    return False
        return True

    def extend(depth: int, partial: Perm, images: list[int]):
        """Find one test-passing element with the given image prefix."""
        tick()
        if depth == k:
            return partial if test(partial) else None
        for x in sorted(group.basic_orbit(depth)):
            y = partial[x]
            if not compatible(depth, images, y):
                continue
            u = group.transversal(depth)[x]
            got = extend(depth + 1, compose(u, partial), images + [y])
            if got is not None:
                return got
        return None

    for l in range(k - 1, -1, -1):
        beta = base[l]
        for c in sorted(group.basic_orbit(l)):
            if c == beta:
                continue
            if not compatible(l, list(base[:l]), c):
                continue
            # already covered by the known subgroup?
            if l < len(found.base) and c in found.transversal(l):
                continue
            u = group.transversal(l)[c]
            got = extend(l + 1, u, list(base[:l]) + [c])
            if got is not None:
                found = found.extended([got])
    return found
