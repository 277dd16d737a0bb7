"""Automorphism groups and canonical forms of codes by partition backtracking.

The search operates on an invariant structure over the n coordinates: a
list of word systems (sets of codeword supports grouped by weight class,
possibly from several codes at once), an optional initial coloring, and an
optional matrix of pairwise colors. Refinement iterates a coloring to
stability: the signature of a coordinate records, per word system, how many
words of each cell-profile pass through it, plus its color multiset toward
every cell when pairwise colors are present. Signatures are sorted before
cells split, so the refinement commutes with relabeling.

The tree individualizes one point of the first smallest non-singleton cell
(ties to the smallest point) and descends first-path first. Sibling
branches are searched bottom-up for a single automorphism each, skipping
siblings already reachable by the group found so far; that is enough to
generate the full automorphism group. Leaves are always verified against
the actual codes (and any extra leaf predicate), so the invariants only
ever prune.

Z4-code automorphisms ride on the same engine: candidate coordinate
permutations are constrained by the residue and torsion codes (and, when
needed, by sign-invariant pair statistics of the minimum-Euclidean-weight
codewords), and a leaf passes if the linear sign-consistency system over
GF(2) is solvable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2, permgrp, z4
from .errors import BudgetExceeded
from .gf2 import BinaryCode
from .permgrp import PermGroup, Perm

DEFAULT_BUDGET = 10**8

# -- invariant structure -----------------------------------------------------


@dataclass
class Structure:
    """What the search must preserve: codes, word systems, colorings."""

    n: int
    codes: tuple[BinaryCode, ...]
    systems: list[list[int]]
    vertex_colors: list | None = None
    pair_colors: object = None  # n x n int matrix (numpy) of interned colors
    leaf_test: object = None  # callable(Perm) -> bool, or None

    def verify(self, p: Perm) -> bool:
        for c in self.codes:
            for b in c.basis:
                if not c.contains(permgrp.apply_word(p, b)):
                    return False
        if self.leaf_test is not None and not self.leaf_test(p):
            return False
        return True


def _small_side(code: BinaryCode) -> BinaryCode:
    """The code or its dual, whichever has the smaller dimension.

    Automorphism groups agree (duality commutes with coordinate
    permutations), and the small side is the one whose weight classes are
    enumerable.
    """
    if code.dim > code.length - code.dim:
        return gf2.dual(code)
    return code


def weight_class_systems(code: BinaryCode, *, max_words: int = 1600, max_classes: int = 2):
    """Selected small weight classes of a code, one system per class.

    Classes are taken in increasing weight, skipping 0 and the full-support
    word, until the word budget runs out. Selection depends only on the
    weight distribution, so equivalent codes select corresponding classes.
    """
    side = _small_side(code)
    if side.dim == 0:
        return []
    dist = gf2.weight_distribution(side)
    systems = []
    total = 0
    for m in sorted(dist):
        if m == 0 or m == side.length:
            continue
        count = dist[m]
        if systems and total + count > max_words:
            break
        systems.append(gf2.weight_words(side, m))
        total += count
        if len(systems) >= max_classes or total >= max_words:
            break
    return systems


def structure_for_codes(codes, *, leaf_test=None, vertex_colors=None, pair_colors=None) -> Structure:
    codes = tuple(codes)
    n = codes[0].length
    for c in codes:
        if c.length != n:
            raise ValueError("codes must share a length")
    systems = []
    seen = set()
    for c in codes:
        for words in weight_class_systems(c):
            key = frozenset(words)
            if key not in seen:
                seen.add(key)
                systems.append(words)
    if pair_colors is not None:
        pair_colors = _intern_colors(pair_colors)
    return Structure(
        n,
        tuple(_small_side(c) for c in codes),
        systems,
        vertex_colors=vertex_colors,
        pair_colors=pair_colors,
        leaf_test=leaf_test,
    )


def _intern_colors(pair_colors):
    """Replace arbitrary hashable colors by small ints (rank in sorted order,
    so the interning itself is relabeling-invariant)."""
    values = sorted({c for row in pair_colors for c in row})
    rank = {c: k for k, c in enumerate(values)}
    return np.array([[rank[c] for c in row] for row in pair_colors], dtype=np.int64)


# -- refinement ---------------------------------------------------------------


def _initial_partition(struct: Structure):
    if struct.vertex_colors is None:
        return [list(range(struct.n))]
    groups: dict = {}
    for i in range(struct.n):
        groups.setdefault(struct.vertex_colors[i], []).append(i)
    return [groups[c] for c in sorted(groups)]


def _refine(struct: Structure, cells):
    """Iterate signature splitting until the partition is equitable."""
    cells = [list(c) for c in cells]
    while True:
        if all(len(c) == 1 for c in cells):
            return cells
        masks = [sum(1 << i for i in cell) for cell in cells]
        sig = {i: [] for cell in cells for i in cell}
        for words in struct.systems:
            profiles: dict = {}
            incidence: dict = {}
            for w in words:
                prof = tuple(
                    (w & m).bit_count() if w & m else 0 for m in masks
                )
                pid = profiles.setdefault(prof, len(profiles))
                incidence[w] = pid
            # canonical renumbering of profiles
            order = {pid: rank for rank, (prof, pid) in enumerate(sorted(
                (prof, pid) for prof, pid in profiles.items()))}
            counts = {i: {} for cell in cells for i in cell}
            for w, pid in incidence.items():
                r = order[pid]
                ww = w
                while ww:
                    low = ww & -ww
                    i = low.bit_length() - 1
                    if i in counts:
                        d = counts[i]
                        d[r] = d.get(r, 0) + 1
                    ww ^= low
            for i in sig:
                sig[i].append(tuple(sorted(counts[i].items())))
        if struct.pair_colors is not None:
            pc = struct.pair_colors
            n = struct.n
            ncolors = int(pc.max()) + 1
            cellidx = np.empty(n, dtype=np.int64)
            for k, cell in enumerate(cells):
                cellidx[cell] = k
            key = pc * len(cells) + cellidx[None, :]
            width = ncolors * len(cells)
            for i in sig:
                hist = np.bincount(key[i], minlength=width)
                sig[i].append(hist.tobytes())
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict = {}
            for i in cell:
                groups.setdefault(tuple(sig[i]), []).append(i)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                new_cells.append(sorted(groups[key]))
        cells = new_cells
        if not changed:
            return cells


def _target_cell(cells):
    """Index of the first smallest non-singleton cell."""
    best = None
    for idx, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = idx
    return best


def _individualize(cells, idx, point):
    out = []
    for j, cell in enumerate(cells):
        if j == idx:
            out.append([point])
            out.append([x for x in cell if x != point])
        else:
            out.append(list(cell))
    return out


def _shape(cells):
    return tuple(len(c) for c in cells)


def _labeling(cells) -> Perm:
    """For a discrete partition, the map position -> point."""
    return tuple(cell[0] for cell in cells)


# -- automorphism group search -------------------------------------------------


class _Search:
    def __init__(self, struct: Structure, budget: int | None, progress=None):
        self.struct = struct
        self.budget = budget if budget is not None else DEFAULT_BUDGET
        self.progress = progress
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.progress and self.nodes % 100_000 == 0:
            self.progress(self.nodes)
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"search exceeded {self.budget} nodes", partial=self.partial_group()
            )

    def partial_group(self):
        gens = getattr(self, "found_gens", [])
        return PermGroup(self.struct.n, gens)

    def first_path(self, cells):
        """Descend, always individualizing the first point of the target cell."""
        path = []
        cells = _refine(self.struct, cells)
        while True:
            idx = _target_cell(cells)
            if idx is None:
                break
            point = cells[idx][0]
            path.append((cells, idx, point))
            cells = _refine(self.struct, _individualize(cells, idx, point))
        return path, cells

    def automorphism_group(self) -> tuple[PermGroup, tuple[int, ...]]:
        struct = self.struct
        path, leaf0 = self.first_path(_initial_partition(struct))
        # shape after individualize+refine at depth d = partition at depth d+1
        self.path_shapes = [
            _shape(path[d + 1][0]) if d + 1 < len(path) else _shape(leaf0)
            for d in range(len(path))
        ]
        lab0 = _labeling(leaf0)
        self.lab0 = lab0
        base = tuple(p for _, _, p in path)
        self.found_gens: list[Perm] = []
        group = permgrp.trivial_group(struct.n, base=base)
        for depth in range(len(path) - 1, -1, -1):
            cells, idx, beta = path[depth]
            # orbits of the stabilizer of the first `depth` base points in
            # the group found so far
            stab_gens = [g for g in group.strong_generators
                         if all(g[b] == b for b in base[:depth])]
            reached = _orbit_of(beta, stab_gens)
            for v in cells[idx][1:]:
                if v in reached:
                    continue
                g = self.find_automorphism(cells, idx, v, depth)
                if g is not None:
                    self.found_gens.append(g)
                    group = group.extended([g])
                    stab_gens = [h for h in group.strong_generators
                                 if all(h[b] == b for b in base[:depth])]
                reached = _orbit_of(beta, stab_gens)
                reached.add(v)
        return group, base

    def find_automorphism(self, cells, idx, v, depth):
        """One verified automorphism whose leaf sits under (cells, v), or None."""
        struct = self.struct

        def descend(cells, d):
            self.tick()
            cells = _refine(struct, cells)
            if d < len(self.path_shapes) and _shape(cells) != self.path_shapes[d]:
                return None
            tgt = _target_cell(cells)
            if tgt is None:
                if len(cells) != len(self.lab0):
                    return None
                lab = _labeling(cells)
                cand = [0] * struct.n
                for pos in range(struct.n):
                    cand[self.lab0[pos]] = lab[pos]
                cand = tuple(cand)
                return cand if struct.verify(cand) else None
            for w in cells[tgt]:
                got = descend(_individualize(cells, tgt, w), d + 1)
                if got is not None:
                    return got
            return None

        return descend(_individualize(cells, idx, v), depth)


def _orbit_of(point, gens):
    orbit = {point}
    queue = [point]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


def automorphism_group(struct: Structure, *, budget: int | None = None, progress=None) -> PermGroup:
    search = _Search(struct, budget, progress)
    group, _ = search.automorphism_group()
    return group


def aut_binary(code: BinaryCode, *, budget: int | None = None, progress=None) -> PermGroup:
    """Full automorphism group of a binary code in Sym_n."""
    return automorphism_group(structure_for_codes([code]), budget=budget, progress=progress)


# -- canonical labeling ---------------------------------------------------------


def _certificate(code: BinaryCode, labeling: Perm):
    """Canonical bytes of the code relabeled so position k holds labeling[k]."""
    inv = permgrp.inverse(labeling)
    moved = gf2.span(code.length, [permgrp.apply_word(inv, b) for b in code.basis])
    return moved.basis, inv, moved


def canonical_form(code: BinaryCode, *, budget: int | None = None, progress=None):
    """Canonical representative and a relabeling permutation p with p(code)
    equal to the representative. Equal canonical forms characterize
    equivalent codes."""
    struct = structure_for_codes([code])
    search = _Search(struct, budget, progress)
    group, _ = search.automorphism_group()
    best = None

    stab_cache: dict = {}

    def stab_orbits(fixed, cell):
        gens = stab_cache.get(fixed)
        if gens is None:
            gens = group.stabilizer_generators(list(fixed))
            stab_cache[fixed] = gens
        reps = []
        seen = set()
        for v in cell:
            if v in seen:
                continue
            reps.append(v)
            seen |= _orbit_of(v, gens)
        return reps

    def rec(cells, fixed):
        nonlocal best
        search.tick()
        cells = _refine(struct, cells)
        idx = _target_cell(cells)
        if idx is None:
            key, inv, moved = _certificate(code, _labeling(cells))
            if best is None or key < best[0]:
                best = (key, inv, moved)
            return
        for v in stab_orbits(fixed, cells[idx]):
            rec(_individualize(cells, idx, v), fixed + (v,))

    rec(_initial_partition(struct), ())
    _, perm, moved = best
    return moved, perm


def code_isomorphism(a: BinaryCode, b: BinaryCode, *, budget: int | None = None):
    """A permutation g with g(a) = b, or None.

    Cheap invariants (length, dimension, weight data of the selected
    classes) are compared first; otherwise canonical forms decide.
    """
    if a.length != b.length or a.dim != b.dim:
        return None
    if a == b:
        return permgrp.identity(a.length)
    profile_a = [(len(s), gf2.weight(s[0])) for s in weight_class_systems(a)]
    profile_b = [(len(s), gf2.weight(s[0])) for s in weight_class_systems(b)]
    if profile_a != profile_b:
        return None
    ca, pa = canonical_form(a, budget=budget)
    cb, pb = canonical_form(b, budget=budget)
    if ca != cb:
        return None
    g = permgrp.compose(pa, permgrp.inverse(pb))
    assert permgrp.apply_code(g, a) == b
    return g


# -- subcode stabilizer ----------------------------------------------------------


def subcode_stabilizer(group: PermGroup, sub: BinaryCode, *, budget: int | None = None,
                       progress=None) -> PermGroup:
    """Setwise stabilizer {p in group : p(sub) = sub} by BSGS backtracking."""
    n = sub.length
    if group.degree != n:
        raise ValueError("degree mismatch between group and subcode")
    systems = weight_class_systems(sub)
    vertex = [0] * n
    pair = [[0] * n for _ in range(n)]
    for k, words in enumerate(systems):
        for w in words:
            pts = []
            ww = w
            while ww:
                low = ww & -ww
                pts.append(low.bit_length() - 1)
                ww ^= low
            for i in pts:
                vertex[i] += 1 << (8 * k)
                for j in pts:
                    if i != j:
                        pair[i][j] += 1 << (8 * k)

    def test(p):
        return permgrp.apply_code(p, sub) == sub

    return permgrp.subgroup_search(
        group, test, vertex_inv=vertex, pair_inv=pair, budget=budget, progress=progress
    )


# -- Z4 automorphisms --------------------------------------------------------------


class _SignSystem:
    """Linear conditions over GF(2) for a sign vector compatible with a
    coordinate permutation of a Z4-code."""

    def __init__(self, code: z4.Z4Code):
        self.code = code
        self.n = code.length
        self.res = z4.residue(code)
        self.tor = z4.torsion(code)
        self.checks = gf2.dual(self.tor).basis
        # residue solver: RREF of the mod-2 generator images with bookkeeping
        # of which Z4 row combinations realize them
        pairs = []  # (binary word, z4 combo word)
        for row in code.basis:
            b = sum((d & 1) << i for i, d in enumerate(row))
            pairs.append((b, row))
        self.solver: list[tuple[int, tuple[int, ...]]] = []
        for b, row in pairs:
            for pb, prow in self.solver:
                if b >> ((pb & -pb).bit_length() - 1) & 1:
                    b ^= pb
                    row = z4.add_words(row, prow)
            if b:
                self.solver.append((b, row))
        self.solver.sort(key=lambda t: t[0] & -t[0])

    def lift(self, binword: int):
        """A codeword of the Z4-code reducing to binword mod 2, or None."""
        out = tuple([0] * self.n)
        for pb, prow in self.solver:
            if binword >> ((pb & -pb).bit_length() - 1) & 1:
                binword ^= pb
                out = z4.add_words(out, prow)
        if binword:
            return None
        return out

    def rows_for(self, perm: Perm | None):
        """GF(2) rows (mask, rhs) expressing sign compatibility with perm."""
        rows = []
        for v in self.code.basis:
            w = v if perm is None else tuple(
                v[permgrp.inverse(perm)[j]] for j in range(self.n)
            )
            odd = sum((d & 1) << i for i, d in enumerate(w))
            c = self.lift(odd)
            if c is None:
                return None
            m = 0
            for i in range(self.n):
                diff = (w[i] - c[i]) % 4
                if diff == 2:
                    m |= 1 << i
                elif diff != 0:
                    return None
            for h in self.checks:
                rows.append((h & odd, (h & m).bit_count() & 1))
        return rows

    @staticmethod
    def solve(rows):
        """(consistent, rank) of a GF(2) system given as (mask, rhs) rows."""
        basis: list[tuple[int, int]] = []
        for mask, rhs in rows:
            for bm, br in basis:
                if mask >> ((bm & -bm).bit_length() - 1) & 1:
                    mask ^= bm
                    rhs ^= br
            if mask:
                basis.append((mask, rhs))
            elif rhs:
                return False, len(basis)
        return True, len(basis)

    def compatible(self, perm: Perm | None) -> bool:
        rows = self.rows_for(perm)
        if rows is None:
            return False
        ok, _ = self.solve(rows)
        return ok

    def kernel_order(self) -> int:
        rows = self.rows_for(None)
        ok, rank = self.solve(rows)
        assert ok
        return 1 << (self.n - rank)


def _residues_mod_torsion(system: _SignSystem, words: list[int]):
    """For each residue word c, the even part m of a lift c~ + 2m, as a
    bitmask. Well-defined modulo the torsion code."""
    out = {}
    for c in words:
        w = system.lift(c)
        m = 0
        for i in range(system.n):
            d = (w[i] - ((c >> i) & 1)) % 4
            m |= (d >> 1) << i
        out[c] = m
    return out


class _WordGraph:
    """The sign-invariant pairing graph on a weight class of residue words.

    For disjoint residue words c, h the bit iota(c, h) = <h, m_c> is
    invariant under every coordinate sign change (the shift s & c of m_c is
    disjoint from h) and well-defined modulo the torsion code (h lies in its
    dual). Word pairs are colored by intersection size plus the two iota
    bits where defined; the automorphism image of the Z4-code acts on this
    colored graph, and coordinate permutations are recovered from word
    pencils at the leaves of the search.
    """

    def __init__(self, system: _SignSystem, words: list[int]):
        self.system = system
        self.words = words
        self.n = system.n
        mtab = _residues_mod_torsion(system, words)
        size = len(words)
        colors = [[(-1, 0, 0)] * size for _ in range(size)]
        for a, c in enumerate(words):
            mc = mtab[c]
            for b, h in enumerate(words):
                if a == b:
                    continue
                inter = (c & h).bit_count()
                if inter:
                    colors[a][b] = (inter, 2, 2)
                else:
                    colors[a][b] = (
                        0,
                        (h & mc).bit_count() & 1,
                        (c & mtab[h]).bit_count() & 1,
                    )
        self.pair_colors = colors
        # pencils: for each coordinate, the words through it
        self.pencils = [
            [a for a, c in enumerate(words) if c >> i & 1] for i in range(self.n)
        ]
        self.word_index = {c: a for a, c in enumerate(words)}

    def coordinate_perm(self, gamma) -> Perm | None:
        """The point permutation inducing the word permutation gamma, if any."""
        p = [None] * self.n
        seen = set()
        for i in range(self.n):
            mask = -1
            for a in self.pencils[i]:
                mask &= self.words[gamma[a]]
                if mask == 0:
                    return None
                if mask & (mask - 1) == 0:
                    break
            if mask <= 0 or mask & (mask - 1):
                return None
            j = mask.bit_length() - 1
            if j in seen:
                return None
            seen.add(j)
            p[i] = j
        q = tuple(p)
        # gamma must be exactly the action of q on the word list
        for a, c in enumerate(self.words):
            img = self.word_index.get(permgrp.apply_word(q, c))
            if img != gamma[a]:
                return None
        return q

    def search(self, budget, progress):
        found: dict = {}

        def leaf(gamma):
            q = self.coordinate_perm(gamma)
            if q is None:
                return False
            if not self.system.compatible(q):
                return False
            found[gamma] = q
            return True

        struct = Structure(
            len(self.words), (), [], pair_colors=_intern_colors(self.pair_colors),
            leaf_test=leaf,
        )
        try:
            automorphism_group(struct, budget=budget, progress=progress)
        except BudgetExceeded as err:
            raise BudgetExceeded(
                str(err), partial=PermGroup(self.n, list(found.values()))
            ) from None
        return PermGroup(self.n, list(found.values()))


def aut_z4(code: z4.Z4Code, *, budget: int | None = None, progress=None) -> tuple[int, PermGroup]:
    """Automorphism group of a Z4-code as (kernel order, permutation image).

    The kernel is the group of pure sign changes preserving the code; the
    image is its projection to Sym_n, so the total order is their product.

    Candidate permutations live inside Aut(C0) and Aut(C1); when every
    generator of that constraint group already admits compatible signs, the
    image is the whole constraint group and no further search runs.
    Otherwise the search moves to the smallest weight class of the residue
    code and works on the sign-invariant pairing graph of those words,
    recovering coordinate permutations at the leaves; statistics of
    codewords cannot separate coordinates here (for extremal codes they are
    forced by design properties of the minimum vectors), but the pairing
    graph sees the lift data itself. Degenerate classes fall back to
    subgroup backtracking in the constraint group with sign tests at the
    leaves.
    """
    system = _SignSystem(code)
    kernel = system.kernel_order()
    constraint = automorphism_group(
        structure_for_codes([system.tor, system.res]), budget=budget, progress=progress
    )
    if all(system.compatible(g) for g in constraint.strong_generators):
        return kernel, constraint
    classes = weight_class_systems(system.res)
    words = classes[0] if classes else []
    if code.length <= len(words) <= 1200 and _pencils_separate(code.length, words):
        image = _WordGraph(system, words).search(budget, progress)
        return kernel, image
    image = permgrp.subgroup_search(
        constraint, system.compatible, budget=budget, progress=progress
    )
    return kernel, image


def _pencils_separate(n: int, words: list[int]) -> bool:
    """Whether each coordinate is the exact intersection of the words through
    it; required for recovering coordinate permutations from word
    permutations."""
    for i in range(n):
        mask = -1
        for w in words:
            if w >> i & 1:
                mask &= w
        if mask != 1 << i:
            return False
    return True
