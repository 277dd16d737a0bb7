"""Structure codes and frame stabilizer orders for the two frame variants.

Given a Z4-code with torsion code C0 and residue code C1, the Virasoro
frame of the associated lattice VOA has structure codes

    D = d(C1),                 C = Span{ d(Z2^n), e(C0) },

and for the Z2-orbifold of the lattice VOA (C of Type II)

    D = Span{ d(C1), e(1^n) }, C = Span{ d(E_n), e(C0) },

where d doubles coordinates, e injects into even positions, and E_n is the
even-weight code. Everything downstream is exact linear algebra over GF(2)
plus permutation group orders:

  * P = { xi : alpha & xi in C for all alpha in D } controls the pointwise
    stabilizer, an extension of Z2^r / dual(D) by P / dual(C), so its order
    is 2^(a+b) with a = dim D and b = dim P - dim dual(C).
  * K, the stabilizer modulo its pointwise part, acts transitively on the
    family H of subcodes of C isomorphic to d(Z2^n) (lattice case) or
    d(E_n) (orbifold case); its order is the stabilizer of one member
    times |H|.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import autsearch, gf2, z4
from .errors import EnumerationLimit, FramestabError
from .gf2 import BinaryCode


class VariantError(FramestabError):
    """The requested frame variant is outside its hypotheses."""


@dataclass(frozen=True)
class StructureCodes:
    r: int
    c_code: BinaryCode
    d_code: BinaryCode
    variant: str  # "lattice" | "orbifold"

    def __post_init__(self):
        if self.variant not in ("lattice", "orbifold"):
            raise ValueError(f"unknown variant {self.variant!r}")
        dual_d = gf2.dual(self.d_code)
        for b in self.c_code.basis:
            if not dual_d.contains(b):
                raise ValueError("structure codes must satisfy C <= dual(D)")


def structure_codes_lattice(code: z4.Z4Code) -> StructureCodes:
    """Structure codes of the lattice VOA frame attached to a Z4-code."""
    if not z4.is_self_orthogonal(code) or not z4.all_weights_divisible_by_8(code):
        raise VariantError(
            "lattice variant needs an even Construction-A lattice "
            "(all Euclidean weights divisible by 8)"
        )
    n = code.length
    c0, c1 = z4.torsion(code), z4.residue(code)
    d_code = gf2.d_map(c1)
    c_code = gf2.span(
        2 * n, list(gf2.d_map(gf2.full_code(n)).basis) + list(gf2.e_map(c0).basis)
    )
    return StructureCodes(2 * n, c_code, d_code, "lattice")


def structure_codes_orbifold(code: z4.Z4Code) -> StructureCodes:
    """Structure codes of the Z2-orbifold frame; requires Type II."""
    if not z4.is_type_ii(code):
        raise VariantError("orbifold variant requires a Type II Z4-code")
    n = code.length
    c0, c1 = z4.torsion(code), z4.residue(code)
    d_code = gf2.span(
        2 * n, list(gf2.d_map(c1).basis) + [gf2.e_word((1 << n) - 1)]
    )
    c_code = gf2.span(
        2 * n, list(gf2.d_map(gf2.even_code(n)).basis) + list(gf2.e_map(c0).basis)
    )
    return StructureCodes(2 * n, c_code, d_code, "orbifold")


def structure_codes(code: z4.Z4Code, variant: str) -> StructureCodes:
    if variant == "lattice":
        return structure_codes_lattice(code)
    if variant == "orbifold":
        return structure_codes_orbifold(code)
    raise ValueError(f"unknown variant {variant!r}")


def holomorphic(sc: StructureCodes) -> bool:
    return sc.c_code == gf2.dual(sc.d_code)


def compute_p(sc: StructureCodes) -> BinaryCode:
    """P = { xi : alpha & xi in C for all alpha in D }.

    The coordinatewise product distributes over XOR in each argument, so a
    basis of D against a parity-check basis of C gives the full linear
    system; P is the dual of the span of the products h & alpha.
    """
    checks = gf2.dual(sc.c_code).basis
    rows = [h & alpha for h in checks for alpha in sc.d_code.basis]
    return gf2.dual(gf2.span(sc.r, rows))


def pointwise_order(sc: StructureCodes) -> tuple[int, int]:
    """Exponents (a, b) with pointwise stabilizer order 2^(a+b)."""
    a = sc.d_code.dim
    b = compute_p(sc).dim - (sc.r - sc.c_code.dim)
    return a, b


def lift_order(sc: StructureCodes, xi: int):
    """Order of a lift of sigma_xi: 'not_liftable', 2, or 4.

    Liftability (alpha & xi in C for all alpha in D) is linear in alpha, so
    the basis decides it. The order criterion wt(alpha & xi) mod 4 is a
    quadratic form on D; for small D it is evaluated on every element,
    otherwise on a basis plus all pairwise polarization terms.
    """
    if xi >> sc.r:
        raise ValueError("xi longer than the frame")
    for alpha in sc.d_code.basis:
        if not sc.c_code.contains(alpha & xi):
            return "not_liftable"
    if sc.d_code.dim <= 16:
        for alpha in sc.d_code.codewords():
            if (alpha & xi).bit_count() % 4:
                return 4
        return 2
    basis = sc.d_code.basis
    for a in basis:
        if (a & xi).bit_count() % 4:
            return 4
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if (basis[i] & basis[j] & xi).bit_count() % 2:
                return 4
    return 2


def lifts_commute(sc: StructureCodes, xi1: int, xi2: int, *, brute: bool = False) -> bool:
    """Whether lifts of sigma_xi1 and sigma_xi2 commute.

    The pairing <alpha & xi1, alpha & xi2> = |alpha & xi1 & xi2| mod 2 is
    linear in alpha, so checking a basis of D suffices; brute=True checks
    every element of D instead (cross-check mode).
    """
    p = compute_p(sc)
    if not (p.contains(xi1) and p.contains(xi2)):
        raise ValueError("xi1 and xi2 must lie in P")
    mask = xi1 & xi2
    alphas = sc.d_code.codewords() if brute else sc.d_code.basis
    return all((alpha & mask).bit_count() % 2 == 0 for alpha in alphas)


# ---------------------------------------------------------------------------
# The family H of distinguished subcodes
# ---------------------------------------------------------------------------


def _pair_words(c: BinaryCode) -> list[int]:
    """Weight-2 codewords, found without span enumeration."""
    out = []
    for i in range(c.length):
        for j in range(i + 1, c.length):
            w = (1 << i) | (1 << j)
            if c.contains(w):
                out.append(w)
    return out


def count_perfect_matchings(n_points: int, edges: list[int], cap: int = 1 << 22):
    """Number of perfect matchings of a graph on bitmask edges (memoized)."""
    full = (1 << n_points) - 1
    memo: dict[int, int] = {}

    def rec(remaining: int) -> int:
        if not remaining:
            return 1
        got = memo.get(remaining)
        if got is not None:
            return got
        if len(memo) > cap:
            raise EnumerationLimit("matching count cap exceeded")
        low = remaining & -remaining
        total = 0
        for e in edges:
            if e & low and not (e & ~remaining):
                total += rec(remaining & ~e)
        memo[remaining] = total
        return total

    return rec(full)


def list_perfect_matchings(n_points: int, edges: list[int], cap: int = 1 << 22):
    full = (1 << n_points) - 1
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, chosen):
        if not remaining:
            out.append(tuple(chosen))
            return
        if len(out) > cap:
            raise EnumerationLimit("matching list cap exceeded")
        low = remaining & -remaining
        for e in edges:
            if e & low and not (e & ~remaining):
                chosen.append(e)
                rec(remaining & ~e, chosen)
                chosen.pop()

    rec(full, [])
    return out


def enumerate_h_lattice(sc: StructureCodes, *, members: bool = False,
                        cap: int = 1 << 22):
    """Subcodes of C isomorphic to d(Z2^n): count, optional member list.

    Such a subcode is spanned by n disjoint weight-2 words covering all 2n
    coordinates, so members correspond to perfect matchings of the graph
    whose edges are the weight-2 codewords of C.
    """
    if sc.variant != "lattice":
        raise VariantError("enumerate_h_lattice needs the lattice variant")
    edges = _pair_words(sc.c_code)
    if members:
        matchings = list_perfect_matchings(sc.r, edges, cap)
        codes = [gf2.span(sc.r, m) for m in matchings]
        return len(codes), codes
    return count_perfect_matchings(sc.r, edges, cap), None


def _compatible_matchings(c0: BinaryCode, cap: int = 1 << 22):
    """Perfect matchings of the n coordinates with every pairwise sum of
    pairs a codeword of c0. Pairwise sums are sums of consecutive chain
    sums, so this is exactly the chain condition of the subcode families."""
    n = c0.length
    weight4 = set(gf2.weight_words(c0, 4))
    pairs = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, chosen):
        if not remaining:
            out.append(tuple(chosen))
            return
        if len(out) > cap:
            raise EnumerationLimit("matching cap exceeded")
        low = remaining & -remaining
        for e in pairs:
            if not (e & low) or e & ~remaining:
                continue
            if all((e | f) in weight4 for f in chosen):
                chosen.append(e)
                rec(remaining & ~e, chosen)
                chosen.pop()

    rec((1 << n) - 1, [])
    return out


def _family_one(n: int, matching) -> BinaryCode:
    gens = [gf2.d_word(x) for x in matching]
    gens += [gf2.e_word(matching[i] ^ matching[i + 1]) for i in range(len(matching) - 1)]
    return gf2.span(2 * n, gens)


def _pick_w(xa: int, xb: int) -> int:
    return (xa & -xa) | (xb & -xb)


def _family_two(n: int, matching) -> BinaryCode:
    """Second family: e(y_j) + d(w_j) with w_j meeting consecutive pairs once.

    All four choices of w_j differ by d(x_j) or d(x_(j+1)), which are already
    generators, so any choice spans the same subcode; the smallest points are
    used for determinism.
    """
    gens = [gf2.d_word(x) for x in matching]
    for i in range(len(matching) - 1):
        y = matching[i] ^ matching[i + 1]
        w = _pick_w(matching[i], matching[i + 1])
        gens.append(gf2.e_word(y) ^ gf2.d_word(w))
    return gf2.span(2 * n, gens)


def enumerate_h_orbifold(sc: StructureCodes, c0: BinaryCode, *,
                         members: bool = False, cap: int = 1 << 22):
    """Subcodes of C isomorphic to d(E_n): count, optional member list.

    With min weight of c0 above 4 the only member is d(E_n) itself. With
    min weight exactly 4, every other member arises from a matching of the
    n coordinates whose pairwise pair-sums lie in c0, in one of two span
    shapes per matching; duplicates are removed by canonical (RREF) basis.
    """
    if sc.variant != "orbifold":
        raise VariantError("enumerate_h_orbifold needs the orbifold variant")
    n = sc.r // 2
    mw = gf2.min_weight(c0)
    if mw < 4:
        raise VariantError(
            f"min weight of C0 is {mw}: the orbifold subcode family is only "
            "classified for minimum weight at least 4"
        )
    d_en = gf2.d_map(gf2.even_code(n))
    if mw > 4:
        return 1, ([d_en] if members else None)
    found: dict = {d_en.basis: d_en}
    for matching in _compatible_matchings(c0, cap):
        for e in (_family_one(n, matching), _family_two(n, matching)):
            for b in e.basis:
                assert sc.c_code.contains(b)
            found[e.basis] = e
    codes = list(found.values())
    return len(codes), (codes if members else None)


# ---------------------------------------------------------------------------
# Frame report
# ---------------------------------------------------------------------------


@dataclass
class FrameReport:
    code_id: str
    variant: str
    n: int
    r: int
    dim_c: int
    dim_d: int
    dim_p: int
    holomorphic: bool
    pointwise: tuple[int, int]
    aut_z4_total: int
    aut_z4_bar: int
    aut_c0: int
    h_count: int
    h_count_by_index: int | None
    k_order: int
    stab_order: int
    index_aut_c_k: int
    aut_c: int | None
    stab_factored: str
    annotation: str = ""

    def to_json(self) -> dict:
        return {
            "code_id": self.code_id,
            "variant": self.variant,
            "n": self.n,
            "r": self.r,
            "dims": {"C": self.dim_c, "D": self.dim_d, "P": self.dim_p},
            "holomorphic": self.holomorphic,
            "pointwise": {"a": self.pointwise[0], "b": self.pointwise[1]},
            "aut": {
                "z4_total": str(self.aut_z4_total),
                "z4_bar": str(self.aut_z4_bar),
                "c0": str(self.aut_c0),
            },
            "h_count": str(self.h_count),
            "k_order": str(self.k_order),
            "stab_order": str(self.stab_order),
            "index_autC_K": str(self.index_aut_c_k),
        }


def _aut_c_feasible(c_code: BinaryCode) -> bool:
    small = min(c_code.dim, c_code.length - c_code.dim)
    return c_code.length <= 16 or small <= 8


def frame_report(code: z4.Z4Code, variant: str, *, code_id: str = "",
                 enumerate_h: bool | None = None,
                 compute_aut_c: bool | None = None,
                 budget: int | None = None,
                 progress=None) -> FrameReport:
    """Assemble the full stabilizer report for one code and frame variant.

    K is the frame stabilizer modulo its pointwise part:
      lattice:  |K| = 2^n * |Aut(C)bar| * |H|
      orbifold: |K| = 2^(dim dual(C0)) * |Aut(C)bar| * |H|
    and |Stab| = 2^(a+b) * |K|. The index |Aut(C) : K| always equals
    |Aut(C0) : Aut(C)bar|; when Aut(C) itself is computed the direct
    quotient is required to agree.
    """
    sc = structure_codes(code, variant)
    n = code.length
    c0, c1 = z4.torsion(code), z4.residue(code)
    if variant == "orbifold" and gf2.min_weight(c0) < 4:
        raise VariantError(
            f"min weight of C0 is {gf2.min_weight(c0)}: outside the orbifold "
            "transitivity hypotheses"
        )
    a, b = pointwise_order(sc)
    p = compute_p(sc)
    kernel, image = autsearch.aut_z4(code, budget=budget, progress=progress)
    bar = image.order()
    aut_c0_group = autsearch.aut_binary(c0, budget=budget, progress=progress)
    aut_c0 = aut_c0_group.order()

    aut_c = None
    if compute_aut_c or (compute_aut_c is None and _aut_c_feasible(sc.c_code)):
        aut_c = autsearch.aut_binary(sc.c_code, budget=budget, progress=progress).order()

    if variant == "lattice":
        stab_exp = n
    else:
        stab_exp = gf2.dual(c0).dim

    # |H|: direct enumeration where feasible, index formula otherwise
    h_direct = None
    want_direct = enumerate_h if enumerate_h is not None else True
    if want_direct:
        try:
            if variant == "lattice":
                h_direct, _ = enumerate_h_lattice(sc)
            else:
                h_direct, _ = enumerate_h_orbifold(sc, c0)
        except EnumerationLimit:
            h_direct = None
    h_index = None
    if aut_c is not None:
        denom = (1 << stab_exp) * aut_c0
        if aut_c % denom:
            raise FramestabError("stabilizer order does not divide |Aut(C)|")
        h_index = aut_c // denom
    if h_direct is None and h_index is None:
        raise FramestabError(
            "|H| unavailable: direct enumeration hit its cap and Aut(C) was not computed"
        )
    if h_direct is not None and h_index is not None and h_direct != h_index:
        raise FramestabError(
            f"|H| mismatch: enumeration gives {h_direct}, index formula gives {h_index}"
        )
    h_count = h_direct if h_direct is not None else h_index

    k_order = (1 << stab_exp) * bar * h_count
    stab_order = (1 << (a + b)) * k_order
    if aut_c0 % bar:
        raise FramestabError("Aut(C)bar does not divide Aut(C0)")
    index_formula = aut_c0 // bar
    if aut_c is not None:
        if aut_c % k_order:
            raise FramestabError("K does not divide Aut(C)")
        if aut_c // k_order != index_formula:
            raise FramestabError(
                f"index mismatch: |Aut(C):K| = {aut_c // k_order} by division, "
                f"{index_formula} by the index identity"
            )
    factored = f"2^{a + b} * 2^{stab_exp} * {bar}"
    if h_count != 1:
        factored += f" * {h_count}"
    return FrameReport(
        code_id=code_id,
        variant=variant,
        n=n,
        r=sc.r,
        dim_c=sc.c_code.dim,
        dim_d=sc.d_code.dim,
        dim_p=p.dim,
        holomorphic=holomorphic(sc),
        pointwise=(a, b),
        aut_z4_total=kernel * bar,
        aut_z4_bar=bar,
        aut_c0=aut_c0,
        h_count=h_count,
        h_count_by_index=h_index,
        k_order=k_order,
        stab_order=stab_order,
        index_aut_c_k=index_formula,
        aut_c=aut_c,
        stab_factored=factored,
    )
