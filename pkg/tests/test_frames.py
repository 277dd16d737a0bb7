import random
from itertools import combinations
from math import factorial

import pytest

from framestab import catalog, frames, gf2, permgrp, z4
from framestab.frames import VariantError


def len8(k):
    return catalog.get(f"z4-len8-{k}").code()


def expected_case_codes():
    """The four displayed structure-code pairs of length 16."""
    e16 = gf2.even_code(16)
    rep16 = gf2.repetition_code(16)
    # case 2: two even blocks of length 8
    blocks2 = []
    for blk in (0, 8):
        for off in range(7):
            blocks2.append(0b11 << (blk + off))
    case2_c = gf2.span(16, blocks2)
    case2_d = gf2.span(16, ["1" * 8 + "0" * 8, "0" * 8 + "1" * 8])
    # case 3: four even blocks of length 4, plus one bit per block
    blocks3 = []
    for blk in range(0, 16, 4):
        for off in range(3):
            blocks3.append(0b11 << (blk + off))
    case3_c = gf2.span(16, blocks3 + [gf2.parse_word("1000100010001000")])
    case3_d = gf2.span(16, ["1" * 8 + "0" * 8, "0" * 8 + "1" * 8, "1111000011110000"])
    case4_c = gf2.span(16, list(gf2.d_map(gf2.full_code(8)).basis)
                       + list(gf2.e_map(gf2.hamming8()).basis))
    case4_d = gf2.d_map(gf2.hamming8())
    return {
        1: (e16, rep16),
        2: (case2_c, case2_d),
        3: (case3_c, case3_d),
        4: (case4_c, case4_d),
    }


def test_structure_codes_lattice_exact():
    for k, (want_c, want_d) in expected_case_codes().items():
        sc = frames.structure_codes_lattice(len8(k))
        assert sc.c_code == want_c, f"case {k} C"
        assert sc.d_code == want_d, f"case {k} D"


def test_structure_codes_zero_code():
    sc = frames.structure_codes_lattice(z4.zero_code(4))
    assert sc.c_code == gf2.d_map(gf2.full_code(4))
    assert sc.d_code == gf2.zero_code(8)
    assert not frames.holomorphic(sc)


def test_structure_codes_orbifold_exact():
    sc = frames.structure_codes_orbifold(len8(4))
    assert sc.c_code == gf2.reed_muller(2, 4)
    assert sc.d_code == gf2.reed_muller(1, 4)


def test_structure_codes_orbifold_requires_type_ii():
    with pytest.raises(VariantError):
        frames.structure_codes_orbifold(z4.z4_span(2, [(2, 0)]))


def test_structure_codes_lattice_requires_even_lattice():
    with pytest.raises(VariantError):
        frames.structure_codes_lattice(z4.z4_span(2, [(1, 0)]))  # not self-orthogonal
    with pytest.raises(VariantError):
        frames.structure_codes_lattice(z4.z4_span(2, [(2, 0)]))  # weight 4, not 8


def test_frame_report_without_aut_c():
    r = frames.frame_report(len8(1), "lattice", compute_aut_c=False)
    assert r.aut_c is None
    assert r.h_count_by_index is None
    assert r.h_count == 2027025
    assert r.stab_order == 2**15 * factorial(16)


def test_pseudo_golay_structure_codes():
    pg = catalog.get("z4-pseudo-golay-1").code()
    sc = frames.structure_codes_orbifold(pg)
    g24 = gf2.golay24()
    want_c = gf2.span(48, list(gf2.d_map(gf2.even_code(24)).basis)
                      + [gf2.e_word(b) for b in z4.residue(pg).basis])
    assert sc.c_code == want_c
    assert sc.d_code == gf2.span(
        48, [gf2.d_word(b) for b in z4.residue(pg).basis] + [gf2.e_word((1 << 24) - 1)]
    )


def test_moonshine_d_matches_catalog_matrix():
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    assert sc.d_code == catalog.get("bin-moonshine-d").code()
    assert frames.holomorphic(sc)


def test_holomorphic_iff_type_ii_cases():
    for k in (1, 2, 3, 4):
        assert frames.holomorphic(frames.structure_codes_lattice(len8(k)))
        assert frames.holomorphic(frames.structure_codes_orbifold(len8(k)))
    # self-orthogonal but not self-dual: dimensions fall short
    c = z4.z4_span(4, [(2, 2, 0, 0), (0, 0, 2, 2)])
    sc = frames.structure_codes_lattice(c)
    assert not frames.holomorphic(sc)
    assert sc.c_code.dim + sc.d_code.dim < sc.r


def test_dim_p_all_cases():
    expected = {1: 15, 2: 14, 3: 12, 4: 9}
    for k, want in expected.items():
        sc = frames.structure_codes_lattice(len8(k))
        assert frames.compute_p(sc).dim == want
    assert frames.compute_p(frames.structure_codes_orbifold(len8(4))).dim == 5
    pg = catalog.get("z4-pseudo-golay-1").code()
    sc = frames.structure_codes_orbifold(pg)
    p = frames.compute_p(sc)
    assert p.dim == 13
    assert p == sc.d_code
    lee = catalog.get("z4-leech-standard").code()
    assert frames.compute_p(frames.structure_codes_orbifold(lee)).dim == 27


def test_moonshine_p_is_reed_muller_triples():
    # P = {(x, y, z) : each in RM(2,4), x + y + z in RM(1,4)}, of dimension
    # 11 + 11 + 5 = 27
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    p = frames.compute_p(sc)
    rm2 = gf2.reed_muller(2, 4)
    rm1 = gf2.reed_muller(1, 4)
    gens = [a | (a << 32) for a in rm2.basis]
    gens += [(b << 16) | (b << 32) for b in rm2.basis]
    gens += [d for d in rm1.basis]
    triples = gf2.span(48, gens)
    assert triples.dim == 27
    assert p == triples


def test_lift_order_moonshine_p_members():
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    p = frames.compute_p(sc)
    d_words = list(sc.d_code.codewords())
    for xi in p.basis[:8]:
        got = frames.lift_order(sc, xi)
        assert all(sc.c_code.contains(a & xi) for a in d_words)
        want = 2 if all((a & xi).bit_count() % 4 == 0 for a in d_words) else 4
        assert got == want


def test_p_between_duals_on_catalog():
    # every xi in dual(C) satisfies the defining condition of P
    cases = [frames.structure_codes_lattice(len8(k)) for k in (1, 2, 3, 4)]
    cases += [frames.structure_codes_orbifold(len8(4))]
    for sc in cases:
        p = frames.compute_p(sc)
        for xi in gf2.dual(sc.c_code).basis:
            assert p.contains(xi)
        for xi in p.basis:
            assert sc.c_code.contains(xi)


def test_pointwise_orders():
    expected = {1: (1, 14), 2: (2, 12), 3: (3, 9), 4: (4, 5)}
    for k, want in expected.items():
        assert frames.pointwise_order(frames.structure_codes_lattice(len8(k))) == want
    assert frames.pointwise_order(frames.structure_codes_orbifold(len8(4))) == (5, 0)


def test_lift_order_zero_is_two():
    sc = frames.structure_codes_lattice(len8(1))
    assert frames.lift_order(sc, 0) == 2


def test_lift_order_not_liftable_case3():
    sc = frames.structure_codes_lattice(len8(3))
    xi = gf2.e_word(gf2.parse_word("10101010"))
    assert frames.lift_order(sc, xi) == "not_liftable"


def test_lift_order_against_brute_force_case1():
    rng = random.Random(5)
    sc = frames.structure_codes_lattice(len8(1))
    d_words = list(sc.d_code.codewords())
    for _ in range(40):
        xi = rng.randrange(1 << 16)
        got = frames.lift_order(sc, xi)
        if any(not sc.c_code.contains(a & xi) for a in d_words):
            want = "not_liftable"
        elif all((a & xi).bit_count() % 4 == 0 for a in d_words):
            want = 2
        else:
            want = 4
        assert got == want


def test_lift_order_moonshine_weight4_triples():
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    rm24 = gf2.reed_muller(2, 4)
    d_words = list(sc.d_code.codewords())

    def oracle(xi):
        if any(not sc.c_code.contains(a & xi) for a in d_words):
            return "not_liftable"
        if all((a & xi).bit_count() % 4 == 0 for a in d_words):
            return 2
        return 4

    for alpha in gf2.weight_words(rm24, 4)[:6]:
        xi = alpha | (alpha << 16) | (alpha << 32)
        assert frames.lift_order(sc, xi) == oracle(xi)
    # and genuinely liftable words: dual(C) = D lies inside P
    for xi in list(sc.d_code.codewords())[1:8]:
        assert frames.lift_order(sc, xi) in (2, 4)


def test_lifts_commute():
    sc = frames.structure_codes_lattice(len8(1))
    p = frames.compute_p(sc)
    some = [w for w in p.codewords()][:12]
    for xi in some:
        assert frames.lifts_commute(sc, xi, 0)
    # self-pairing: order-2 condition
    for xi in some:
        self_ok = frames.lifts_commute(sc, xi, xi)
        want = all((a & xi).bit_count() % 2 == 0 for a in sc.d_code.codewords())
        assert self_ok == want
    with pytest.raises(ValueError):
        frames.lifts_commute(sc, 1 << 3, 0)  # weight-1 word is not in P


def test_lifts_commute_moonshine_brute():
    rng = random.Random(8)
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    p = frames.compute_p(sc)
    picks = [_random_member(rng, p) for _ in range(6)]
    for xi1 in picks[:3]:
        for xi2 in picks[3:]:
            fast = frames.lifts_commute(sc, xi1, xi2)
            brute = frames.lifts_commute(sc, xi1, xi2, brute=True)
            assert fast == brute


def _random_member(rng, code):
    w = 0
    for b in code.basis:
        if rng.random() < 0.5:
            w ^= b
    return w


# -- subcode families ----------------------------------------------------------


def test_enumerate_h_lattice_counts():
    expected = {1: 2027025, 3: 81, 4: 1}
    for k, want in expected.items():
        sc = frames.structure_codes_lattice(len8(k))
        count, _ = frames.enumerate_h_lattice(sc)
        assert count == want


def test_enumerate_h_lattice_members_case3():
    sc = frames.structure_codes_lattice(len8(3))
    count, members = frames.enumerate_h_lattice(sc, members=True)
    assert count == 81 and len(members) == 81
    assert len({m.basis for m in members}) == 81
    for m in members[:10]:
        assert m.dim == 8
        pair_words = gf2.weight_words(m, 2)
        assert len(pair_words) == 8
        for b in m.basis:
            assert sc.c_code.contains(b)


def test_enumerate_h_lattice_index_formula_case1():
    from framestab import autsearch
    sc = frames.structure_codes_lattice(len8(1))
    count, _ = frames.enumerate_h_lattice(sc)
    aut_c = autsearch.aut_binary(sc.c_code).order()
    aut_c0 = autsearch.aut_binary(z4.torsion(len8(1))).order()
    assert count == aut_c // (2**8 * aut_c0) == 2027025


def test_enumerate_h_lattice_index_formula_random():
    # direct matching count equals |Aut(C)| / (2^n |Aut(C0)|) beyond the
    # catalog, on random codes whose lattices are even
    from framestab import autsearch
    rng = random.Random(123)
    checked = 0
    while checked < 6:
        c = z4.random_self_orthogonal(rng.randrange(4, 7), rng.randrange(1, 4), rng)
        if not z4.all_weights_divisible_by_8(c):
            continue
        n = c.length
        sc = frames.structure_codes_lattice(c)
        direct, _ = frames.enumerate_h_lattice(sc)
        aut_c = autsearch.aut_binary(sc.c_code).order()
        c0 = z4.torsion(c)
        aut_c0 = autsearch.aut_binary(c0).order() if c0.dim else factorial(n)
        assert aut_c % ((1 << n) * aut_c0) == 0
        assert direct == aut_c // ((1 << n) * aut_c0)
        checked += 1


def test_enumerate_h_orbifold_e8():
    sc = frames.structure_codes_orbifold(len8(4))
    c0 = z4.torsion(len8(4))
    count, members = frames.enumerate_h_orbifold(sc, c0, members=True)
    assert count == 15
    d_e8 = gf2.d_map(gf2.even_code(8))
    assert any(m == d_e8 for m in members)
    for m in members:
        assert m.dim == 7
        for b in m.basis:
            assert sc.c_code.contains(b)


def test_enumerate_h_orbifold_members_satisfy_chain_properties():
    sc = frames.structure_codes_orbifold(len8(4))
    c0 = z4.torsion(len8(4))
    _, members = frames.enumerate_h_orbifold(sc, c0, members=True)
    n = 8
    for m in members:
        w4 = gf2.weight_words(m, 4)
        assert gf2.span(m.length, w4) == m
        assert len(w4) == n * (n - 1) // 2
        for a in m.basis:
            for b in m.basis:
                assert (a & b).bit_count() % 2 == 0
        for a in w4:
            assert sum(1 for b in w4 if b != a and (a & b).bit_count() == 2) == 2 * n - 4


def test_enumerate_h_orbifold_w_choices_collapse():
    # all four w choices per chain position give the same subcode
    sc = frames.structure_codes_orbifold(len8(4))
    c0 = z4.torsion(len8(4))
    matchings = frames._compatible_matchings(c0)
    assert len(matchings) == 7
    n = 8
    for matching in matchings:
        reference = frames._family_two(n, matching)
        k = len(matching)
        for mask in range(4 ** (k - 1)):
            gens = [gf2.d_word(x) for x in matching]
            ok = True
            for j in range(k - 1):
                choice = (mask >> (2 * j)) & 3
                a = gf2.support(matching[j])[choice & 1] - 1
                b = gf2.support(matching[j + 1])[choice >> 1] - 1
                w = (1 << a) | (1 << b)
                gens.append(gf2.e_word(matching[j] ^ matching[j + 1]) ^ gf2.d_word(w))
            assert gf2.span(16, gens) == reference
        # and any ordering of the matching spans the same pair of subcodes
        shuffled = list(matching)[::-1]
        assert frames._family_one(n, tuple(shuffled)) == frames._family_one(n, matching)
        assert frames._family_two(n, tuple(shuffled)) == frames._family_two(n, matching)


def test_enumerate_h_orbifold_min_weight_guard():
    sc = frames.structure_codes_orbifold(len8(1))
    with pytest.raises(VariantError):
        frames.enumerate_h_orbifold(sc, z4.torsion(len8(1)))


def test_enumerate_h_orbifold_pseudo_golay_is_one():
    pg = catalog.get("z4-pseudo-golay-1").code()
    sc = frames.structure_codes_orbifold(pg)
    count, members = frames.enumerate_h_orbifold(sc, z4.torsion(pg), members=True)
    assert count == 1
    assert members[0] == gf2.d_map(gf2.even_code(24))


def test_enumerate_h_orbifold_moonshine():
    lee = catalog.get("z4-leech-standard").code()
    sc = frames.structure_codes_orbifold(lee)
    count, _ = frames.enumerate_h_orbifold(sc, z4.torsion(lee))
    assert count == 15


# -- frame reports ---------------------------------------------------------------


def test_frame_report_case1():
    r = frames.frame_report(len8(1), "lattice", code_id="z4-len8-1")
    assert r.stab_order == 2**15 * factorial(16)
    assert r.pointwise == (1, 14)
    assert r.k_order == factorial(16)
    assert r.index_aut_c_k == 1
    assert r.h_count == 2027025 and r.h_count_by_index == 2027025
    assert r.holomorphic


def test_frame_report_case4_lattice():
    r = frames.frame_report(len8(4), "lattice")
    assert r.stab_order == 2**9 * 2**8 * 1344
    assert r.h_count == 1
    assert r.aut_z4_bar == 1344
    assert r.aut_z4_total == 2 * 1344
    assert r.index_aut_c_k == 1


def test_frame_report_cases_2_and_3():
    # shapes 2^(2+12).(Sym8 wr 2) and 2^(3+9).(Sym4 wr Sym4)
    r2 = frames.frame_report(len8(2), "lattice")
    assert r2.pointwise == (2, 12)
    assert r2.aut_z4_bar == 1152
    assert r2.k_order == (factorial(8) ** 2) * 2
    assert r2.stab_order == 2**14 * (factorial(8) ** 2) * 2
    assert r2.index_aut_c_k == 1
    r3 = frames.frame_report(len8(3), "lattice")
    assert r3.pointwise == (3, 9)
    assert r3.aut_z4_bar == 384
    assert r3.h_count == 81 and r3.h_count_by_index == 81
    assert r3.k_order == (factorial(4) ** 4) * factorial(4)
    assert r3.stab_order == 2**12 * (factorial(4) ** 4) * factorial(4)
    assert r3.index_aut_c_k == 1


def test_frame_report_e8_orbifold():
    r = frames.frame_report(len8(4), "orbifold")
    assert r.pointwise == (5, 0)
    assert r.dim_p == 5
    assert r.h_count == 15
    assert r.stab_order == 2**5 * 322560
    assert r.index_aut_c_k == 1


def test_frame_report_moonshine():
    lee = catalog.get("z4-leech-standard").code()
    r = frames.frame_report(lee, "orbifold", code_id="z4-leech-standard")
    assert r.pointwise == (7, 20)
    assert r.dim_p == 27
    assert r.h_count == 15 and r.h_count_by_index == 15
    assert r.aut_z4_bar == 2**9 * 1008
    assert r.aut_c0 == 2**9 * 1008
    assert r.k_order == r.aut_c == 495452160
    assert r.stab_order == 2**27 * 2**12 * 120960
    assert r.index_aut_c_k == 1
    payload = r.to_json()
    assert payload["dims"] == {"C": 41, "D": 7, "P": 27}
    assert payload["stab_order"] == str(2**27 * 2**12 * 120960)


def test_frame_report_rejects_small_min_weight_orbifold():
    with pytest.raises(VariantError):
        frames.frame_report(len8(1), "orbifold")


def test_frame_report_pseudo_golay_1():
    pg = catalog.get("z4-pseudo-golay-1").code()
    r = frames.frame_report(pg, "orbifold", code_id="z4-pseudo-golay-1")
    assert r.pointwise == (13, 0)
    assert r.aut_z4_bar == 6072
    assert r.h_count == 1
    assert r.k_order == 2**12 * 6072
    assert r.stab_order == 2**13 * 2**12 * 6072
    assert r.index_aut_c_k == 244823040 // 6072
    assert r.aut_c is None  # length-48 dim-36 aut deliberately not computed


@pytest.mark.slow
def test_frame_report_pseudo_golay_2():
    pg = catalog.get("z4-pseudo-golay-2").code()
    r = frames.frame_report(pg, "orbifold")
    assert r.aut_z4_bar == 3
    assert r.stab_order == 2**13 * 2**12 * 3
    assert r.index_aut_c_k == 244823040 // 3
