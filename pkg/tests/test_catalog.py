import pytest

from framestab import catalog, gf2, z4


def test_list_ids():
    ids = catalog.list_ids()
    assert len(ids) >= 13
    assert "z4-len8-4" in ids and "z4-leech-standard" in ids


def test_unknown_id():
    with pytest.raises(KeyError):
        catalog.get("z4-nonsense")


def test_len8_4_matrix_rows():
    entry = catalog.get("z4-len8-4")
    parsed = [tuple(int(ch) for ch in "".join(line.split()))
              for line in entry.matrix.strip().splitlines()]
    assert parsed == [
        (3, 1, 1, 1, 3, 1, 1, 1),
        (1, 1, 1, 1, 2, 0, 0, 0),
        (1, 3, 2, 0, 1, 1, 0, 0),
        (1, 0, 1, 0, 1, 0, 3, 2),
    ]


def test_leech_matrix_dimensions():
    entry = catalog.get("z4-leech-standard")
    rows = entry.matrix.strip().splitlines()
    assert len(rows) == 18
    assert all(len("".join(r.split())) == 24 for r in rows)


def test_checksums_hold():
    for eid in ("z4-len8-1", "z4-len8-2", "z4-len8-3", "z4-len8-4",
                "z4-pseudo-golay-1", "z4-pseudo-golay-2",
                "z4-leech-standard", "bin-moonshine-d"):
        catalog.get(eid)  # raises on checksum mismatch


def test_all_z4_entries_type_ii():
    for eid in catalog.list_ids():
        if not eid.startswith("z4-"):
            continue
        code = catalog.get(eid).code()
        assert z4.is_type_ii(code), eid


def test_leech_entry_invariants():
    code = catalog.get("z4-leech-standard").code()
    assert z4.residue(code).dim == 6
    assert gf2.min_weight(z4.torsion(code)) == 4


def test_binary_entries_match_families():
    assert catalog.get("bin-golay").code() == gf2.golay24()
    assert catalog.get("bin-hamming8").code() == gf2.hamming8()
    assert catalog.get("bin-rm-1-4").code() == gf2.reed_muller(1, 4)
    assert catalog.get("bin-rm-2-4").code() == gf2.reed_muller(2, 4)
    assert catalog.get("bin-even-10").code() == gf2.even_code(10)


def test_moonshine_d_entry():
    d = catalog.get("bin-moonshine-d").code()
    assert (d.length, d.dim) == (48, 7)


def test_expected_values_reproduced_cheap():
    for k in (1, 2, 3, 4):
        entry = catalog.get(f"z4-len8-{k}")
        code = entry.code()
        shape, _ = entry.expected["shape"]
        assert z4.group_shape(code) == shape
        mw, tag = entry.expected["min_euclidean_weight"]
        assert tag == "derived"
        assert z4.min_euclidean_weight(code) == mw
    g = catalog.get("bin-golay")
    n, k, d = g.expected["params"][0]
    code = g.code()
    assert (code.length, code.dim, gf2.min_weight(code)) == (n, k, d)
