"""Reduced exhaustive search, checkpointing and classification."""

import itertools
import json

import pytest

from dtcodes import (
    GF,
    BudgetExceededError,
    CheckpointError,
    ToeplitzTriple,
    are_equivalent,
    classify,
    double_circulant_code,
    double_toeplitz_code,
    enumerate_triples,
    find_dt_optimal,
    find_family_optimal,
    minimum_weight,
    passes_reduction,
    search_dt,
    search_family,
    triple_of_circulant,
    vector_rank,
    verify_reduction_soundness,
)
from dtcodes.reference_data import CLASS_COUNTS, OPTIMAL_MIN_WEIGHT
from dtcodes.structured import CirculantSpec


def _naive_dt_scan(gf: GF, n: int):
    """All (triple, min weight) pairs, unfiltered, by direct enumeration."""
    return [(T, minimum_weight(double_toeplitz_code(T))) for T in enumerate_triples(gf, n // 2)]


def _key(T: ToeplitzTriple) -> tuple:
    return (T.t, T.a, T.b)


def test_vector_rank():
    assert vector_rank(()) == 0
    assert vector_rank((1, 0, 0)) == 1
    assert vector_rank((0, 0, 1)) == 4
    assert vector_rank((1, 1, 1)) == 7
    with pytest.raises(ValueError):
        vector_rank((0, 2))


def test_c2_filter_keeps_one_per_swap_pair():
    gf = GF(2)
    for T in enumerate_triples(gf, 3):
        swapped = ToeplitzTriple(gf, T.t, T.b, T.a)
        keep_t = passes_reduction(T, "C2")
        keep_s = passes_reduction(swapped, "C2")
        assert keep_t or keep_s
        # both survive exactly on the diagonal a = b of the swap
        assert (keep_t and keep_s) == (vector_rank(T.a) == vector_rank(T.b))
    with pytest.raises(ValueError):
        passes_reduction(ToeplitzTriple(GF(3), 0, (0,), (0,)), "C2")


@pytest.mark.parametrize("q", [3, 4])
def test_c3_filter_keeps_one_per_scalar_orbit(q):
    gf = GF(q)
    for T in enumerate_triples(gf, 2):
        orbit = []
        for lam in range(1, q):
            scaled = ToeplitzTriple(
                gf,
                gf.mul(lam, T.t),
                tuple(gf.mul(lam, x) for x in T.a),
                tuple(gf.mul(lam, x) for x in T.b),
            )
            orbit.append(scaled)
        survivors = sum(passes_reduction(S, "C3") for S in orbit)
        if any(x for x in (T.t, *T.a)):
            assert survivors == 1
        else:
            # (t, a) = 0 collapses the scalar action on the filter key
            assert survivors == q - 1
    with pytest.raises(ValueError):
        passes_reduction(ToeplitzTriple(GF(2), 0, (0,), (0,)), "C3")


def test_unknown_reduction_rejected():
    gf = GF(2)
    with pytest.raises(ValueError):
        passes_reduction(ToeplitzTriple(gf, 0, (), ()), "C5")
    with pytest.raises(ValueError):
        search_dt(gf, 4, reduction="C9")


@pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 4)])
def test_unfiltered_search_matches_naive_enumeration(q, n):
    gf = GF(q)
    naive = _naive_dt_scan(gf, n)
    d_opt = max(mw for _, mw in naive)
    expect = {_key(T) for T, mw in naive if mw == d_opt}
    got_d, records = search_dt(gf, n, reduction="none")
    assert got_d == d_opt
    assert {_key(T) for T, _ in records} == expect
    assert all(mw == d_opt for _, mw in records)


@pytest.mark.parametrize("mode,cmp", [("collect-at", int.__eq__), ("at-least", int.__ge__)])
def test_targeted_modes_match_naive_enumeration(mode, cmp):
    gf = GF(3)
    naive = _naive_dt_scan(gf, 4)
    for d in (1, 2, 3):
        _, records = search_dt(gf, 4, reduction="none", mode=mode, d=d)
        assert {_key(T) for T, _ in records} == {_key(T) for T, mw in naive if cmp(mw, d)}
        assert all(cmp(mw, d) for _, mw in records)
    with pytest.raises(ValueError):
        search_dt(gf, 4, mode="collect-at")
    with pytest.raises(ValueError):
        search_dt(gf, 4, mode="maximize")


def test_filtered_search_reaches_the_same_optimum():
    for q, n in ((2, 8), (3, 6), (4, 6)):
        gf = GF(q)
        d_plain, _ = search_dt(gf, n, reduction="none")
        d_filtered, records = search_dt(gf, n, reduction="auto")
        assert d_filtered == d_plain
        reduction = "C2" if q == 2 else "C3"
        assert all(passes_reduction(T, reduction) for T, _ in records)


def test_search_is_deterministic_across_workers_and_partitions():
    gf = GF(2)
    reference = search_dt(gf, 8, reduction="none")
    for partitions, workers in ((3, 1), (4, 2), (2, 4)):
        d, records = search_dt(gf, 8, reduction="none", partitions=partitions, workers=workers)
        assert d == reference[0]
        assert [(_key(T), mw) for T, mw in records] == [
            (_key(T), mw) for T, mw in reference[1]
        ]


def test_circulant_family_search():
    gf = GF(3)
    d_nc, specs = find_family_optimal(gf, 4, "NC")
    assert d_nc == 3
    assert all(s.mu == -1 for s in specs)
    naive = [
        (r, minimum_weight(double_toeplitz_code(triple_of_circulant(CirculantSpec(gf, r, -1)))))
        for r in itertools.product(range(3), repeat=2)
    ]
    assert {s.r for s in specs} == {r for r, mw in naive if mw == 3}
    d_dc, _ = find_family_optimal(gf, 4, "DC")
    assert d_dc < d_nc
    with pytest.raises(ValueError):
        search_family(gf, 4, "XX")


def test_search_argument_validation():
    gf = GF(2)
    with pytest.raises(ValueError):
        search_dt(gf, 5)
    with pytest.raises(ValueError):
        search_dt(gf, 6, reduction="C3")
    with pytest.raises(ValueError):
        search_dt(GF(3), 6, reduction="C2")


def test_triple_budget():
    gf = GF(2)
    with pytest.raises(BudgetExceededError):
        search_dt(gf, 12, triple_budget=100)


def test_checkpoint_round_trip(tmp_path):
    gf = GF(2)
    path = str(tmp_path / "run.json")
    reference = search_dt(gf, 8, reduction="C2", partitions=4)
    d, records = search_dt(gf, 8, reduction="C2", partitions=4, checkpoint_path=path)
    assert (d, [(_key(T), mw) for T, mw in records]) == (
        reference[0],
        [(_key(T), mw) for T, mw in reference[1]],
    )
    data = json.loads(open(path).read())
    assert data["version"] == 1
    assert set(data["phase1"]) == {"0", "1", "2", "3"}

    # drop some finished chunks to simulate an interrupted run
    del data["phase1"]["2"]
    del data["phase2"]["chunks"]["1"]
    del data["phase2"]["chunks"]["3"]
    open(path, "w").write(json.dumps(data))
    d2, records2 = search_dt(gf, 8, reduction="C2", partitions=4, checkpoint_path=path)
    assert d2 == d
    assert [(_key(T), mw) for T, mw in records2] == [(_key(T), mw) for T, mw in records]


def test_checkpoint_config_mismatch(tmp_path):
    gf = GF(2)
    path = str(tmp_path / "run.json")
    search_dt(gf, 6, reduction="C2", partitions=2, checkpoint_path=path)
    with pytest.raises(CheckpointError):
        search_dt(gf, 6, reduction="none", partitions=2, checkpoint_path=path)
    with pytest.raises(CheckpointError):
        search_dt(gf, 6, reduction="C2", partitions=3, checkpoint_path=path)


def test_checkpoint_version_guard(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"version": 99, "config": {}}))
    with pytest.raises(CheckpointError):
        search_dt(GF(2), 6, reduction="C2", checkpoint_path=str(path))


@pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 4)])
def test_reduction_soundness_small(q, n):
    assert verify_reduction_soundness(GF(q), n)


def test_classify_small_binary():
    report = classify(GF(2), 4)
    assert report.d_opt == OPTIMAL_MIN_WEIGHT[2][4]
    assert (report.n_dt, report.n_dc, report.n_nc) == CLASS_COUNTS[2][4]
    # members count the filtered optimal triples that fell in each class
    total_members = sum(r.members for r in report.records)
    _, optimal = find_dt_optimal(GF(2), 4)
    assert total_members == len(optimal)
    # a class is "DC" when some optimal double circulant code lies in it,
    # even if its lex-minimal representative is not itself circulant
    _, dc_specs = find_family_optimal(GF(2), 4, "DC")
    dc_codes = [double_circulant_code(s) for s in dc_specs]
    for rec in report.records:
        C = double_toeplitz_code(rec.representative)
        assert minimum_weight(C) == report.d_opt
        hit = any(are_equivalent(C, D) for D in dc_codes)
        assert hit == (rec.structure == "DC")


def test_classify_report_serialization():
    report = classify(GF(3), 4)
    blob = report.to_dict()
    assert blob["q"] == 3 and blob["n"] == 4
    assert blob["counts"] == {"dt_only": 0, "dc": 0, "nc": 1}
    rec = blob["classes"][0]
    assert rec["structure"] == "NC"
    assert set(rec) == {
        "q", "n", "d", "class_id", "representative_triple", "members", "structure",
    }


def test_classify_representatives_are_lex_minimal():
    report = classify(GF(2), 6)
    _, optimal = find_dt_optimal(GF(2), 6, reduction="none")
    best = min(T.lex_key() for T in optimal)
    assert min(r.representative.lex_key() for r in report.records) == best


def test_classify_semimonomial_diagnostic_merges_f4_classes():
    # x -> x^2 conjugation folds two of the thirteen monomial classes
    # of the optimal [8, 4] quaternary codes into their conjugates
    plain = classify(GF(4), 8)
    assert (plain.n_dt, plain.n_dc) == (7, 6)
    merged = classify(GF(4), 8, semimonomial=True)
    assert (merged.n_dt, merged.n_dc) == (5, 6)
