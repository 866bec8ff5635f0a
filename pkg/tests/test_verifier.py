from scrollhankel.closed_graphs import complete, from_facets, line
from scrollhankel.polynomial import PrimeField
from scrollhankel import verifier
from scrollhankel.verifier import FAIL, FLAGGED, PASS


def statuses(rep):
    return {c.name: c.status for c in rep.checks}


def test_ideal_equality_checks_pass():
    rep = verifier.verify_theorem_1_1(line(3), from_facets(4, [(1, 3), (2, 4)]))
    assert set(statuses(rep).values()) == {PASS}


def test_gb_dimension_depth_checks():
    rep = verifier.verify_corollary(line(3), line(3))
    st = statuses(rep)
    assert st["cor.cohen_macaulay"] == PASS and st["cor.dimension"] == PASS
    big = verifier.verify_corollary(line(4), line(4))
    assert "cor.cohen_macaulay" not in statuses(big)


def test_example_clique_list_flagged():
    g1 = from_facets(5, [(1, 3), (2, 4), (3, 5)])
    g2 = from_facets(5, [(1, 3), (2, 5)])
    rep = verifier.verify_prop_2_1(g1, g2)
    by_name = {c.name: c for c in rep.checks}
    assert by_name["prop2.1.cliques_from_facet_pairs"].status == PASS
    note = by_name["remark.clique_list"]
    assert note.status == FLAGGED
    assert note.computed == [[1, 4], [2, 6], [3, 7], [4, 8]]
    non_max = [d["clique"] for d in by_name["prop2.1.non_maximal_pair_cliques"].computed]
    assert [3, 6] in non_max


def test_two_decompositions_of_line_clique():
    rep = verifier.verify_prop_2_1(line(3), line(3))
    dec = {tuple(d["clique"]): d["count"] for d in rep.checks[2].computed}
    assert dec[(2, 3)] == 2


def test_classify_complete_pair():
    cr = verifier.classify(complete(2), complete(3))
    assert cr.is_prime_computed == "assumed-cited"
    assert cr.linear_resolution_computed is True
    assert cr.report.ok


def test_classify_radical_and_non_radical():
    cr = verifier.classify(complete(2), line(3))
    assert cr.is_radical_computed is True and cr.is_prime_computed is False
    assert cr.details["non_prime_witness"] is not None
    cr = verifier.classify(complete(2), line(4))
    assert cr.is_radical_computed is False
    assert cr.details["non_radical_witness"] == "x2*x3 - x1*x4"
    assert cr.report.ok


def test_regularity_report_flags():
    st = statuses(verifier.verify_prop_2_4(line(3), line(3)))
    assert st["prop2.4.bound"] == PASS and st["prop2.4.line_extremal"] == PASS
    assert st["prop2.4.printed_constant"] == FLAGGED
    st = statuses(verifier.verify_prop_2_4(complete(2), complete(3)))
    assert st["prop2.4.printed_constant"] == PASS
    assert st["prop2.4.clique_equality"] == FLAGGED


def test_sweep_small_has_no_failures():
    res = verifier.sweep(3, 3, ["all"])
    assert res.aborted is None
    assert res.summary[FAIL] == 0
    assert len(res.reports) == 9
    assert res.summary[FLAGGED] == 9


def test_sweep_aborts_on_failure(monkeypatch):
    def broken(g1, g2, field=None):
        rep = verifier.Report(g1, g2)
        rep.add("x", 1, 2, "")
        return rep

    monkeypatch.setattr(verifier, "verify_theorem_1_1", broken)
    res = verifier.sweep(3, 3, ["thm1.1"])
    assert res.aborted is not None and res.reports == []


def test_prime_field_sweep_matches_rational():
    a = verifier.sweep(3, 3, ["thm1.1", "cor", "prop2.4"]).to_json(timings=False)
    b = verifier.sweep(3, 3, ["thm1.1", "cor", "prop2.4"], PrimeField(32003)).to_json(timings=False)
    assert a == b
