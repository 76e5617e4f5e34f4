import _rectdiag as rd


def test_family_roundtrip_and_classes():
    fam = rd.Family([(0, -2, -1, 1, 3, 1)])
    assert len(fam) == 1
    assert "intersecting" in fam.classes()
    again = rd.Family.from_json(fam.to_json())
    assert again.rects() == fam.rects()


def test_generators_and_solvers():
    c5 = rd.gen_named("c5")
    value, chosen = rd.mis_exact(c5)
    assert value == 2
    size, points = rd.mhs_exact(c5)
    assert size == 3
    assert rd.is_hitting_set(c5, points)

    lower = rd.gen_random("lower", 8, 42)
    w_dp, chosen = rd.wmis_lower_intersecting(lower)
    w_bb, _ = rd.wmis_exact(lower)
    assert w_dp == w_bb
    rects = lower.rects()
    assert w_dp == sum(rects[i][5] for i in chosen)


def test_two_approx_and_hitting():
    fam = rd.gen_random("intersecting", 9, 7)
    approx, _ = rd.wmis_2approx(fam)
    exact, _ = rd.wmis_exact(fam)
    assert exact >= approx >= (exact + 1) // 2

    points, provenance = rd.approx_mhs(fam)
    assert rd.is_hitting_set(fam, points)
    assert provenance


def test_rk_gap():
    rk = rd.gen_rk(4)
    rep = rd.gap_report(rk)
    assert rep["mhs_lb"] >= 8
    assert rep["mis_ub"] <= 6


def test_orderings():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    order = rd.find_touching_order(5, edges)
    assert order is not None
    assert rd.check_crossing_condition(5, edges, order) is None
    fam = rd.order_to_representation(5, edges, order)
    assert sorted(e for e in fam.intersection_edges()) == sorted(
        tuple(sorted(e)) for e in _relabel(fam, edges)
    )


def _relabel(fam, edges):
    pos = {r[0]: i for i, r in enumerate(fam.rects())}
    return [(pos[a], pos[b]) for a, b in edges]


def test_reduce_sat():
    fam, target = rd.reduce_sat(["u", "v", "w"], [([1, -2, 3], "above")])
    assert len(fam) == 51
    assert target == 25
    value, _ = rd.mis_exact(fam)
    assert value == target


def test_gridify_and_svg():
    fam = rd.gen_random("intersecting", 6, 3)
    alpha, rects = rd.gridify(fam)
    assert all(1 <= r[1] and r[3] <= alpha and 1 <= r[2] and r[4] <= alpha for r in rects)
    svg = rd.render_svg(fam, staircases=True)
    assert svg.startswith("<svg") and "</svg>" in svg
