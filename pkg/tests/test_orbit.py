"""The infinite strip model, orbit quotients and component classification."""

import pytest

from quiverkit import (
    NonFreeActionError,
    SizeCapError,
    classify_components,
    gamma,
    iso_translation_quivers,
    orbit_quiver,
    shift,
    validate_translation_quiver,
    za_arrows_and_tau,
)


def window_orbit_count(k, s, r):
    """Brute-force orbit count: union-find over a finite window.

    Every orbit crosses the core strip and forms a single chain inside
    the window, so counting classes that meet the core is exact.
    """
    rule = za_arrows_and_tau(k)

    def act(v):
        for _ in range(r):
            v = rule.shift(v)
        for _ in range(s):
            v = rule.tau_inv(v)
        return v

    step = max(act((0, i))[0] for i in range(1, k + 1))
    core = 2 * step + 2
    width = core + 3 * step + 3

    verts = [(p, i) for p in range(-width, width + 1) for i in range(1, k + 1)]
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in verts:
        w = act(v)
        if w in parent:
            ra, rb = find(v), find(w)
            if ra != rb:
                parent[ra] = rb

    classes = {}
    for v in verts:
        classes.setdefault(find(v), []).append(v)
    return sum(
        1 for cls in classes.values() if any(0 <= p <= core for p, _ in cls)
    )


class TestStripRule:
    def test_arrows_of_a3(self):
        rule = za_arrows_and_tau(3)
        assert rule.arrows_from((0, 1)) == ((0, 2),)
        assert rule.arrows_from((0, 2)) == ((0, 3), (1, 1))
        assert rule.arrows_into((1, 1)) == ((0, 2),)

    def test_translation(self):
        rule = za_arrows_and_tau(3)
        assert rule.tau((5, 2)) == (4, 2)
        assert rule.tau_inv(rule.tau((5, 2))) == (5, 2)

    def test_window_satisfies_mesh_axiom(self):
        rule = za_arrows_and_tau(3)
        win = rule.window(-5, 5)
        res = validate_translation_quiver(win)
        assert res.ok
        assert not res.stable  # the leftmost slice has no translate

    def test_window_of_one_row_has_no_arrows(self):
        assert za_arrows_and_tau(1).window(0, 4).arrows == ()


class TestShift:
    def test_moves_to_next_triangle(self):
        assert shift(3, (0, 1)) == (1, 3)
        assert shift(3, shift(3, (0, 1))) == (4, 1)

    def test_single_row_shift_is_inverse_translation(self):
        rule = za_arrows_and_tau(1)
        for p in range(-3, 4):
            assert rule.shift((p, 1)) == rule.tau_inv((p, 1))

    def test_double_shift_is_inverse_translation_power(self):
        for k in range(1, 9):
            rule = za_arrows_and_tau(k)
            width = 3 * (k + 1)
            for p in range(-width, width):
                for i in range(1, k + 1):
                    v = (p, i)
                    w = rule.shift(rule.shift(v))
                    assert w == (p + k + 1, i)

    def test_shift_commutes_with_translation(self):
        rule = za_arrows_and_tau(4)
        for p in range(-6, 7):
            for i in range(1, 5):
                v = (p, i)
                assert rule.shift(rule.tau(v)) == rule.tau(rule.shift(v))

    def test_shift_preserves_arrows(self):
        for k in (2, 3, 5):
            rule = za_arrows_and_tau(k)
            for p in range(-5, 6):
                for i in range(1, k + 1):
                    v = (p, i)
                    for w in rule.arrows_from(v):
                        assert rule.shift(w) in rule.arrows_from(rule.shift(v))

    def test_shift_inverse(self):
        rule = za_arrows_and_tau(4)
        for p in range(-5, 6):
            for i in range(1, 5):
                assert rule.shift_inv(rule.shift((p, i))) == (p, i)


class TestOrbitQuiver:
    def test_six_vertex_quotient(self):
        assert orbit_quiver(3, 0, 1).vertex_count == 6

    def test_rank_one_cluster_case(self):
        oq = orbit_quiver(1, 1, 1)
        assert oq.vertex_count == 2
        assert oq.quotient.arrows == ()

    def test_almost_positive_root_counts(self):
        for k in range(1, 7):
            oq = orbit_quiver(k, 1, 1)
            assert oq.vertex_count == k * (k + 3) // 2
            assert oq.vertex_count == len(gamma(k + 1, 1).vertices)

    def test_quotients_are_stable_translation_quivers(self):
        for k, s, r in ((3, 0, 1), (2, 1, 2), (4, 2, 1), (1, 3, 0), (3, 1, 3)):
            res = validate_translation_quiver(orbit_quiver(k, s, r).quotient)
            assert res.ok and res.stable, (k, s, r)

    def test_counts_match_window_union_find_oracle(self):
        for k in range(1, 5):
            for s in range(0, 4):
                for r in range(0, 4):
                    if (s, r) == (0, 0):
                        continue
                    assert orbit_quiver(k, s, r).vertex_count == window_orbit_count(
                        k, s, r
                    ), (k, s, r)

    def test_pinning_against_diagonal_quivers(self):
        for k, m in ((3, 1), (2, 2), (1, 4), (5, 2), (2, 4), (11, 1)):
            oq = orbit_quiver(k, 1, m)
            assert iso_translation_quivers(oq.quotient, gamma(k + 1, m)) is not None

    def test_pure_translation_quotient_is_a_tube(self):
        oq = orbit_quiver(2, 3, 0)  # tau^-3 on two rows: directed 6-cycle
        assert oq.vertex_count == 6
        q = oq.quotient.quiver
        assert all(q.out_degree(v) == 1 and q.in_degree(v) == 1 for v in q.vertices)

    def test_identity_action_is_rejected(self):
        with pytest.raises(ValueError):
            orbit_quiver(3, 0, 0)
        with pytest.raises(ValueError):
            orbit_quiver(3, -1, 1)

    def test_construction_is_deterministic(self):
        a = orbit_quiver(3, 2, 1).quotient
        b = orbit_quiver(3, 2, 1).quotient
        assert a == b


class TestClassification:
    def test_octagon_square_case(self):
        report = classify_components(3, 2)
        assert report.principal_size == 8 and report.principal_is_gamma
        assert [c.size for c in report.others] == [6, 6]
        for comp in report.others:
            assert comp.match == (3, 0, 1)
        assert report.agrees == "n/a"

    def test_first_power_has_no_other_components(self):
        report = classify_components(4, 1)
        assert report.principal_size == 9 and report.principal_is_gamma
        assert report.others == ()

    def test_cube_of_the_octagon_diagonals(self):
        report = classify_components(2, 3)
        assert report.principal_size == 4 and report.principal_is_gamma
        assert [c.size for c in report.others] == [16]
        assert report.others[0].match == (2, 5, 2)
        # Odd-m letter formula predicts (r, s) = (1, 2) here; no quotient of
        # that shape has 16 vertices, so the report flags the deviation.
        assert report.predicted == (1, 2)
        assert report.agrees is False

    def test_every_odd_m_component_is_matched(self):
        for n, m in ((2, 3), (3, 3), (2, 5)):
            report = classify_components(n, m)
            assert report.principal_is_gamma
            assert all(c.match is not None for c in report.others), (n, m)

    def test_json_report_shape(self):
        d = classify_components(3, 2).to_json_dict()
        assert d["schema"] == "quiverkit/1"
        assert set(d) == {
            "schema", "n", "m", "principal", "others", "ducrest_odd_m", "even_m",
        }
        assert d["principal"] == {"size": 8, "iso_gamma": True}
        assert d["others"] == [
            {"size": 6, "match": {"k": 3, "s": 0, "r": 1}},
            {"size": 6, "match": {"k": 3, "s": 0, "r": 1}},
        ]
        assert d["ducrest_odd_m"]["agrees"] == "n/a"
        assert d["even_m"]["bound"] == {"lo": 1, "hi": 2}
        assert d["even_m"]["observed_r"] == [1]
        assert d["even_m"]["within_bound"] is True

    def test_odd_json_report_shape(self):
        d = classify_components(2, 3).to_json_dict()
        assert set(d) == {"schema", "n", "m", "principal", "others", "ducrest_odd_m"}
        assert d["ducrest_odd_m"]["predicted"] == {"r": 1, "s": 2}
        assert d["ducrest_odd_m"]["observed"] == [{"k": 2, "s": 5, "r": 2}]
        assert d["ducrest_odd_m"]["agrees"] is False

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            classify_components(4, 3, cap=20)
