import pytest
from hypothesis import given, settings, strategies as st

from conftest import V, neg
from ghckit import shadow
from ghckit.errors import InputError
from ghckit.shadow import RootSubalgebra, closed_subsets, fernando_fk, parabolic_pm, support_shape


def make(rs, roots):
    return RootSubalgebra(rs, frozenset(roots))


class TestRootSubalgebra:
    def test_closure_enforced(self, a2):
        with pytest.raises(InputError):
            make(a2, [V(1, -1, 0), V(0, 1, -1)])  # sum is a root but missing

    def test_non_root_rejected(self, a2):
        with pytest.raises(InputError):
            make(a2, [V(2, -2, 0)])


class TestShadow:
    def test_full_subalgebra_is_all_f(self, a2):
        sd = shadow.shadow(a2, make(a2, a2.all_roots))
        assert sd.F == frozenset(a2.all_roots)
        assert not sd.I and not sd.plus and not sd.minus

    def test_a1_borel(self, a1):
        alpha = a1.positive_roots[0]
        sd = shadow.shadow(a1, make(a1, [alpha]))
        assert sd.plus == {alpha}
        assert sd.minus == {neg(alpha)}
        assert not sd.I and not sd.F
        assert parabolic_pm(sd) == {alpha}
        assert fernando_fk(sd) == {alpha}

    def test_a1_cartan_is_cuspidal_shadow(self, a1):
        sd = shadow.shadow(a1, make(a1, []))
        assert sd.I == frozenset(a1.all_roots)
        assert fernando_fk(sd) == frozenset()

    def test_a2_borel(self, a2):
        borel = frozenset(a2.positive_roots)
        sd = shadow.shadow(a2, make(a2, borel))
        assert sd.plus == borel
        assert parabolic_pm(sd) == borel
        assert fernando_fk(sd) == borel

    def test_classification_depends_only_on_subalgebra(self, a2):
        # same input twice gives identical decompositions
        sub = make(a2, [V(1, -1, 0), neg(V(1, -1, 0)), V(0, 1, -1), V(1, 0, -1)])
        assert shadow.shadow(a2, sub) == shadow.shadow(a2, sub)


def _partition_invariants(rs, sd):
    parts = [sd.I, sd.F, sd.plus, sd.minus]
    assert frozenset().union(*parts) == frozenset(rs.all_roots)
    assert sum(len(p) for p in parts) == len(rs.all_roots)
    assert sd.I == {neg(a) for a in sd.I}
    assert sd.F == {neg(a) for a in sd.F}
    assert sd.minus == {neg(a) for a in sd.plus}


class TestShadowInvariantsExhaustive:
    @pytest.mark.parametrize("fixture", ["a2", "c2"])
    def test_partition_symmetry_and_parabolicity(self, fixture, request):
        rs = request.getfixturevalue(fixture)
        for roots in closed_subsets(rs):
            sd = shadow.shadow(rs, RootSubalgebra(rs, roots))
            _partition_invariants(rs, sd)
            pm = parabolic_pm(sd)
            assert shadow.is_closed(rs, pm)
            assert pm | {neg(a) for a in pm} == frozenset(rs.all_roots)

    @pytest.mark.parametrize("fixture", ["a2", "c2"])
    def test_parabolic_round_trip(self, fixture, request):
        rs = request.getfixturevalue(fixture)
        full = frozenset(rs.all_roots)
        for roots in closed_subsets(rs):
            if roots | {neg(a) for a in roots} == full:
                sub = RootSubalgebra(rs, roots)
                assert fernando_fk(shadow.shadow(rs, sub)) == roots


class TestSupportShape:
    def test_empty_gamma(self, a1):
        sd = shadow.shadow(a1, make(a1, a1.all_roots))
        base = (V(0, 0),)
        assert support_shape(sd, base, 5) == {V(0, 0)}

    def test_a1_cartan_radius_two(self, a1):
        sd = shadow.shadow(a1, make(a1, []))
        nu = V(3, 0)
        alpha = a1.positive_roots[0]
        got = support_shape(sd, (nu,), 2)
        want = {nu}
        for k in (1, 2):
            want.add(tuple(n + k * a for n, a in zip(nu, alpha)))
            want.add(tuple(n - k * a for n, a in zip(nu, alpha)))
        assert got == frozenset(want)

    def test_a1_borel_radius_one(self, a1):
        alpha = a1.positive_roots[0]
        sd = shadow.shadow(a1, make(a1, [alpha]))
        nu = V(1, 0)
        assert support_shape(sd, (nu,), 1) == {nu, tuple(n - a for n, a in zip(nu, alpha))}

    @given(radius=st.integers(min_value=0, max_value=3))
    @settings(deadline=None, max_examples=10)
    def test_monotone_in_radius(self, a2, radius):
        sd = shadow.shadow(a2, make(a2, [V(1, -1, 0)]))
        base = (V(0, 0, 0),)
        assert support_shape(sd, base, radius) <= support_shape(sd, base, radius + 1)


class TestClosedSubsetEnumeration:
    def test_counts(self, a1, a2, a3, c2):
        assert len(list(closed_subsets(a1))) == 4
        assert len(list(closed_subsets(a2))) == 29
        assert len(list(closed_subsets(a3))) == 355
        assert len(list(closed_subsets(c2))) == 55

    def test_all_closed_and_unique(self, a2):
        seen = list(closed_subsets(a2))
        assert len(seen) == len(set(seen))
        for s in seen:
            assert shadow.is_closed(a2, s)

    def test_json_round_trip(self, a2):
        sub = make(a2, [V(1, -1, 0), neg(V(1, -1, 0))])
        sd = shadow.shadow(a2, sub)
        doc = sd.to_json()
        back = {k: frozenset(a2.all_roots[i] for i in doc[k]) for k in ("I", "F", "plus", "minus")}
        assert back == {"I": sd.I, "F": sd.F, "plus": sd.plus, "minus": sd.minus}
