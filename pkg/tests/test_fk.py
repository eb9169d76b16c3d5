import pytest

from conftest import V, neg
from ghckit import fk, shadow
from ghckit.errors import InputError, UnsupportedTypeError
from ghckit.shadow import RootSubalgebra, closed_subsets

A1 = V(1, -1, 0)
A2_ = V(0, 1, -1)
A12 = V(1, 0, -1)


def make(rs, roots):
    return RootSubalgebra(rs, frozenset(roots))


class TestLeviDecompose:
    def test_borel(self, a2):
        ld = fk.levi_decompose(make(a2, a2.positive_roots))
        assert not ld.k_roots
        assert ld.n_roots == frozenset(a2.positive_roots)

    def test_full(self, a2):
        ld = fk.levi_decompose(make(a2, a2.all_roots))
        assert ld.k_roots == frozenset(a2.all_roots)
        assert not ld.n_roots

    def test_mixed(self, a2):
        ld = fk.levi_decompose(make(a2, [A1, neg(A1), A2_, A12]))
        assert ld.k_roots == {A1, neg(A1)}
        assert ld.n_roots == {A2_, A12}

    @pytest.mark.parametrize("fixture", ["a2", "a3", "c2"])
    def test_invariants_exhaustive(self, fixture, request):
        rs = request.getfixturevalue(fixture)
        for roots in closed_subsets(rs):
            ld = fk.levi_decompose(RootSubalgebra(rs, roots))
            assert ld.k_roots == {neg(a) for a in ld.k_roots}
            assert not (ld.n_roots & {neg(a) for a in ld.n_roots})
            assert ld.k_roots | ld.n_roots == roots
            assert shadow.is_closed(rs, ld.k_roots)
            for a in ld.k_roots:
                for b in ld.n_roots:
                    s = tuple(x + y for x, y in zip(a, b))
                    if rs.is_root(s):
                        assert s in ld.n_roots


class TestSingularWeights:
    def test_no_k_means_all_singular(self, a2):
        weights = frozenset([A1, A12])
        sw = fk.singular_weights(a2, frozenset(), weights)
        assert sw.singular_weights == weights

    def test_nilradical_example(self, a2):
        sw = fk.singular_weights(a2, frozenset([A1, neg(A1)]), frozenset([A2_, A12]))
        assert sw.singular_weights == {A12}

    def test_g_mod_l_example(self, a2):
        sw = fk.singular_weights(a2, frozenset([A1, neg(A1)]), frozenset([neg(A2_), neg(A12)]))
        assert sw.singular_weights == {neg(A2_)}

    def test_asymmetric_k_rejected(self, a2):
        with pytest.raises(InputError):
            fk.singular_weights(a2, frozenset([A1]), frozenset())

    def test_all_positive_k_roots_equivalent(self, a2, a3, c2):
        # testing against every positive root of k instead of just the simple
        # ones must not change the verdict
        for rs in (a2, a3, c2):
            pos = set(rs.positive_roots)
            for roots in closed_subsets(rs):
                ld = fk.levi_decompose(RootSubalgebra(rs, roots))
                k = ld.k_roots
                for module in (frozenset(rs.all_roots) - roots, ld.n_roots):
                    sw = fk.singular_weights(rs, k, module)
                    kpos = [a for a in k if a in pos]
                    alt = frozenset(
                        w
                        for w in module
                        if all(tuple(x + y for x, y in zip(w, b)) not in module for b in kpos)
                    )
                    assert sw.singular_weights == alt


class TestTheorem8:
    def test_cartan_is_finite_type(self, a2):
        assert fk.theorem8_finite_type(a2, make(a2, [])).finite_type

    def test_single_positive_root_fails(self, a2):
        v = fk.theorem8_finite_type(a2, make(a2, [A1]))
        assert not v.finite_type
        # witness sits on the alpha_1 ray
        assert v.witness is not None
        p = v.witness.point
        assert p[0] == -p[1] and p[2] == 0 and p[0] > 0
        assert v.witness.verify(sorted(v.singular_g_mod_l.singular_weights), sorted(v.singular_n.singular_weights))

    def test_borel_is_finite_type(self, a2):
        assert fk.theorem8_finite_type(a2, make(a2, a2.positive_roots)).finite_type

    def test_non_type_a_rejected(self, c2):
        with pytest.raises(UnsupportedTypeError):
            fk.theorem8_finite_type(c2, make(c2, []))

    def test_reductive_always_finite_type(self, a2, a3):
        for rs in (a2, a3):
            for roots in closed_subsets(rs):
                if roots == {neg(a) for a in roots}:
                    assert fk.theorem8_finite_type(rs, RootSubalgebra(rs, roots)).finite_type


class TestTheorem6:
    def test_cartan(self, a2):
        assert fk.theorem6_solvable_finite_type(a2, make(a2, []))

    def test_single_root_not_nilradical(self, a2):
        assert not fk.theorem6_solvable_finite_type(a2, make(a2, [A1]))

    def test_siegel_parabolic_nilradical(self, c2):
        sub = make(c2, [V(2, 0), V(0, 2), V(1, 1)])
        assert fk.theorem6_solvable_finite_type(c2, sub)

    def test_non_solvable_rejected(self, a2):
        with pytest.raises(InputError):
            fk.theorem6_solvable_finite_type(a2, make(a2, [A1, neg(A1)]))

    def test_agrees_with_theorem8(self, a2, a3):
        for rs in (a2, a3):
            for roots in closed_subsets(rs):
                sub = RootSubalgebra(rs, roots)
                if not fk.levi_decompose(sub).k_roots:
                    assert (
                        fk.theorem6_solvable_finite_type(rs, sub)
                        == fk.theorem8_finite_type(rs, sub).finite_type
                    )


class TestRecognizeType:
    def test_empty(self, a2):
        assert fk.recognize_type(a2, frozenset()) == []

    def test_full_systems(self, a2, a3, c2):
        assert fk.recognize_type(a2, frozenset(a2.all_roots)) == [("A", 2)]
        assert fk.recognize_type(a3, frozenset(a3.all_roots)) == [("A", 3)]
        assert fk.recognize_type(c2, frozenset(c2.all_roots)) == [("C", 2)]

    def test_c2_long_roots(self, c2):
        sub = frozenset([V(2, 0), V(0, 2), neg(V(2, 0)), neg(V(0, 2))])
        assert fk.recognize_type(c2, sub) == [("A", 1), ("A", 1)]

    def test_b2_normalizes_to_c2(self):
        from ghckit import rootsys

        b2 = rootsys.build("B", 2)
        assert fk.recognize_type(b2, frozenset(b2.all_roots)) == [("C", 2)]

    def test_levi_of_a3(self, a3):
        e = [V(1, -1, 0, 0), V(0, 0, 1, -1)]
        sub = frozenset(e) | frozenset(neg(a) for a in e)
        assert fk.recognize_type(a3, sub) == [("A", 1), ("A", 1)]


class TestIsPrimal:
    def test_full_cartan_always_primal(self, a2, a3, c2):
        for rs in (a2, a3, c2):
            toral = list(rs.simple_roots)
            for roots in closed_subsets(rs):
                if roots == {neg(a) for a in roots}:
                    assert fk.is_primal(rs, roots, toral)

    def test_small_torus_not_primal(self, a2):
        kr = frozenset([A1, neg(A1)])
        assert not fk.is_primal(a2, kr, [a2.coroot(A1)])

    def test_full_torus_primal(self, a2):
        kr = frozenset([A1, neg(A1)])
        assert fk.is_primal(a2, kr, list(a2.simple_roots))

    def test_missing_coroot_rejected(self, a2):
        with pytest.raises(InputError):
            fk.is_primal(a2, frozenset([A1, neg(A1)]), [a2.coroot(A2_)])


class TestProp3:
    @pytest.mark.parametrize(
        "series,rank,covered",
        [("A", 5, True), ("B", 3, False), ("B", 2, True), ("F", 4, False),
         ("C", 4, True), ("D", 5, True), ("E", 8, True), ("G", 2, True), ("B", 8, False)],
    )
    def test_table(self, series, rank, covered):
        assert fk.prop3_covered(series, rank) is covered
