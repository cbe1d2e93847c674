"""Forward/backward algorithms, posets, fibers, representatives, flips."""

from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectlab.biject import (
    FlipGraph,
    Poset,
    _fiber_strong_geometric,
    _fiber_weak_geometric,
    adjacency_poset,
    baxter_representative,
    count_linear_extensions,
    diagonal_representative,
    fiber_s,
    fiber_w,
    flips,
    gamma_s,
    gamma_w,
    leftmost_extension,
    linear_extensions,
    quotient_cover_graph,
    reflect_swne,
    rightmost_extension,
    strong_poset,
    weak_poset,
)
from rectlab.perm import (
    Permutation,
    all_permutations,
    classify,
    complement,
    identity_permutation,
    inversion_set,
    parse_permutation,
    reverse_permutation,
)
from rectlab.rect import is_diagonal, strong_key, weak_key

perms = lambda n: st.permutations(range(1, n + 1)).map(Permutation)


# ---------------------------------------------------------------------------
# Forward maps
# ---------------------------------------------------------------------------


class TestForwardMaps:
    def test_identity_gives_vertical_strips(self):
        for gamma in (gamma_w, gamma_s):
            r = gamma(identity_permutation(4))
            for q in r.rects:
                assert q.y1 == 0 and q.y2 == r.height
            assert [q.x1 for q in r.rects] == sorted(q.x1 for q in r.rects)

    def test_reverse_gives_horizontal_strips(self):
        for gamma in (gamma_w, gamma_s):
            r = gamma(reverse_permutation(4))
            for q in r.rects:
                assert q.x1 == 0 and q.x2 == r.width

    def test_weak_image_counts(self, sweeps):
        for n, want in zip(range(1, 6), (1, 2, 6, 22, 92)):
            assert len(sweeps.weak_classes(n)) == want

    def test_strong_image_counts(self, sweeps):
        for n, want in zip(range(1, 6), (1, 2, 6, 24, 116)):
            assert len(sweeps.strong_classes(n)) == want

    def test_weak_images_are_diagonal(self):
        for pi in all_permutations(5):
            assert is_diagonal(gamma_w(pi))

    def test_strong_refines_weak_s6(self):
        for pi in all_permutations(6):
            assert weak_key(gamma_s(pi)) == weak_key(gamma_w(pi))

    def test_diagonal_representative(self, d1, r1):
        assert diagonal_representative(r1) == d1
        assert diagonal_representative(d1) == d1


# ---------------------------------------------------------------------------
# Posets
# ---------------------------------------------------------------------------


class TestPosets:
    def test_strips_are_chains(self):
        r = gamma_w(identity_permutation(4))
        chain = frozenset({(1, 2), (2, 3), (3, 4)})
        assert weak_poset(r).covers == chain
        assert adjacency_poset(r).covers == chain
        assert strong_poset(gamma_s(identity_permutation(4))).covers == chain

    def test_fixture_cover_counts(self, d1, r1):
        # frozen regression values for the 16-rectangle running example
        assert len(weak_poset(d1).covers) == 21
        assert len(adjacency_poset(d1).covers) == 21
        assert len(adjacency_poset(r1).covers) == 22
        assert len(strong_poset(r1).covers) == 20

    def test_weak_poset_is_class_invariant(self, d1, r1):
        assert weak_poset(r1).covers == weak_poset(d1).covers
        assert weak_poset(d1).covers == adjacency_poset(d1).covers

    def test_covers_are_irredundant(self, sweeps):
        for r in sweeps.strong_classes(5).values():
            for p in (weak_poset(r), adjacency_poset(r), strong_poset(r)):
                for (i, j) in p.covers:
                    assert p.less(i, j)
                    # no intermediate element between the ends of a cover
                    assert not any(
                        p.less(i, k) and p.less(k, j) for k in range(1, p.n + 1)
                    )

    def test_cyclic_relation_rejected(self):
        r = gamma_w(identity_permutation(3))
        from rectlab.biject import _poset_from_relations

        with pytest.raises(ValueError):
            _poset_from_relations(3, {(1, 2), (2, 1)}, "generic")

    def test_strong_poset_two_dimensional(self, sweeps):
        # the order is exactly the intersection of its extreme extensions
        for n in range(1, 7):
            for r in sweeps.strong_classes(n).values():
                p = strong_poset(r)
                lo = leftmost_extension(p)
                hi = rightmost_extension(p)
                pos_lo = {v: i for i, v in enumerate(lo)}
                pos_hi = {v: i for i, v in enumerate(hi)}
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        if i == j:
                            continue
                        both = pos_lo[i] < pos_lo[j] and pos_hi[i] < pos_hi[j]
                        assert p.less(i, j) == both

    def test_poset_order_relations_nested(self, sweeps):
        # weak order relation is contained in the strong one (the strong
        # fiber is a subset of the weak fiber)
        for r in sweeps.strong_classes(5).values():
            pw, ps = weak_poset(r), strong_poset(r)
            for i in range(1, 6):
                for j in range(1, 6):
                    if i != j and pw.less(i, j):
                        assert ps.less(i, j)


# ---------------------------------------------------------------------------
# Linear extensions
# ---------------------------------------------------------------------------


class TestLinearExtensions:
    def test_antichain(self):
        p = Poset(3, frozenset())
        exts = list(linear_extensions(p))
        assert len(exts) == 6
        assert set(exts) == set(all_permutations(3))
        assert exts == sorted(exts)  # lexicographic enumeration
        assert count_linear_extensions(p) == 6

    def test_chain(self):
        p = Poset(4, frozenset({(1, 2), (2, 3), (3, 4)}))
        assert list(linear_extensions(p)) == [identity_permutation(4)]
        assert count_linear_extensions(p) == 1

    def test_extremal_extensions_of_antichain(self):
        p = Poset(3, frozenset())
        assert leftmost_extension(p) == Permutation((1, 2, 3))
        assert rightmost_extension(p) == Permutation((3, 2, 1))

    def test_strong_fibers_partition_s5(self, sweeps):
        total = sum(
            count_linear_extensions(strong_poset(r))
            for r in sweeps.strong_classes(5).values()
        )
        assert total == 120

    def test_extremes_bound_the_extension_set(self, sweeps):
        for r in sweeps.strong_classes(4).values():
            p = strong_poset(r)
            exts = list(linear_extensions(p))
            lo, hi = leftmost_extension(p), rightmost_extension(p)
            assert lo == exts[0]  # lexicographic minimum
            for e in exts:
                assert inversion_set(lo) <= inversion_set(e) <= inversion_set(hi)


# ---------------------------------------------------------------------------
# Fibers
# ---------------------------------------------------------------------------


class TestFibers:
    def test_strips_fiber_is_identity(self):
        r = gamma_w(identity_permutation(5))
        assert list(fiber_w(r)) == [identity_permutation(5)]
        assert list(fiber_s(gamma_s(identity_permutation(5)))) == [
            identity_permutation(5)
        ]

    def test_fibers_partition_sn(self, sweeps):
        for n in range(1, 6):
            for getter, classes in (
                (fiber_w, sweeps.weak_classes(n)),
                (fiber_s, sweeps.strong_classes(n)),
            ):
                seen: set[Permutation] = set()
                for r in classes.values():
                    members = set(getter(r))
                    assert not (members & seen)
                    seen |= members
                assert len(seen) == sum(1 for _ in all_permutations(n))

    def test_strong_fiber_within_weak_fiber(self, sweeps):
        for r in sweeps.strong_classes(5).values():
            assert set(fiber_s(r)) <= set(fiber_w(r))

    def test_singleton_strong_fibers_up_to_4(self, sweeps):
        for n in range(1, 5):
            for r in sweeps.strong_classes(n).values():
                assert len(fiber_s(r)) == 1

    def test_fiber_s_is_weak_order_interval_s5(self, sweeps):
        everyone = list(all_permutations(5))
        for r in sweeps.strong_classes(5).values():
            members = set(fiber_s(r))
            p = strong_poset(r)
            lo, hi = inversion_set(leftmost_extension(p)), inversion_set(
                rightmost_extension(p)
            )
            interval = {q for q in everyone if lo <= inversion_set(q) <= hi}
            assert members == interval

    def test_geometric_backward_algorithms_agree(self, sweeps):
        for n in range(1, 6):
            for r in sweeps.weak_classes(n).values():
                assert set(_fiber_weak_geometric(r)) == set(fiber_w(r))
            for r in sweeps.strong_classes(n).values():
                assert set(_fiber_strong_geometric(r)) == set(fiber_s(r))

    def test_backward_recovers_every_permutation_s6(self):
        # WF/WB duality: pi is producible by the backward algorithm from its
        # own image (geometric route), for both variants.
        for pi in all_permutations(6):
            assert pi in set(fiber_w(gamma_w(pi)))
            assert pi in set(fiber_s(gamma_s(pi)))


# ---------------------------------------------------------------------------
# Canonical representatives
# ---------------------------------------------------------------------------


class TestRepresentatives:
    def test_strips(self):
        assert baxter_representative(gamma_w(identity_permutation(4))) == (
            identity_permutation(4)
        )
        assert baxter_representative(gamma_w(reverse_permutation(4))) == (
            reverse_permutation(4)
        )

    def test_d1_baxter_representative(self, d1):
        assert baxter_representative(d1).one_line() == (
            "7 14 15 16 8 5 6 1 4 11 10 9 2 3 13 12"
        )

    def test_d1_twisted_and_co_twisted(self, d1):
        p = weak_poset(d1)
        assert leftmost_extension(p) == weak_key(d1)
        assert rightmost_extension(p).one_line() == (
            "7 14 15 16 8 11 13 10 5 6 1 4 9 2 3 12"
        )

    def test_r1_strong_extremes(self, r1):
        p = strong_poset(r1)
        assert leftmost_extension(p) == strong_key(r1)
        assert rightmost_extension(p).one_line() == (
            "7 14 5 8 15 1 6 11 16 4 10 2 9 13 3 12"
        )

    def test_baxter_representatives_are_the_baxter_permutations(self, sweeps):
        reps = {baxter_representative(r) for r in sweeps.weak_classes(5).values()}
        baxter = {p for p in all_permutations(5) if "baxter" in classify(p)}
        assert reps == baxter

    def test_representative_is_unique_baxter_member_s5(self, sweeps):
        for r in sweeps.weak_classes(5).values():
            members = [q for q in fiber_w(r) if "baxter" in classify(q)]
            assert members == [baxter_representative(r)]

    def test_keys_are_twisted_and_clumped_s5(self, sweeps):
        for r in sweeps.weak_classes(5).values():
            assert "twisted_baxter" in classify(weak_key(r))
        for r in sweeps.strong_classes(5).values():
            assert "two_clumped" in classify(strong_key(r))


# ---------------------------------------------------------------------------
# Reflection
# ---------------------------------------------------------------------------


class TestReflection:
    def test_strips_reflect_to_strips(self):
        v = gamma_s(identity_permutation(3))
        h = gamma_s(reverse_permutation(3))
        assert reflect_swne(v) == h
        assert reflect_swne(h) == v

    def test_involution_s5(self, sweeps):
        for r in sweeps.strong_classes(5).values():
            assert strong_key(reflect_swne(reflect_swne(r))) == strong_key(r)

    def test_reflection_conjugates_complement_s5(self):
        for pi in all_permutations(5):
            assert strong_key(gamma_s(complement(pi))) == strong_key(
                reflect_swne(gamma_s(pi))
            )

    def test_reflection_key_is_complement_of_rightmost_s5(self, sweeps):
        for r in sweeps.strong_classes(5).values():
            assert strong_key(reflect_swne(r)) == complement(
                rightmost_extension(strong_poset(r))
            )


# ---------------------------------------------------------------------------
# Flips and the quotient cover graph
# ---------------------------------------------------------------------------


class TestFlips:
    def test_n2_graph(self):
        g = quotient_cover_graph(2)
        assert len(g.vertices) == 2
        assert len(g.edges) == 1

    def test_n3_graph_matches_brute_force(self):
        g = quotient_cover_graph(3)
        assert len(g.vertices) == 6
        key_of = {pi: strong_key(gamma_s(pi)) for pi in all_permutations(3)}
        want = set()
        for pi, k1 in key_of.items():
            for i in range(2):
                swapped = Permutation(
                    pi[:i] + (pi[i + 1], pi[i]) + pi[i + 2 :]
                )
                k2 = key_of[swapped]
                if k1 != k2:
                    want.add((min(k1, k2), max(k1, k2)))
        assert set(g.edges) == want

    def test_n4_graph_shape(self):
        g = quotient_cover_graph(4)
        assert len(g.vertices) == 24
        assert len(g.edges) == 36

    def test_flip_kind_census_n4(self, sweeps):
        census: Counter[str] = Counter()
        for r in sweeps.strong_classes(4).values():
            for kind, _ in flips(r):
                census[kind] += 1
        assert census == {"simple": 36, "pivot": 32, "wall_slide": 4}

    def test_flips_match_graph_neighborhoods_n4(self, sweeps):
        g = quotient_cover_graph(4)
        for v in g.vertices:
            got = {strong_key(r2) for _, r2 in flips(gamma_s(v))}
            assert got == set(g.neighbors(v))

    def test_wall_slides_preserve_weak_class(self, sweeps):
        for n in range(2, 6):
            for r in sweeps.strong_classes(n).values():
                for kind, r2 in flips(r):
                    assert (weak_key(r2) == weak_key(r)) == (kind == "wall_slide")

    def test_bound_guard(self):
        with pytest.raises(ValueError):
            quotient_cover_graph(9)
        g = quotient_cover_graph(3, max_n=3)
        assert g.n == 3

    def test_to_dot_format(self):
        g = quotient_cover_graph(2)
        dot = g.to_dot()
        assert dot.startswith("graph quotient {")
        assert '"1 2"' in dot and '"2 1"' in dot
        assert '"1 2" -- "2 1";' in dot
        assert dot.rstrip().endswith("}")

    def test_neighbors_sorted(self):
        g = quotient_cover_graph(4)
        for v in g.vertices:
            ns = g.neighbors(v)
            assert ns == sorted(ns)


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------


class TestProperties:
    @given(perms(6))
    @settings(max_examples=150, deadline=None)
    def test_round_trip_membership(self, pi):
        assert pi in set(fiber_s(gamma_s(pi)))

    @given(perms(6))
    @settings(max_examples=150, deadline=None)
    def test_keys_are_fiber_minima(self, pi):
        r = gamma_s(pi)
        key = strong_key(r)
        assert inversion_set(key) <= inversion_set(pi)

    @given(perms(5))
    @settings(max_examples=100, deadline=None)
    def test_reflection_is_involution(self, pi):
        r = gamma_s(pi)
        assert strong_key(reflect_swne(reflect_swne(r))) == strong_key(r)
