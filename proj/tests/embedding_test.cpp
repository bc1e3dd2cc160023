#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "linkcomp/bicycle.hpp"
#include "linkcomp/corpus.hpp"
#include "linkcomp/embedding.hpp"
#include "linkcomp/rng.hpp"
#include "test_util.hpp"

using namespace linkcomp;
using namespace linkcomp::testutil;

TEST_CASE("default embedding shape") {
    RotationSystem rot = RotationSystem::default_for(path(3));
    CHECK(rot.vertex_orders()[0].size() == 1);
    CHECK(rot.vertex_orders()[1].size() == 2);
    CHECK(rot.vertex_orders()[2].size() == 1);

    // mate/succ/pred identities
    Multigraph g = star(4);
    RotationSystem r = RotationSystem::random_for(g, 11);
    for (Dart d = 0; d < r.dart_count(); ++d) {
        CHECK(mate(mate(d)) == d);
        CHECK(r.succ(r.pred(d)) == d);
        CHECK(r.pred(r.succ(d)) == d);
        CHECK(r.tail(r.succ(d)) == r.tail(d));
    }
}

TEST_CASE("random embedding is deterministic and genus 0 on trees") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        Multigraph t = random_tree(12, seed);
        RotationSystem a = RotationSystem::random_for(t, seed * 3 + 1);
        RotationSystem b = RotationSystem::random_for(t, seed * 3 + 1);
        CHECK(a.vertex_orders() == b.vertex_orders());
        CHECK(validate_genus0(t, a) == 1);  // trees bound a single face
    }
}

TEST_CASE("validate_genus0 counts faces and rejects the torus loop") {
    CHECK(validate_genus0(cycle(3), RotationSystem::default_for(cycle(3))) == 2);
    CHECK(validate_genus0(path(5), RotationSystem::default_for(path(5))) == 1);

    // one vertex, two loops: nested (g gbar h hbar) embeds in the sphere,
    // interleaved (g h gbar hbar) forces genus 1
    Multigraph two_loops = Multigraph::build(1, {{0, 0}, {0, 0}});
    RotationSystem nested =
        RotationSystem::from_orders(two_loops, {{0, 1, 2, 3}});
    CHECK(validate_genus0(two_loops, nested) == 3);
    RotationSystem interleaved =
        RotationSystem::from_orders(two_loops, {{0, 2, 1, 3}});
    CHECK_THROWS_AS(validate_genus0(two_loops, interleaved), genus_error);
    try {
        validate_genus0(two_loops, interleaved);
    } catch (const genus_error& e) {
        CHECK(e.component_min_vertex == 0);
        CHECK(e.euler == 0);
    }

    // an isolated vertex sits inside one face of its own
    Multigraph mixed = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(validate_genus0(mixed, RotationSystem::default_for(mixed)) == 3);
}

TEST_CASE("strand counts on the worked examples") {
    auto count = [](const Multigraph& g) {
        return strand_components(g, RotationSystem::default_for(g)).l;
    };
    CHECK(count(path(5)) == 1);                                // any tree
    CHECK(count(Multigraph(3, {})) == 3);                      // edgeless
    CHECK(count(cycle(4)) == 2);
    CHECK(count(cycle(3)) == 1);                               // trefoil shadow
    CHECK(count(Multigraph::build(2, {{0, 1}, {0, 1}})) == 2); // Hopf shadow

    // one vertex, two nested loops
    Multigraph two_loops = Multigraph::build(1, {{0, 0}, {0, 0}});
    RotationSystem nested = RotationSystem::from_orders(two_loops, {{0, 1, 2, 3}});
    CHECK(strand_components(two_loops, nested).l == 1);

    // genus failures propagate
    RotationSystem interleaved = RotationSystem::from_orders(two_loops, {{0, 2, 1, 3}});
    CHECK_THROWS_AS(strand_components(two_loops, interleaved), genus_error);
}

TEST_CASE("C3 exposes wrong crossing conventions") {
    // The trefoil shadow has one strand.  Pairing only the {g, mate(g)}
    // diagonal reports 3 here, so this instance pins the convention; the
    // succ-based second diagonal is the mirror convention and counts the
    // same strands.
    Multigraph c3 = cycle(3);
    RotationSystem rot = RotationSystem::default_for(c3);
    auto classes_with = [&](bool second_diagonal, bool use_succ) {
        std::vector<int> parent(6);
        for (int d = 0; d < 6; ++d) parent[d] = d;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int e = 0; e < 3; ++e) {
            unite(2 * e, 2 * e + 1);
            if (second_diagonal) {
                Dart g = 2 * e, gbar = 2 * e + 1;
                if (use_succ)
                    unite(rot.succ(g), rot.succ(gbar));
                else
                    unite(rot.pred(g), rot.pred(gbar));
            }
        }
        int classes = 0;
        for (int d = 0; d < 6; ++d) classes += find(d) == d;
        return classes;
    };
    CHECK(strand_components(c3, rot).l == 1);
    CHECK(classes_with(true, false) == 1);   // the real convention
    CHECK(classes_with(false, false) == 3);  // single diagonal: the wrong turn
    CHECK(classes_with(true, true) == 1);    // mirror convention, same count
}

TEST_CASE("strand partition structure") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        PlaneInstance inst =
            random_plane_graph(2 + rng.next_below(8), rng.next_below(6), rng.next());
        StrandCount sc = strand_components(inst.graph, inst.rot);
        // classes partition all darts
        std::set<Dart> seen;
        for (const auto& strand : sc.partition.strands) {
            CHECK(!strand.empty());
            CHECK(strand.front() == *std::min_element(strand.begin(), strand.end()));
            for (Dart d : strand) CHECK(seen.insert(d).second);
        }
        CHECK(static_cast<int>(seen.size()) == 2 * inst.graph.edge_count());
        // a strand meets an edge's dart pair 0 or 2 times, never once
        for (const auto& strand : sc.partition.strands) {
            std::map<int, int> per_edge;
            for (Dart d : strand) ++per_edge[dart_edge(d)];
            for (auto [e, k] : per_edge) CHECK(k == 2);
        }
    }
}

TEST_CASE("strand count matches the bicycle oracle on plane instances") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        PlaneInstance inst =
            random_plane_graph(2 + rng.next_below(9), rng.next_below(7), rng.next());
        CHECK(strand_components(inst.graph, inst.rot).l == l_from_bicycle(inst.graph));
    }
}

TEST_CASE("embedding invariance on forests and mirrored plane graphs") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Multigraph f = random_forest(1 + rng.next_below(3), 8, rng.next());
        int expected = strand_components(f, RotationSystem::default_for(f)).l;
        for (int k = 0; k < 10; ++k) {
            RotationSystem r = RotationSystem::random_for(f, rng.next());
            CHECK(strand_components(f, r).l == expected);
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        PlaneInstance inst =
            random_plane_graph(3 + rng.next_below(6), 1 + rng.next_below(5), rng.next());
        CHECK(strand_components(inst.graph, inst.rot).l ==
              strand_components(inst.graph, inst.rot.mirrored()).l);
    }
}

TEST_CASE("insert_edge_in_face") {
    Multigraph p3 = path(3);
    RotationSystem rot = RotationSystem::default_for(p3);
    auto [g, rot2] = insert_edge_in_face(p3, rot, 0, 2, 0);
    CHECK(g.edge_count() == 3);
    CHECK(validate_genus0(g, rot2) == 2);  // became C3

    // vertex not on the chosen face
    Multigraph c3 = cycle(3);
    RotationSystem c3rot = RotationSystem::default_for(c3);
    Multigraph c3iso = Multigraph::build(4, {{0, 1}, {1, 2}, {2, 0}});
    RotationSystem c3isorot = RotationSystem::default_for(c3iso);
    CHECK_THROWS_AS(insert_edge_in_face(c3iso, c3isorot, 0, 3, 0), precondition_error);
}

TEST_CASE("repeated face insertion never breaks validation") {
    SplitMix64 rng(777);
    int steps = 0;
    while (steps < 1000) {
        PlaneInstance inst = random_plane_graph(2 + rng.next_below(7), 0, rng.next());
        Multigraph g = inst.graph;
        RotationSystem rot = inst.rot;
        for (int k = 0; k < 12 && steps < 1000; ++k, ++steps) {
            auto orbits = face_orbits(g, rot);
            std::vector<int> wide;
            for (int i = 0; i < static_cast<int>(orbits.size()); ++i)
                if (orbits[i].size() >= 2) wide.push_back(i);
            const auto& orbit = orbits[wide[rng.next_below(wide.size())]];
            size_t i = rng.next_below(orbit.size());
            size_t j = rng.next_below(orbit.size() - 1);
            if (j >= i) ++j;
            auto [g2, rot2] = insert_edge_at_corners(g, rot, orbit[i], orbit[j]);
            g = std::move(g2);
            rot = std::move(rot2);
            CHECK_NOTHROW(validate_genus0(g, rot));
        }
    }
}
