#include "linkcomp/corpus.hpp"

#include "linkcomp/rng.hpp"
#include "linkcomp/suspension.hpp"

namespace linkcomp {

PlaneInstance random_plane_graph(int n, int extra_edges, std::uint64_t seed) {
    if (n < 1) throw precondition_error("random_plane_graph needs n >= 1");
    if (n == 1 && extra_edges > 0)
        throw precondition_error("cannot grow edges on a single bare vertex");
    SplitMix64 rng(seed);
    Multigraph g = random_tree(n, rng.next());
    RotationSystem rot = RotationSystem::default_for(g);
    for (int k = 0; k < extra_edges; ++k) {
        auto orbits = face_orbits(g, rot);
        std::vector<int> wide;  // faces with at least two corners
        for (int i = 0; i < static_cast<int>(orbits.size()); ++i)
            if (orbits[i].size() >= 2) wide.push_back(i);
        const auto& orbit = orbits[wide[rng.next_below(wide.size())]];
        const size_t i = rng.next_below(orbit.size());
        size_t j = rng.next_below(orbit.size() - 1);
        if (j >= i) ++j;
        auto [g2, rot2] = insert_edge_at_corners(g, rot, orbit[i], orbit[j]);
        g = std::move(g2);
        rot = std::move(rot2);
    }
    return {std::move(g), std::move(rot)};
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph g = a.add_vertices(b.vertex_count());
    for (const Edge& e : b.edges())
        g = g.add_edge(a.vertex_count() + e.a, a.vertex_count() + e.b);
    return g;
}

Multigraph glue_at(const Multigraph& a, int va, const Multigraph& b, int vb) {
    if (va < 0 || va >= a.vertex_count() || vb < 0 || vb >= b.vertex_count())
        throw precondition_error("glue vertex out of range");
    auto remap = [&](int w) {
        if (w == vb) return va;
        return a.vertex_count() + (w < vb ? w : w - 1);
    };
    Multigraph g = a.add_vertices(b.vertex_count() - 1);
    for (const Edge& e : b.edges()) g = g.add_edge(remap(e.a), remap(e.b));
    return g;
}

Multigraph random_forest(int trees, int max_tree_size, std::uint64_t seed) {
    if (trees < 1) throw precondition_error("random_forest needs at least one tree");
    SplitMix64 rng(seed);
    Multigraph forest;
    for (int i = 0; i < trees; ++i) {
        int n = rng.next_int(2, std::max(2, max_tree_size));
        Multigraph t = random_tree(n, rng.next());
        forest = i == 0 ? t : disjoint_union(forest, t);
    }
    return forest;
}

ApexInstance random_apex_graph(int tree_n, std::uint64_t seed, int max_mult,
                               int max_loops) {
    SplitMix64 rng(seed);
    Multigraph t = random_tree(tree_n, rng.next());
    const int apex = tree_n;
    Multigraph g = t.add_vertices(1);
    for (int x = 0; x < tree_n; ++x) {
        int mult = rng.next_int(0, max_mult);
        for (int k = 0; k < mult; ++k) g = g.add_edge(x, apex);
    }
    int loops = rng.next_int(0, max_loops);
    for (int k = 0; k < loops; ++k) g = g.add_edge(apex, apex);
    return {std::move(g), apex};
}

Multigraph random_no_deg2_tree(int min_n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Multigraph g = Multigraph::build(2, {{0, 1}});
    while (g.vertex_count() < min_n) {
        int v = static_cast<int>(rng.next_below(g.vertex_count()));
        int base = g.vertex_count();
        g = g.add_vertices(2).add_edge(v, base).add_edge(v, base + 1);
    }
    return g;
}

Multigraph random_glued_graph(std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto piece = [&]() -> Multigraph {
        switch (rng.next_below(4)) {
            case 0: {  // cycle
                int k = rng.next_int(3, 6);
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
                return Multigraph::build(k, edges);
            }
            case 1:  // bigon
                return Multigraph::build(2, {{0, 1}, {0, 1}});
            case 2:  // suspended random tree
                return suspend_tree(random_tree(rng.next_int(3, 6), rng.next())).graph;
            default:
                return random_tree(rng.next_int(2, 5), rng.next());
        }
    };
    Multigraph g = piece();
    const int pieces = rng.next_int(2, 4);
    for (int i = 1; i < pieces; ++i) {
        Multigraph p = piece();
        int va = static_cast<int>(rng.next_below(g.vertex_count()));
        int vb = static_cast<int>(rng.next_below(p.vertex_count()));
        g = glue_at(g, va, p, vb);
    }
    return g;
}

}  // namespace linkcomp
