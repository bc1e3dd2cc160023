#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkcomp/embedding.hpp"
#include "linkcomp/multigraph.hpp"

namespace linkcomp {

// Seeded instance generators shared by the cross-check harness, the
// benchmarks and the test suites.  Everything is a pure function of its
// seed.

struct PlaneInstance {
    Multigraph graph;
    RotationSystem rot;
};

/// Random plane graph grown from a random tree by repeated edge insertion
/// into faces; loops and parallel edges arise naturally.  Always genus 0.
PlaneInstance random_plane_graph(int n, int extra_edges, std::uint64_t seed);

/// Disjoint union of `trees` random trees with 2..max_tree_size vertices.
Multigraph random_forest(int trees, int max_tree_size, std::uint64_t seed);

struct ApexInstance {
    Multigraph graph;
    int apex;
};

/// Random tree plus an apex with per-vertex multiplicities 0..max_mult and
/// 0..max_loops loops at the apex; input shape for normalize_apex.
ApexInstance random_apex_graph(int tree_n, std::uint64_t seed, int max_mult = 3,
                               int max_loops = 2);

/// Tree grown from K2 by repeatedly attaching two fresh leaves to a random
/// vertex; such trees never contain a degree-2 vertex.
Multigraph random_no_deg2_tree(int min_n, std::uint64_t seed);

/// Connected graph built by gluing 2..4 small pieces (cycles, bigons,
/// suspended trees, trees) at single shared vertices.
Multigraph random_glued_graph(std::uint64_t seed);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Identifies vertex vb of b with vertex va of a; b's other vertices are
/// appended after a's.
Multigraph glue_at(const Multigraph& a, int va, const Multigraph& b, int vb);

}  // namespace linkcomp
