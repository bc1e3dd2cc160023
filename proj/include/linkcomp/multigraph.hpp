#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkcomp/errors.hpp"

namespace linkcomp {

struct Edge {
    int a;
    int b;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on dense vertex ids 0..n-1.  Loops (a == b) and
/// parallel edges are allowed.  Edge ids are positions in the edge list and
/// are re-compacted deterministically after deletions (later edges shift
/// down); vertex ids re-compact the same way after vertex removals, so a
/// given sequence of edits names vertices and edges identically on every
/// platform.  All edit operations are pure: they return a new graph.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int n, std::vector<Edge> edges);

    static Multigraph build(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const;
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_loop(int e) const { return edge(e).a == edge(e).b; }

    /// Loops count twice.
    int degree(int v) const;
    std::vector<int> degrees() const;

    /// Degree-1 vertices, ascending.
    std::vector<int> leaves() const;

    /// Incident edge ids, ascending; a loop appears once.
    std::vector<int> incident_edges(int v) const;

    /// Per-vertex (neighbor, edge id) lists in edge-id order; a loop at v
    /// contributes two entries at v, so list sizes equal degrees.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    /// Endpoints merged into the lower vertex id; other edges between the
    /// two endpoints become loops; edge e is removed.  Loops cannot be
    /// contracted.
    Multigraph contract_edge(int e) const;

    Multigraph delete_edge(int e) const;

    /// Removes v and every incident edge.
    Multigraph delete_vertex(int v) const;

    /// Appends the edge (u, v); its id is the new highest.
    Multigraph add_edge(int u, int v) const;

    /// Appends k isolated vertices.
    Multigraph add_vertices(int k) const;

    /// Vertex sets of the connected components, ordered by minimum vertex,
    /// each ascending.  Isolated vertices are their own components.
    std::vector<std::vector<int>> connected_components() const;
    int component_count() const;

    /// Connected, loop-free, simple, and |E| = |V| - 1.
    bool is_tree() const;

    /// Every component is a tree (K1 components allowed).
    bool is_forest() const;

    /// Induced sub-multigraph on the given vertices (must be distinct and
    /// valid), relabeled densely in ascending order of the originals; edge
    /// order is preserved.  Keeps only edges with both endpoints inside.
    Multigraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

  private:
    void check_vertex(int v) const;
    void check_edge(int e) const;

    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Uniformly random labeled tree on n >= 1 vertices, decoded from a random
/// sequence drawn off a SplitMix64 stream; identical seeds give identical
/// edge lists everywhere.
Multigraph random_tree(int n, std::uint64_t seed);

}  // namespace linkcomp
