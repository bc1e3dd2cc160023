#include "linkcomp/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linkcomp/rng.hpp"

namespace linkcomp {

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
            throw precondition_error("edge endpoint out of range");
    }
}

Multigraph Multigraph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) edges.push_back({a, b});
    return Multigraph(n, std::move(edges));
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw precondition_error("vertex id out of range");
}

void Multigraph::check_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw precondition_error("edge id out of range");
}

const Edge& Multigraph::edge(int e) const {
    check_edge(e);
    return edges_[e];
}

int Multigraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.a == v) ++d;
        if (e.b == v) ++d;
    }
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) {
        ++d[e.a];
        ++d[e.b];
    }
    return d;
}

std::vector<int> Multigraph::leaves() const {
    std::vector<int> out;
    std::vector<int> d = degrees();
    for (int v = 0; v < n_; ++v)
        if (d[v] == 1) out.push_back(v);
    return out;
}

std::vector<int> Multigraph::incident_edges(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].a == v || edges_[e].b == v) out.push_back(e);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (int e = 0; e < edge_count(); ++e) {
        adj[edges_[e].a].emplace_back(edges_[e].b, e);
        adj[edges_[e].b].emplace_back(edges_[e].a, e);
    }
    return adj;
}

Multigraph Multigraph::contract_edge(int e) const {
    check_edge(e);
    if (is_loop(e)) throw precondition_error("cannot contract a loop");
    const int keep = std::min(edges_[e].a, edges_[e].b);
    const int gone = std::max(edges_[e].a, edges_[e].b);
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    auto remap = [&](int v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    for (int i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        out.push_back({remap(edges_[i].a), remap(edges_[i].b)});
    }
    Multigraph g;
    g.n_ = n_ - 1;
    g.edges_ = std::move(out);
    return g;
}

Multigraph Multigraph::delete_edge(int e) const {
    check_edge(e);
    Multigraph g(*this);
    g.edges_.erase(g.edges_.begin() + e);
    return g;
}

Multigraph Multigraph::delete_vertex(int v) const {
    check_vertex(v);
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        if (e.a == v || e.b == v) continue;
        out.push_back({e.a > v ? e.a - 1 : e.a, e.b > v ? e.b - 1 : e.b});
    }
    Multigraph g;
    g.n_ = n_ - 1;
    g.edges_ = std::move(out);
    return g;
}

Multigraph Multigraph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Multigraph g(*this);
    g.edges_.push_back({u, v});
    return g;
}

Multigraph Multigraph::add_vertices(int k) const {
    if (k < 0) throw precondition_error("cannot add a negative vertex count");
    Multigraph g(*this);
    g.n_ += k;
    return g;
}

std::vector<std::vector<int>> Multigraph::connected_components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<std::pair<int, int>>> adj = adjacency();
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[v]) {
                (void)e;
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<int>> out(next);
    for (int v = 0; v < n_; ++v) out[comp[v]].push_back(v);
    return out;
}

int Multigraph::component_count() const {
    return static_cast<int>(connected_components().size());
}

bool Multigraph::is_tree() const {
    if (n_ == 0) return false;
    if (edge_count() != n_ - 1) return false;
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.a == e.b) return false;
        auto key = std::minmax(e.a, e.b);
        if (!seen.insert(key).second) return false;
    }
    return component_count() == 1;
}

bool Multigraph::is_forest() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.a == e.b) return false;
        auto key = std::minmax(e.a, e.b);
        if (!seen.insert(key).second) return false;
    }
    return edge_count() == n_ - component_count();
}

Multigraph Multigraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(n_, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        check_vertex(vertices[i]);
        if (index[vertices[i]] != -1)
            throw precondition_error("duplicate vertex in induced subgraph");
        index[vertices[i]] = i;
    }
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
        if (index[e.a] != -1 && index[e.b] != -1)
            out.push_back({index[e.a], index[e.b]});
    }
    Multigraph g;
    g.n_ = static_cast<int>(vertices.size());
    g.edges_ = std::move(out);
    return g;
}

Multigraph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw precondition_error("random_tree needs n >= 1");
    if (n == 1) return Multigraph(1, {});
    if (n == 2) return Multigraph::build(2, {{0, 1}});
    // Sample a sequence of n-2 labels and decode it with the standard
    // sequence-to-tree bijection, so trees are exactly uniform.
    SplitMix64 rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // Smallest-leaf decoding with a moving pointer; the maximum vertex is
    // never consumed, so the closing edge attaches to n-1.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.push_back({leaf, c});
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n - 1});
    return Multigraph(n, std::move(edges));
}

}  // namespace linkcomp
