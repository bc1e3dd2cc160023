#include "linkcomp/bicycle.hpp"

#include <utility>
#include <vector>

namespace linkcomp {

namespace {

// Spanning-forest bookkeeping for fundamental cycles.
struct Forest {
    std::vector<int> parent;       // parent vertex, -1 at roots
    std::vector<int> parent_edge;  // edge to parent
    std::vector<int> depth;
    std::vector<char> in_tree;     // per edge
};

Forest spanning_forest(const Multigraph& g) {
    const int n = g.vertex_count();
    Forest f{std::vector<int>(n, -1), std::vector<int>(n, -1),
             std::vector<int>(n, 0), std::vector<char>(g.edge_count(), 0)};
    auto adj = g.adjacency();
    std::vector<char> visited(n, 0);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        queue.assign(1, root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (auto [w, e] : adj[v]) {
                if (visited[w]) continue;
                visited[w] = 1;
                f.parent[w] = v;
                f.parent_edge[w] = e;
                f.depth[w] = f.depth[v] + 1;
                f.in_tree[e] = 1;
                queue.push_back(w);
            }
        }
    }
    return f;
}

}  // namespace

int bicycle_dim(const Multigraph& g, RankKernel kernel) {
    const int m = g.edge_count();
    if (m == 0) return 0;
    const int n = g.vertex_count();
    Forest forest = spanning_forest(g);

    int cycles = 0;
    for (int e = 0; e < m; ++e)
        if (!forest.in_tree[e]) ++cycles;

    gf2::Matrix mat(cycles + n, m);
    int row = 0;
    for (int e = 0; e < m; ++e) {
        if (forest.in_tree[e]) continue;
        mat.set(row, e);
        int u = g.edge(e).a, v = g.edge(e).b;
        while (u != v) {  // walk both endpoints up to their meeting point
            if (forest.depth[u] >= forest.depth[v]) {
                mat.flip(row, forest.parent_edge[u]);
                u = forest.parent[u];
            } else {
                mat.flip(row, forest.parent_edge[v]);
                v = forest.parent[v];
            }
        }
        ++row;
    }
    // Incidence rows span the cut space; loops contribute nothing mod 2.
    for (int e = 0; e < m; ++e) {
        if (g.is_loop(e)) continue;
        mat.flip(cycles + g.edge(e).a, e);
        mat.flip(cycles + g.edge(e).b, e);
    }

    int rank;
    switch (kernel) {
        case RankKernel::serial: rank = gf2::rank_serial(std::move(mat)); break;
        case RankKernel::parallel: rank = gf2::rank_parallel(std::move(mat)); break;
        default: rank = gf2::rank(std::move(mat)); break;
    }
    // dim(cycle) + dim(cut) - dim(cycle + cut) = m - rank.
    return m - rank;
}

int l_from_bicycle(const Multigraph& g, RankKernel kernel) {
    return bicycle_dim(g, kernel) + g.component_count();
}

}  // namespace linkcomp
