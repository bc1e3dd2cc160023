#include "linkcomp/blocks.hpp"

#include <algorithm>
#include <set>

namespace linkcomp {

namespace {

struct Frame {
    int vertex;
    int via_edge;   // tree edge used to enter, -1 at roots
    size_t next;    // cursor into adjacency list
};

}  // namespace

BlockDecomposition blocks(const Multigraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    auto adj = g.adjacency();

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<int> edge_stack;
    std::vector<char> edge_seen(m, 0);
    std::vector<std::vector<int>> out_blocks;

    int timer = 0;
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            const int v = stack.back().vertex;
            const int via = stack.back().via_edge;
            if (stack.back().next < adj[v].size()) {
                auto [w, e] = adj[v][stack.back().next++];
                if (e == via || g.is_loop(e)) continue;
                if (disc[w] == -1) {
                    edge_seen[e] = 1;
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({w, e, 0});
                } else if (!edge_seen[e]) {
                    edge_seen[e] = 1;
                    if (disc[w] < disc[v]) {
                        edge_stack.push_back(e);
                        low[v] = std::min(low[v], disc[w]);
                    }
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int parent = stack.back().vertex;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    // Everything above the entering tree edge is one block.
                    std::vector<int> blk;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == via) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    out_blocks.push_back(std::move(blk));
                    if (parent != root) is_cut[parent] = 1;
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }

    // Loops are their own blocks.
    for (int e = 0; e < m; ++e)
        if (g.is_loop(e)) out_blocks.push_back({e});

    std::sort(out_blocks.begin(), out_blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });

    BlockDecomposition d;
    d.blocks = std::move(out_blocks);
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) d.cut_vertices.push_back(v);
    d.block_cut_vertices.resize(d.blocks.size());
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        std::set<int> verts;
        for (int e : d.blocks[b]) {
            verts.insert(g.edge(e).a);
            verts.insert(g.edge(e).b);
        }
        for (int v : verts)
            if (is_cut[v]) d.block_cut_vertices[b].push_back(v);
    }
    return d;
}

}  // namespace linkcomp
