#include "linkcomp/tutte.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linkcomp/errors.hpp"

namespace linkcomp {

namespace {

// Bridge flags per edge.  Loops are not bridges; one edge of a parallel
// pair is not a bridge either (the twin is a back edge).
std::vector<char> find_bridges(const Multigraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> bridge(g.edge_count(), 0);
    int timer = 0;

    struct Frame {
        int v;
        int via_edge;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1});
        while (!stack.empty()) {
            const int v = stack.back().v;
            if (stack.back().next < adj[v].size()) {
                auto [w, e] = adj[v][stack.back().next++];
                if (e == stack.back().via_edge || g.is_loop(e)) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                const int via = stack.back().via_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > disc[parent]) bridge[via] = 1;
            }
        }
    }
    return bridge;
}

// Degree-refined relabeling key.  Equal keys mean equal edge lists after a
// deterministic relabeling, hence isomorphic minors; collisions between
// distinct isomorphism classes cannot happen, missed hits can.
std::string canonical_key(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color = g.degrees();
    auto adj = g.adjacency();
    for (int round = 0; round < 2; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dense;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(adj[v].size());
            for (auto [w, e] : adj[v]) {
                (void)e;
                nb.push_back(color[w]);
            }
            std::sort(nb.begin(), nb.end());
            next[v] = dense.emplace(std::make_pair(color[v], std::move(nb)),
                                    static_cast<int>(dense.size()))
                          .first->second;
        }
        color = std::move(next);
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(color[a], a) < std::pair(color[b], b);
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        relabeled.push_back(std::minmax(pos[e.a], pos[e.b]));
    std::sort(relabeled.begin(), relabeled.end());

    std::string key = std::to_string(n) + ":";
    for (auto [a, b] : relabeled)
        key += std::to_string(a) + "," + std::to_string(b) + ";";
    return key;
}

BigInt eval(const Multigraph& g, std::map<std::string, BigInt>* memo) {
    std::string key;
    if (memo) {
        key = canonical_key(g);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }

    std::vector<char> bridge = find_bridges(g);
    int pick = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!g.is_loop(e) && !bridge[e]) {
            pick = e;
            break;
        }
    }
    BigInt result;
    if (pick < 0) {
        // Only loops and bridges remain: a factor of -1 each.
        result = BigInt(g.edge_count() % 2 == 0 ? 1 : -1);
    } else {
        result = eval(g.delete_edge(pick), memo) + eval(g.contract_edge(pick), memo);
    }
    if (memo) memo->emplace(std::move(key), result);
    return result;
}

}  // namespace

TutteValue tutte_neg1(const Multigraph& g, const TutteOptions& options) {
    if (g.edge_count() > options.cap)
        throw cap_exceeded_error(g.edge_count(), options.cap);
    std::map<std::string, BigInt> memo;
    return {eval(g, options.memoize ? &memo : nullptr), g.edge_count()};
}

int l_from_tutte(const Multigraph& g, const TutteOptions& options) {
    TutteValue tv = tutte_neg1(g, options);
    if (tv.t.is_zero() || !tv.t.magnitude_is_power_of_two())
        throw internal_error("T(G,-1,-1) magnitude is not a power of two: " +
                             tv.t.to_string());
    const int components = g.component_count();
    const int l = tv.t.magnitude_log2() + components;
    // Componentwise form of the sign identity: T = (-1)^|E| (-2)^(l - c).
    const int expected_sign = (g.edge_count() + l - components) % 2 == 0 ? 1 : -1;
    if (tv.t.sign() != expected_sign)
        throw internal_error("T(G,-1,-1) sign identity violated: t = " +
                             tv.t.to_string());
    return l;
}

}  // namespace linkcomp
