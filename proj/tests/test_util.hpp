#pragma once

#include <utility>
#include <vector>

#include "linkcomp/multigraph.hpp"

namespace linkcomp::testutil {

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph::build(n, edges);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph::build(n, edges);
}

/// K_{1,n}: center 0, leaves 1..n.
inline Multigraph star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    return Multigraph::build(n + 1, edges);
}

/// Spider with `legs` legs of length 2 hanging off center 0.
inline Multigraph spider2(int legs) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < legs; ++i) {
        edges.emplace_back(0, next);
        edges.emplace_back(next, next + 1);
        next += 2;
    }
    return Multigraph::build(1 + 2 * legs, edges);
}

}  // namespace linkcomp::testutil
