#include <numeric>

#include "doctest.h"
#include "linkcomp/bicycle.hpp"
#include "linkcomp/bigint.hpp"
#include "linkcomp/corpus.hpp"
#include "linkcomp/crosscheck.hpp"
#include "linkcomp/rng.hpp"
#include "linkcomp/suspension.hpp"
#include "linkcomp/tutte.hpp"
#include "test_util.hpp"

using namespace linkcomp;
using namespace linkcomp::testutil;

namespace {

// Brute-force bicycle dimension: enumerate all edge subsets, keep the even
// ones (cycle space), and count those orthogonal to every cycle (membership
// in the cut space = the cycle space's orthogonal complement).
int bicycle_dim_bruteforce(const Multigraph& g) {
    const int m = g.edge_count();
    REQUIRE(m <= 14);
    std::vector<std::uint32_t> cycles;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e = 0; e < m; ++e) {
            if (!(s >> e & 1)) continue;
            ++deg[g.edge(e).a];
            ++deg[g.edge(e).b];
        }
        bool even = true;
        for (int d : deg) even &= d % 2 == 0;
        if (even) cycles.push_back(s);
    }
    int members = 0;
    for (std::uint32_t s : cycles) {
        bool in_cut = true;
        for (std::uint32_t c : cycles)
            in_cut &= __builtin_popcount(s & c) % 2 == 0;
        members += in_cut;
    }
    int dim = 0;
    while ((1 << dim) < members) ++dim;
    REQUIRE((1 << dim) == members);
    return dim;
}

// Independent T(G;-1,-1) by the subset rank expansion
// sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)) with r(S) = n - c(S).
long long tutte_neg1_bruteforce(const Multigraph& g) {
    const int m = g.edge_count();
    REQUIRE(m <= 14);
    const int n = g.vertex_count();
    auto rank_of = [&](std::uint32_t s) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (int e = 0; e < m; ++e) {
            if (!(s >> e & 1)) continue;
            int a = find(g.edge(e).a), b = find(g.edge(e).b);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        return merges;  // n - components
    };
    const int r_all = rank_of((1u << m) - 1);
    long long total = 0;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        int r = rank_of(s);
        int exponent = (r_all - r) + (__builtin_popcount(s) - r);
        total += (exponent % 2 == 0 ? 1LL : -1LL) << exponent;
    }
    return total;
}

}  // namespace

TEST_CASE("BigInt arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(5) + BigInt(-5)).is_zero());
    CHECK(BigInt(-7) + BigInt(3) == BigInt(-4));
    CHECK(BigInt(1LL << 62) + BigInt(1LL << 62) == BigInt::power_of_two(63));
    BigInt big = BigInt::power_of_two(200);
    CHECK(big.magnitude_is_power_of_two());
    CHECK(big.magnitude_log2() == 200);
    CHECK((big + BigInt(-1) + BigInt(1)) == big);
    CHECK(!(big + BigInt(1)).magnitude_is_power_of_two());
    CHECK(BigInt(-12).to_string() == "-12");
    CHECK(BigInt::power_of_two(70).to_string() == "1180591620717411303424");
    CHECK(BigInt(123456789).to_int64() == 123456789);
    CHECK_THROWS_AS(big.to_int64(), internal_error);
}

TEST_CASE("tutte_neg1 on the small anchors") {
    CHECK(tutte_neg1(path(2)).t == BigInt(-1));                      // K2
    CHECK(tutte_neg1(Multigraph::build(1, {{0, 0}})).t == BigInt(-1));  // loop
    CHECK(tutte_neg1(cycle(3)).t == BigInt(-1));
    CHECK(tutte_neg1(cycle(4)).t == BigInt(-2));
    // K_{2,3} = suspended K_{1,3}
    Multigraph k23 = suspend_tree(star(3)).graph;
    CHECK(tutte_neg1(k23).t == BigInt(4));
}

TEST_CASE("tutte matches the subset expansion oracle") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        PlaneInstance inst =
            random_plane_graph(2 + rng.next_below(5), rng.next_below(5), rng.next());
        if (inst.graph.edge_count() > 12) continue;
        CHECK(tutte_neg1(inst.graph).t.to_int64() ==
              tutte_neg1_bruteforce(inst.graph));
    }
}

TEST_CASE("tutte cap is a refusal") {
    Multigraph big = random_tree(25, 3);
    CHECK_THROWS_AS(tutte_neg1(big), cap_exceeded_error);
    CHECK(tutte_neg1(big, {30, false}).t == BigInt(1));  // all bridges
    try {
        tutte_neg1(big);
    } catch (const cap_exceeded_error& e) {
        CHECK(e.edges == 24);
        CHECK(e.cap == kDefaultTutteCap);
    }
}

TEST_CASE("memoized evaluation agrees") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        PlaneInstance inst =
            random_plane_graph(2 + rng.next_below(6), rng.next_below(6), rng.next());
        CHECK(tutte_neg1(inst.graph, {18, true}).t == tutte_neg1(inst.graph).t);
    }
}

TEST_CASE("l_from_tutte") {
    CHECK(l_from_tutte(cycle(4)) == 2);
    CHECK(l_from_tutte(random_tree(12, 8)) == 1);
    Multigraph c4_iso = cycle(4).add_vertices(1);
    CHECK(l_from_tutte(c4_iso) == 3);  // componentwise: 2 + 1
}

TEST_CASE("bicycle_dim anchors and brute force") {
    CHECK(bicycle_dim(random_tree(9, 77)) == 0);
    CHECK(bicycle_dim(cycle(4)) == 1);
    CHECK(bicycle_dim(suspend_tree(star(3)).graph) == 2);  // K_{2,3}

    SplitMix64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        PlaneInstance inst =
            random_plane_graph(2 + rng.next_below(5), rng.next_below(5), rng.next());
        if (inst.graph.edge_count() > 10) continue;
        CHECK(bicycle_dim(inst.graph) == bicycle_dim_bruteforce(inst.graph));
        CHECK(bicycle_dim(inst.graph, RankKernel::serial) ==
              bicycle_dim(inst.graph, RankKernel::parallel));
    }
}

TEST_CASE("l_from_bicycle anchors") {
    // K_{2,n} = n
    for (int n = 1; n <= 8; ++n)
        CHECK(l_from_bicycle(suspend_tree(star(n)).graph) == n);
    // cycles alternate
    for (int n = 3; n <= 10; ++n)
        CHECK(l_from_bicycle(cycle(n)) == (n % 2 == 0 ? 2 : 1));
    CHECK(l_from_bicycle(Multigraph(5, {})) == 5);
}

TEST_CASE("bicycle is additive over components and relabel-invariant") {
    SplitMix64 rng(11011);
    for (int trial = 0; trial < 20; ++trial) {
        PlaneInstance a =
            random_plane_graph(2 + rng.next_below(5), rng.next_below(4), rng.next());
        PlaneInstance b =
            random_plane_graph(2 + rng.next_below(5), rng.next_below(4), rng.next());
        CHECK(bicycle_dim(disjoint_union(a.graph, b.graph)) ==
              bicycle_dim(a.graph) + bicycle_dim(b.graph));

        // relabel by reversing vertex ids
        const int n = a.graph.vertex_count();
        std::vector<std::pair<int, int>> rev;
        for (const Edge& e : a.graph.edges())
            rev.emplace_back(n - 1 - e.a, n - 1 - e.b);
        CHECK(bicycle_dim(Multigraph::build(n, rev)) == bicycle_dim(a.graph));
    }
}

TEST_CASE("untwisting a degree-1 vertex never changes l_from_bicycle") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        PlaneInstance inst =
            random_plane_graph(3 + rng.next_below(6), rng.next_below(4), rng.next());
        Multigraph g = inst.graph;
        std::vector<int> deg = g.degrees();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (deg[v] != 1) continue;
            // removing the leaf with its edge is the untwist; merely cutting
            // the edge strands the vertex as one extra component
            CHECK(l_from_bicycle(g.delete_vertex(v)) == l_from_bicycle(g));
            int pendant = g.incident_edges(v).front();
            CHECK(l_from_bicycle(g.delete_edge(pendant)) == l_from_bicycle(g) + 1);
            break;
        }
    }
}

TEST_CASE("l_from_bicycle equals l_from_tutte under the cap") {
    SplitMix64 rng(171717);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_glued_graph(rng.next());
        if (g.edge_count() > kDefaultTutteCap) continue;
        CHECK(l_from_bicycle(g) == l_from_tutte(g));
    }
}

TEST_CASE("cross_check agrees on suspended stars and trees") {
    auto [susp, rot] = suspend_tree_embedded(star(4), RotationSystem::default_for(star(4)));
    CrossCheckOptions opt;
    opt.apex = susp.apex;
    ConsistencyReport rep = cross_check(susp.graph, rot, opt, "suspended K_{1,4}");
    CHECK(rep.agree);
    CHECK(rep.results.size() == 5);  // bicycle, blocks, tutte, strand, reduce
    for (const MethodResult& r : rep.results) CHECK(r.l == 4);

    Multigraph t = random_tree(30, 5);
    ConsistencyReport tr = cross_check(t, std::nullopt, {}, "tree n=30");
    CHECK(tr.agree);
    for (const MethodResult& r : tr.results) CHECK(r.l == 1);
}
