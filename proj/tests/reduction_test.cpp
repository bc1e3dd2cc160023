#include <algorithm>

#include "doctest.h"
#include "linkcomp/bicycle.hpp"
#include "linkcomp/corpus.hpp"
#include "linkcomp/reduction.hpp"
#include "linkcomp/rng.hpp"
#include "linkcomp/suspension.hpp"
#include "test_util.hpp"

using namespace linkcomp;
using namespace linkcomp::testutil;

namespace {

// Chair tree {c-a, c-b, c-d, d-e} with a=0, b=1, c=2, d=3, e=4.
Multigraph chair() {
    return Multigraph::build(5, {{2, 0}, {2, 1}, {2, 3}, {3, 4}});
}

// Slow reference loop: the engine must match this op for op.
ReductionTrace naive_reduce(const Multigraph& tree) {
    Multigraph t = tree;
    ReductionTrace trace{tree, {}, tree, 0};
    while (t.vertex_count() > 2) {
        std::optional<ReductionOp> chosen;
        if (auto site = find_contraction_site(t)) {
            auto view_nbrs = [&](int v) {
                std::vector<int> nb;
                for (const Edge& e : t.edges()) {
                    if (e.a == v) nb.push_back(e.b);
                    if (e.b == v) nb.push_back(e.a);
                }
                std::sort(nb.begin(), nb.end());
                return nb;
            };
            auto nb = view_nbrs(*site);
            chosen = ContractOp{*site, nb[0], nb[1]};
        } else {
            for (int w = 0; w < t.vertex_count() && !chosen; ++w)
                chosen = classify_op(t, w);
        }
        REQUIRE(chosen.has_value());
        trace.ops.push_back(*chosen);
        trace.type3_count += std::holds_alternative<TypeIIIOp>(*chosen);
        t = apply_op(t, *chosen);
    }
    trace.final_tree = t;
    return trace;
}

}  // namespace

TEST_CASE("find_contraction_site") {
    CHECK(find_contraction_site(path(5)) == 2);
    CHECK(!find_contraction_site(path(4)));
    CHECK(!find_contraction_site(star(3)));
    CHECK_THROWS_AS(find_contraction_site(cycle(4)), precondition_error);
}

TEST_CASE("classify_type on the anchors") {
    CHECK(classify_type(path(4), 1) == VertexType::type_i);
    CHECK(classify_type(spider2(3), 0) == VertexType::type_ii);
    CHECK(classify_type(star(3), 0) == VertexType::type_iii);
    CHECK(!classify_type(path(5), 2));  // degree-2 pivot would strand K1
    CHECK(!classify_type(path(5), 0));
}

TEST_CASE("classify_op picks lowest-id witnesses") {
    auto op = classify_op(star(5), 0);
    REQUIRE(op.has_value());
    const auto* t3 = std::get_if<TypeIIIOp>(&*op);
    REQUIRE(t3 != nullptr);
    CHECK(t3->deleted_leaf == 1);

    auto op2 = classify_op(spider2(3), 0);
    const auto* t2 = std::get_if<TypeIIOp>(&*op2);
    REQUIRE(t2 != nullptr);
    CHECK(t2->u1 == 1);
    CHECK(t2->l1 == 2);
    CHECK(t2->u2 == 3);
    CHECK(t2->l2 == 4);
    CHECK(t2->w_deleted);
}

TEST_CASE("apply_op worked examples") {
    // Contract on P5 -> P3
    Multigraph p3 = apply_op(path(5), ContractOp{2, 1, 3});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.is_tree());

    // TypeI on P4 at its second vertex -> K2
    Multigraph k2 = apply_op(path(4), TypeIOp{1, 2, 3});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    // TypeII on the 3-leg length-2 spider -> K2 (w deleted)
    Multigraph k2b = apply_op(spider2(3), TypeIIOp{0, 1, 2, 3, 4, true});
    CHECK(k2b.vertex_count() == 2);
    CHECK(k2b.edge_count() == 1);

    // TypeIII on K_{1,3} -> K_{1,2}, and l(S_T) drops by exactly one
    Multigraph k12 = apply_op(star(3), TypeIIIOp{0, 1});
    CHECK(k12.vertex_count() == 3);
    CHECK(l_from_bicycle(suspend_tree(star(3)).graph) == 3);
    CHECK(l_from_bicycle(suspend_tree(k12).graph) == 2);
}

TEST_CASE("apply_op rejects bad ops") {
    CHECK_THROWS_AS(apply_op(path(5), ContractOp{1, 0, 2}), precondition_error);
    CHECK_THROWS_AS(apply_op(path(4), TypeIOp{1, 2, 0}), precondition_error);
    CHECK_THROWS_AS(apply_op(path(5), TypeIIOp{2, 1, 0, 3, 4, false}),
                    precondition_error);
    CHECK_THROWS_AS(apply_op(star(3), TypeIIIOp{0, 0}), precondition_error);
    CHECK(apply_op(path(3), TypeIIIOp{1, 0}).vertex_count() == 2);  // stops at K2
    CHECK_THROWS_AS(apply_op(cycle(4), ContractOp{0, 1, 3}), precondition_error);
}

TEST_CASE("reduce worked examples") {
    // K_{1,5}: four TypeIII steps
    ReductionTrace t = reduce(star(5));
    CHECK(t.type3_count == 4);
    CHECK(static_cast<int>(t.ops.size()) == 4);
    CHECK(t.final_tree.vertex_count() == 2);

    // P6: one contract, then one TypeI, no TypeIII
    ReductionTrace p6 = reduce(path(6));
    REQUIRE(p6.ops.size() == 2);
    CHECK(std::holds_alternative<ContractOp>(p6.ops[0]));
    CHECK(std::holds_alternative<TypeIOp>(p6.ops[1]));
    CHECK(p6.type3_count == 0);
    CHECK(l_from_bicycle(suspend_tree(path(6)).graph) == 1);  // l(C7)

    // chair: exactly one TypeIII under any policy
    CHECK(reduce(chair()).type3_count == 1);
    for (std::uint64_t s = 0; s < 8; ++s)
        CHECK(reduce(chair(), ReducePolicy::random(s)).type3_count == 1);
    CHECK(l_from_bicycle(suspend_tree(chair()).graph) == 2);

    CHECK(reduce(path(2)).ops.empty());
    CHECK_THROWS_AS(reduce(Multigraph(1, {})), precondition_error);
    CHECK_THROWS_AS(reduce(cycle(3)), precondition_error);
}

TEST_CASE("engine equals the naive reference loop") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        Multigraph t = random_tree(2 + rng.next_below(24), rng.next());
        ReductionTrace fast = reduce(t);
        ReductionTrace slow = naive_reduce(t);
        CHECK(fast.ops == slow.ops);
        CHECK(fast.type3_count == slow.type3_count);
        CHECK(fast.final_tree == slow.final_tree);
    }
}

TEST_CASE("traces replay to K2 and edge counts strictly decrease") {
    SplitMix64 rng(505);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph t = random_tree(2 + rng.next_below(20), rng.next());
        ReductionTrace trace = reduce(t, trial % 2 == 0
                                             ? ReducePolicy{}
                                             : ReducePolicy::random(rng.next()));
        Multigraph g = trace.initial;
        int edges = g.edge_count();
        for (const ReductionOp& op : trace.ops) {
            g = apply_op(g, op);
            CHECK(g.edge_count() < edges);
            edges = g.edge_count();
        }
        CHECK(g == trace.final_tree);
        CHECK(g.vertex_count() == 2);
    }
}

TEST_CASE("per-op soundness against the bicycle oracle") {
    SplitMix64 rng(9191);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph t = random_tree(2 + rng.next_below(16), rng.next());
        ReductionTrace trace = reduce(t, ReducePolicy::random(rng.next()));
        Multigraph g = trace.initial;
        for (const ReductionOp& op : trace.ops) {
            int before = l_from_bicycle(suspend_tree(g).graph);
            g = apply_op(g, op);
            int after = l_from_bicycle(suspend_tree(g).graph);
            if (std::holds_alternative<TypeIIIOp>(op))
                CHECK(after == before - 1);
            else
                CHECK(after == before);
        }
    }
}

TEST_CASE("l_suspended anchors") {
    for (int n = 2; n <= 8; ++n) CHECK(l_suspended(star(n)).l == n);
    for (int n = 2; n <= 9; ++n)
        CHECK(l_suspended(path(n)).l == (n % 2 == 0 ? 1 : 2));  // S_{P_n} = C_{n+1}
    CHECK(l_suspended(path(2)).l == 1);                          // S_{K2} = C3
}

TEST_CASE("confluence and oracle agreement on a random corpus") {
    for (int i = 0; i < 120; ++i) {
        Multigraph t = random_tree(2 + static_cast<int>(derive_seed(4, 2, i) % 29),
                                   derive_seed(5, 3, i));
        ReducedCount det = l_suspended(t);
        CHECK(det.l == l_from_bicycle(suspend_tree(t).graph));
        for (std::uint64_t s = 0; s < 5; ++s)
            CHECK(l_suspended(t, ReducePolicy::random(derive_seed(6, s, i))).l == det.l);
    }
}

TEST_CASE("no-degree-2 trees always give two or more") {
    for (int i = 0; i < 40; ++i) {
        Multigraph t = random_no_deg2_tree(4 + i % 14, derive_seed(7, 1, i));
        std::vector<int> deg = t.degrees();
        CHECK(std::count(deg.begin(), deg.end(), 2) == 0);
        CHECK(l_suspended(t).l >= 2);
    }
}

TEST_CASE("l_suspended_forest") {
    Multigraph two_k2 = Multigraph::build(4, {{0, 1}, {2, 3}});
    CHECK(l_suspended_forest(two_k2) == 1);
    CHECK(l_from_bicycle(suspend_forest(two_k2).graph) == 1);

    Multigraph mixed = disjoint_union(star(3), path(2));
    CHECK(l_suspended_forest(mixed) == 3);
    CHECK(l_from_bicycle(suspend_forest(mixed).graph) == 3);

    CHECK(l_suspended_forest(star(4)) == l_suspended(star(4)).l);
    CHECK_THROWS_AS(l_suspended_forest(Multigraph(2, {})), precondition_error);
}

TEST_CASE("l_by_blocks") {
    Multigraph bowtie =
        Multigraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(l_by_blocks(bowtie) == 1);
    CHECK(l_by_blocks(random_tree(14, 3)) == 1);
    CHECK(l_by_blocks(cycle(4)) == l_from_bicycle(cycle(4)));  // single block
    CHECK_THROWS_AS(l_by_blocks(Multigraph(2, {})), precondition_error);
}

TEST_CASE("l_by_blocks equals the oracle on glued graphs") {
    for (int i = 0; i < 50; ++i) {
        Multigraph g = random_glued_graph(derive_seed(8, 4, i));
        CHECK(l_by_blocks(g) == l_from_bicycle(g));
    }
}
