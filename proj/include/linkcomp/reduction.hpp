#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "linkcomp/multigraph.hpp"

namespace linkcomp {

// The four tree rewrites.  Contract merges a degree-2 vertex v with its two
// non-leaf neighbors x and y.  TypeI deletes the length-two path w-u-leaf.
// TypeII deletes two such paths (and w itself when deg w = 3).  TypeIII
// deletes one leaf hanging off a vertex that carries at least two; it is
// the only rewrite that changes the suspended link component count, and it
// lowers it by exactly one.
struct ContractOp {
    int v, x, y;
    friend bool operator==(const ContractOp&, const ContractOp&) = default;
};
struct TypeIOp {
    int w, u, leaf;
    friend bool operator==(const TypeIOp&, const TypeIOp&) = default;
};
struct TypeIIOp {
    int w, u1, l1, u2, l2;
    bool w_deleted;
    friend bool operator==(const TypeIIOp&, const TypeIIOp&) = default;
};
struct TypeIIIOp {
    int w, deleted_leaf;
    friend bool operator==(const TypeIIIOp&, const TypeIIIOp&) = default;
};
using ReductionOp = std::variant<ContractOp, TypeIOp, TypeIIOp, TypeIIIOp>;

enum class VertexType { type_i, type_ii, type_iii };

/// Lowest-id degree-2 vertex both of whose neighbors are non-leaves.
std::optional<int> find_contraction_site(const Multigraph& tree);

/// Classification of w, first match in the fixed priority I, II, III.  A
/// "degree two vertex" witness must itself be adjacent to a leaf, and Type
/// II additionally needs deg(w) >= 3 (with deg 2 the rewrite would leave a
/// single vertex).
std::optional<VertexType> classify_type(const Multigraph& tree, int w);

/// Same classification carrying the witnesses, each chosen lowest-id.
std::optional<ReductionOp> classify_op(const Multigraph& tree, int w);

/// Applies one rewrite after validating every defining degree/adjacency
/// condition; rejects anything that would leave fewer than two vertices.
Multigraph apply_op(const Multigraph& tree, const ReductionOp& op);

struct ReductionTrace {
    Multigraph initial;
    std::vector<ReductionOp> ops;
    Multigraph final_tree;   // always K2
    int type3_count;
};

struct ReducePolicy {
    enum class Mode { deterministic, seeded_random };
    Mode mode = Mode::deterministic;
    std::uint64_t seed = 0;

    static ReducePolicy random(std::uint64_t seed) {
        return {Mode::seeded_random, seed};
    }
};

/// Runs the calculus until the tree is K2: contract while any site exists,
/// otherwise apply the rewrite of the first classifiable vertex (ascending
/// id under the deterministic policy, seeded-uniform among the valid ones
/// otherwise).  Aborts loudly if a non-K2 tree admits no rewrite, which
/// would contradict the unavoidability of the three vertex types.
ReductionTrace reduce(const Multigraph& tree, const ReducePolicy& policy = {});

/// Replays ops through apply_op; the independent slow route used to check
/// traces.
Multigraph replay_reduction(const Multigraph& initial,
                            const std::vector<ReductionOp>& ops);

struct ReducedCount {
    int l;
    ReductionTrace trace;
};

/// l of the suspended tree S_T: the number of TypeIII steps plus one.
ReducedCount l_suspended(const Multigraph& tree, const ReducePolicy& policy = {});

/// l of the suspended forest with one shared apex: the component values
/// summed, minus (number of components - 1) for the apex gluings.
int l_suspended_forest(const Multigraph& forest);

/// Cut-vertex composition: sum of per-block counts minus one per extra
/// block.  The graph must be connected; blocks are handed to block_l as
/// standalone graphs (vertices relabeled densely).
int l_by_blocks(const Multigraph& g,
                const std::function<int(const Multigraph&)>& block_l);
int l_by_blocks(const Multigraph& g);  // bicycle oracle per block

/// Standalone graph made of the given edges (endpoints relabeled densely,
/// edge order preserved).
Multigraph edge_subgraph(const Multigraph& g, const std::vector<int>& edge_ids);

}  // namespace linkcomp
