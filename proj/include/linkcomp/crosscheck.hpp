#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkcomp/embedding.hpp"
#include "linkcomp/multigraph.hpp"
#include "linkcomp/tutte.hpp"

namespace linkcomp {

struct MethodResult {
    std::string method;
    int l;
    std::int64_t micros;
};

/// Per-instance comparison of every applicable computation method.
struct ConsistencyReport {
    std::string instance;
    std::vector<MethodResult> results;
    bool agree;  // all reported values equal
};

struct CrossCheckOptions {
    /// When set, the instance is treated as an apex graph: it is normalized
    /// into suspended-tree form and the reduction calculus contributes a
    /// value.
    std::optional<int> apex;
    int tutte_cap = kDefaultTutteCap;
};

/// Runs bicycle (always), blocks (always), tutte (under the cap), strand
/// (with the given rotation, or the default one when the graph is a forest)
/// and reduce (when an apex is known), with per-method wall times.
/// Disagreement is a report outcome, not an error.
ConsistencyReport cross_check(const Multigraph& g,
                              const std::optional<RotationSystem>& rot,
                              const CrossCheckOptions& options = {},
                              std::string instance_name = "");

/// Block composition summed over connected components (isolated vertices
/// count one each); total equals l of the whole graph.
int l_by_blocks_componentwise(const Multigraph& g);

/// Normalize the apex graph and read l off the reduction calculus (or the
/// degenerate outcome).
int l_via_reduction(const Multigraph& g, int apex);

}  // namespace linkcomp
