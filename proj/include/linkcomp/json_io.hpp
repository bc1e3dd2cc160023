#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "linkcomp/crosscheck.hpp"
#include "linkcomp/embedding.hpp"
#include "linkcomp/multigraph.hpp"
#include "linkcomp/reduction.hpp"
#include "linkcomp/suspension.hpp"

namespace linkcomp {

/// Insertion-ordered JSON so serialized keys come out in the documented
/// order and canonical files round-trip byte-for-byte.
using ojson = nlohmann::ordered_json;

/// On-disk graph object: {"n", "edges"[, "rotation"][, "apex"][, "base_vertices"]}.
struct GraphFile {
    Multigraph graph;
    std::optional<RotationSystem> rotation;
    std::optional<int> apex;
    std::optional<std::vector<int>> base_vertices;
};

ojson graph_to_json(const GraphFile& f);
GraphFile graph_from_json(const ojson& j);

ojson report_to_json(const ConsistencyReport& r);

ojson reduction_op_to_json(const ReductionOp& op);
ReductionOp reduction_op_from_json(const ojson& j);
ojson reduction_trace_to_json(const ReductionTrace& t);
ReductionTrace reduction_trace_from_json(const ojson& j);

ojson norm_step_to_json(const NormStep& s);
NormStep norm_step_from_json(const ojson& j);
ojson norm_trace_to_json(const NormalizationTrace& t);
NormalizationTrace norm_trace_from_json(const ojson& j);

ojson strands_to_json(const StrandPartition& p);

/// Compact single-line serialization; the canonical byte form.
std::string canonical_dump(const ojson& j);

/// Wraps nlohmann parsing into parse_error.
ojson parse_text(const std::string& text);

}  // namespace linkcomp
