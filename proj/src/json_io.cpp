#include "linkcomp/json_io.hpp"

namespace linkcomp {

namespace {

int expect_int(const ojson& j, const char* what) {
    if (!j.is_number_integer())
        throw parse_error(std::string("expected integer ") + what);
    return j.get<int>();
}

const ojson& expect_field(const ojson& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

ojson graph_to_json(const GraphFile& f) {
    ojson j;
    j["n"] = f.graph.vertex_count();
    ojson edges = ojson::array();
    for (const Edge& e : f.graph.edges()) edges.push_back({e.a, e.b});
    j["edges"] = std::move(edges);
    if (f.rotation) {
        ojson rot = ojson::array();
        for (const auto& cyc : f.rotation->vertex_orders()) rot.push_back(cyc);
        j["rotation"] = std::move(rot);
    }
    if (f.apex) j["apex"] = *f.apex;
    if (f.base_vertices) j["base_vertices"] = *f.base_vertices;
    return j;
}

GraphFile graph_from_json(const ojson& j) {
    GraphFile f;
    int n = expect_int(expect_field(j, "n"), "\"n\"");
    const ojson& edges = expect_field(j, "edges");
    if (!edges.is_array()) throw parse_error("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edge_list;
    for (const ojson& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("each edge must be a pair [u, v]");
        edge_list.emplace_back(expect_int(e[0], "endpoint"),
                               expect_int(e[1], "endpoint"));
    }
    try {
        f.graph = Multigraph::build(n, edge_list);
    } catch (const precondition_error& ex) {
        throw parse_error(ex.what());
    }
    if (j.contains("rotation")) {
        const ojson& rot = j.at("rotation");
        if (!rot.is_array()) throw parse_error("\"rotation\" must be an array");
        std::vector<std::vector<Dart>> orders;
        for (const ojson& cyc : rot) {
            if (!cyc.is_array()) throw parse_error("rotation entries must be arrays");
            std::vector<Dart> darts;
            for (const ojson& d : cyc) darts.push_back(expect_int(d, "dart"));
            orders.push_back(std::move(darts));
        }
        try {
            f.rotation = RotationSystem::from_orders(f.graph, std::move(orders));
        } catch (const precondition_error& ex) {
            throw parse_error(ex.what());
        }
    }
    if (j.contains("apex")) {
        int apex = expect_int(j.at("apex"), "\"apex\"");
        if (apex < 0 || apex >= f.graph.vertex_count())
            throw parse_error("apex out of range");
        f.apex = apex;
    }
    if (j.contains("base_vertices")) {
        const ojson& base = j.at("base_vertices");
        if (!base.is_array()) throw parse_error("\"base_vertices\" must be an array");
        std::vector<int> verts;
        for (const ojson& v : base) verts.push_back(expect_int(v, "base vertex"));
        f.base_vertices = std::move(verts);
    }
    return f;
}

ojson report_to_json(const ConsistencyReport& r) {
    ojson values, micros;
    for (const MethodResult& m : r.results) {
        values[m.method] = m.l;
        micros[m.method] = m.micros;
    }
    ojson j;
    j["instance"] = r.instance;
    j["values"] = std::move(values);
    j["agree"] = r.agree;
    j["micros"] = std::move(micros);
    return j;
}

ojson reduction_op_to_json(const ReductionOp& op) {
    ojson j;
    if (const auto* c = std::get_if<ContractOp>(&op)) {
        j["kind"] = "Contract";
        j["v"] = c->v;
        j["x"] = c->x;
        j["y"] = c->y;
    } else if (const auto* t1 = std::get_if<TypeIOp>(&op)) {
        j["kind"] = "TypeI";
        j["w"] = t1->w;
        j["u"] = t1->u;
        j["leaf"] = t1->leaf;
    } else if (const auto* t2 = std::get_if<TypeIIOp>(&op)) {
        j["kind"] = "TypeII";
        j["w"] = t2->w;
        j["u1"] = t2->u1;
        j["l1"] = t2->l1;
        j["u2"] = t2->u2;
        j["l2"] = t2->l2;
        j["w_deleted"] = t2->w_deleted;
    } else {
        const auto& t3 = std::get<TypeIIIOp>(op);
        j["kind"] = "TypeIII";
        j["w"] = t3.w;
        j["deleted_leaf"] = t3.deleted_leaf;
    }
    return j;
}

ReductionOp reduction_op_from_json(const ojson& j) {
    const ojson& kind = expect_field(j, "kind");
    if (!kind.is_string()) throw parse_error("op \"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    auto geti = [&](const char* key) { return expect_int(expect_field(j, key), key); };
    if (k == "Contract") return ContractOp{geti("v"), geti("x"), geti("y")};
    if (k == "TypeI") return TypeIOp{geti("w"), geti("u"), geti("leaf")};
    if (k == "TypeII") {
        const ojson& wd = expect_field(j, "w_deleted");
        if (!wd.is_boolean()) throw parse_error("\"w_deleted\" must be a boolean");
        return TypeIIOp{geti("w"), geti("u1"), geti("l1"),
                        geti("u2"), geti("l2"), wd.get<bool>()};
    }
    if (k == "TypeIII") return TypeIIIOp{geti("w"), geti("deleted_leaf")};
    throw parse_error("unknown reduction op kind: " + k);
}

ojson reduction_trace_to_json(const ReductionTrace& t) {
    ojson ops = ojson::array();
    for (const ReductionOp& op : t.ops) ops.push_back(reduction_op_to_json(op));
    ojson j;
    j["initial"] = graph_to_json({t.initial, std::nullopt, std::nullopt, std::nullopt});
    j["ops"] = std::move(ops);
    j["final"] = graph_to_json({t.final_tree, std::nullopt, std::nullopt, std::nullopt});
    j["type3_count"] = t.type3_count;
    return j;
}

ReductionTrace reduction_trace_from_json(const ojson& j) {
    ReductionTrace t;
    t.initial = graph_from_json(expect_field(j, "initial")).graph;
    const ojson& ops = expect_field(j, "ops");
    if (!ops.is_array()) throw parse_error("\"ops\" must be an array");
    for (const ojson& op : ops) t.ops.push_back(reduction_op_from_json(op));
    t.final_tree = graph_from_json(expect_field(j, "final")).graph;
    t.type3_count = expect_int(expect_field(j, "type3_count"), "type3_count");
    return t;
}

ojson norm_step_to_json(const NormStep& s) {
    ojson j;
    if (const auto* loop = std::get_if<LoopDeletionStep>(&s)) {
        j["kind"] = "LoopDeletion";
        j["edge"] = loop->edge;
    } else if (const auto* pair = std::get_if<ParallelPairDeletionStep>(&s)) {
        j["kind"] = "ParallelPairDeletion";
        j["vertex"] = pair->vertex;
        j["edges"] = {pair->edge_lo, pair->edge_hi};
    } else if (const auto* un = std::get_if<LeafUntwistContractionStep>(&s)) {
        j["kind"] = "LeafUntwistContraction";
        j["edge"] = un->edge;
    } else {
        const auto& path = std::get<PathAttachmentStep>(s);
        j["kind"] = "PathAttachment";
        j["vertex"] = path.vertex;
        j["p"] = path.p;
        j["q"] = path.q;
    }
    return j;
}

NormStep norm_step_from_json(const ojson& j) {
    const ojson& kind = expect_field(j, "kind");
    if (!kind.is_string()) throw parse_error("step \"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    auto geti = [&](const char* key) { return expect_int(expect_field(j, key), key); };
    if (k == "LoopDeletion") return LoopDeletionStep{geti("edge")};
    if (k == "ParallelPairDeletion") {
        const ojson& edges = expect_field(j, "edges");
        if (!edges.is_array() || edges.size() != 2)
            throw parse_error("\"edges\" must be a pair");
        return ParallelPairDeletionStep{geti("vertex"),
                                        expect_int(edges[0], "edge"),
                                        expect_int(edges[1], "edge")};
    }
    if (k == "LeafUntwistContraction") return LeafUntwistContractionStep{geti("edge")};
    if (k == "PathAttachment")
        return PathAttachmentStep{geti("vertex"), geti("p"), geti("q")};
    throw parse_error("unknown normalization step kind: " + k);
}

ojson norm_trace_to_json(const NormalizationTrace& t) {
    ojson steps = ojson::array();
    for (const NormStep& s : t.steps) steps.push_back(norm_step_to_json(s));
    return steps;
}

NormalizationTrace norm_trace_from_json(const ojson& j) {
    if (!j.is_array()) throw parse_error("normalization trace must be an array");
    NormalizationTrace t;
    for (const ojson& s : j) t.steps.push_back(norm_step_from_json(s));
    return t;
}

ojson strands_to_json(const StrandPartition& p) {
    ojson j = ojson::array();
    for (const auto& strand : p.strands) j.push_back(strand);
    return j;
}

std::string canonical_dump(const ojson& j) { return j.dump(); }

ojson parse_text(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
}

}  // namespace linkcomp
