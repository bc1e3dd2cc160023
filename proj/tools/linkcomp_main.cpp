// linkcomp: link component numbers of plane multigraphs, by strand tracing,
// Tutte evaluation at (-1,-1), GF(2) bicycle rank, and the suspended-tree
// reduction calculus.  JSON or CSV on stdout, logs on stderr; exit 0 on
// success, 1 on semantic failure, 2 on usage or malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "linkcomp/bench.hpp"
#include "linkcomp/bicycle.hpp"
#include "linkcomp/corpus.hpp"
#include "linkcomp/crosscheck.hpp"
#include "linkcomp/json_io.hpp"
#include "linkcomp/reduction.hpp"
#include "linkcomp/rng.hpp"
#include "linkcomp/suspension.hpp"
#include "linkcomp/tutte.hpp"

namespace {

using namespace linkcomp;

struct usage_error : error {
    using error::error;
};

int tutte_cap_from_env() {
    const char* s = std::getenv("LINKCOMP_TUTTE_CAP");
    if (!s) return kDefaultTutteCap;
    try {
        return std::stoi(s);
    } catch (...) {
        throw usage_error("LINKCOMP_TUTTE_CAP must be an integer");
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphFile load_graph(const std::string& path) {
    return graph_from_json(parse_text(read_input(path)));
}

void emit(const ojson& j) { std::cout << canonical_dump(j) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_compute(const std::string& file, std::string method, bool want_cert) {
    GraphFile f = load_graph(file);
    const int cap = tutte_cap_from_env();
    if (method == "auto") method = f.apex ? "reduce" : "blocks";

    ojson out;
    ojson certificate;
    int l = 0;
    if (method == "strand") {
        StrandCount sc;
        if (f.rotation)
            sc = strand_components(f.graph, *f.rotation);
        else if (f.graph.is_forest())
            sc = strand_components(f.graph, RotationSystem::default_for(f.graph));
        else
            throw precondition_error("strand needs a rotation field or a forest");
        l = sc.l;
        if (want_cert) certificate = strands_to_json(sc.partition);
    } else if (method == "tutte") {
        l = l_from_tutte(f.graph, {cap, false});
    } else if (method == "bicycle") {
        l = l_from_bicycle(f.graph);
    } else if (method == "blocks") {
        l = l_by_blocks_componentwise(f.graph);
    } else if (method == "reduce") {
        if (f.apex) {
            Multigraph base = f.graph.delete_vertex(*f.apex);
            if (base.is_tree()) {
                NormalizeResult norm = normalize_apex(f.graph, *f.apex);
                if (norm.degenerate_l) {
                    l = *norm.degenerate_l;
                } else {
                    Multigraph norm_base =
                        norm.output.delete_vertex(norm.output_apex);
                    ReducedCount rc = l_suspended(norm_base);
                    l = rc.l;
                    if (want_cert) certificate = reduction_trace_to_json(rc.trace);
                }
            } else if (base.is_forest()) {
                // suspended forest: apex must sit on exactly the leaves
                std::vector<int> deg = base.degrees();
                auto to_base = [&](int v) { return v > *f.apex ? v - 1 : v; };
                std::vector<int> hits(base.vertex_count(), 0);
                for (int e = 0; e < f.graph.edge_count(); ++e) {
                    const Edge& ed = f.graph.edge(e);
                    if (ed.a != *f.apex && ed.b != *f.apex) continue;
                    if (ed.a == ed.b)
                        throw precondition_error("loops at the apex of a forest");
                    ++hits[to_base(ed.a == *f.apex ? ed.b : ed.a)];
                }
                for (int v = 0; v < base.vertex_count(); ++v)
                    if (hits[v] != (deg[v] == 1 ? 1 : 0))
                        throw precondition_error(
                            "apex edges do not match the forest leaves");
                l = l_suspended_forest(base);
            } else {
                throw precondition_error("graph minus apex is neither tree nor forest");
            }
        } else if (f.graph.is_forest()) {
            // every component untwists to a point
            l = static_cast<int>(f.graph.connected_components().size());
        } else {
            throw precondition_error(
                "reduce needs an apex-annotated suspended tree or a forest");
        }
    } else {
        throw usage_error("unknown method: " + method);
    }

    out["l"] = l;
    out["method"] = method;
    if (want_cert && !certificate.is_null()) out["certificate"] = certificate;
    emit(out);
    return 0;
}

int cmd_suspend(const std::string& file) {
    GraphFile f = load_graph(file);
    if (f.graph.is_tree()) {
        RotationSystem rot_t =
            f.rotation ? *f.rotation : RotationSystem::default_for(f.graph);
        auto [susp, rot] = suspend_tree_embedded(f.graph, rot_t);
        emit(graph_to_json({susp.graph, rot, susp.apex, susp.base_vertices}));
    } else if (f.graph.is_forest()) {
        Suspension susp = suspend_forest(f.graph);
        emit(graph_to_json({susp.graph, std::nullopt, susp.apex, susp.base_vertices}));
    } else {
        throw precondition_error("suspend needs a tree or forest");
    }
    return 0;
}

int cmd_reduce(const std::string& file, const std::string& policy,
               std::uint64_t seed, bool want_trace) {
    GraphFile f = load_graph(file);
    ReducePolicy pol;
    if (policy == "random")
        pol = ReducePolicy::random(seed);
    else if (policy != "deterministic")
        throw usage_error("policy must be deterministic or random");
    ReductionTrace trace = reduce(f.graph, pol);
    if (want_trace) {
        emit(reduction_trace_to_json(trace));
    } else {
        ojson out;
        out["l"] = trace.type3_count + 1;
        out["type3_count"] = trace.type3_count;
        emit(out);
    }
    return 0;
}

int cmd_normalize(const std::string& file, std::optional<int> apex_flag) {
    GraphFile f = load_graph(file);
    std::optional<int> apex = apex_flag ? apex_flag : f.apex;
    if (!apex) throw usage_error("normalize needs --apex or an apex field");
    NormalizeResult res = normalize_apex(f.graph, *apex);

    ojson out;
    out["input"] = graph_to_json({f.graph, std::nullopt, *apex, std::nullopt});
    out["apex"] = *apex;
    out["steps"] = norm_trace_to_json(res.trace);
    if (res.degenerate_l) {
        out["output"] = graph_to_json(
            {res.output, std::nullopt, res.output_apex, std::nullopt});
        out["l"] = *res.degenerate_l;
    } else {
        // the output embedding is rebuilt from scratch, not patched
        RotationSystem rot = embed_suspension(res.output, res.output_apex);
        out["output"] = graph_to_json({res.output, rot, res.suspended->apex,
                                       res.suspended->base_vertices});
    }
    emit(out);
    return 0;
}

int cmd_gen_tree(int n, std::uint64_t seed) {
    if (n < 1) throw usage_error("tree size must be at least 1");
    emit(graph_to_json({random_tree(n, seed), std::nullopt, std::nullopt, std::nullopt}));
    return 0;
}

int cmd_gen_plane(int n, int extra, std::uint64_t seed) {
    if (n < 1) throw usage_error("plane size must be at least 1");
    if (extra < 0 || (n == 1 && extra > 0))
        throw usage_error("bad extra edge count for the requested size");
    PlaneInstance inst = random_plane_graph(n, extra, seed);
    emit(graph_to_json({inst.graph, inst.rot, std::nullopt, std::nullopt}));
    return 0;
}

// ---------------------------------------------------------------------------
// xcheck: seeded corpus of trees, suspended trees, plane graphs, forests and
// apex graphs; every applicable method must agree, embeddings must not
// matter, and policies must not change the TypeIII count.

struct XcheckOutcome {
    bool ok = true;
    std::string kind;
    ojson failure;  // instance descriptor when !ok
};

XcheckOutcome xcheck_instance(int index, int max_n, std::uint64_t seed, int cap) {
    XcheckOutcome out;
    SplitMix64 rng(derive_seed(seed, 0xc0de, index));
    const int kind = index % 5;
    try {
        switch (kind) {
            case 0: {  // bare tree
                out.kind = "tree";
                int n = 2 + rng.next_below(std::max(1, max_n - 1));
                Multigraph t = random_tree(n, rng.next());
                ConsistencyReport rep = cross_check(t, std::nullopt, {{}, cap});
                bool invariant = true;
                int base = strand_components(t, RotationSystem::default_for(t)).l;
                for (int k = 0; k < 3; ++k)
                    invariant &=
                        strand_components(t, RotationSystem::random_for(t, rng.next())).l ==
                        base;
                out.ok = rep.agree && invariant && base == 1;
                if (!out.ok)
                    out.failure["graph"] =
                        graph_to_json({t, std::nullopt, std::nullopt, std::nullopt});
                break;
            }
            case 1: {  // suspended tree
                out.kind = "suspended_tree";
                int n = 2 + rng.next_below(std::max(1, max_n / 2));
                Multigraph t = random_tree(n, rng.next());
                auto [susp, rot] =
                    suspend_tree_embedded(t, RotationSystem::random_for(t, rng.next()));
                CrossCheckOptions opt;
                opt.apex = susp.apex;
                opt.tutte_cap = cap;
                ConsistencyReport rep = cross_check(susp.graph, rot, opt);
                int det = reduce(t).type3_count;
                bool confluent = true;
                for (int k = 0; k < 2; ++k)
                    confluent &=
                        reduce(t, ReducePolicy::random(rng.next())).type3_count == det;
                out.ok = rep.agree && confluent;
                if (!out.ok)
                    out.failure["graph"] = graph_to_json(
                        {susp.graph, rot, susp.apex, susp.base_vertices});
                break;
            }
            case 2: {  // plane graph
                out.kind = "plane";
                int n = 2 + rng.next_below(std::max(1, max_n - 1));
                PlaneInstance inst =
                    random_plane_graph(n, rng.next_below(n), rng.next());
                ConsistencyReport rep = cross_check(inst.graph, inst.rot, {{}, cap});
                bool mirror = strand_components(inst.graph, inst.rot).l ==
                              strand_components(inst.graph, inst.rot.mirrored()).l;
                out.ok = rep.agree && mirror;
                if (!out.ok)
                    out.failure["graph"] = graph_to_json(
                        {inst.graph, inst.rot, std::nullopt, std::nullopt});
                break;
            }
            case 3: {  // forest + suspended forest
                out.kind = "forest";
                Multigraph f =
                    random_forest(1 + rng.next_below(3), std::max(2, max_n / 3), rng.next());
                ConsistencyReport rep = cross_check(f, std::nullopt, {{}, cap});
                Suspension sf = suspend_forest(f);
                bool forest_sum_ok =
                    l_suspended_forest(f) == l_from_bicycle(sf.graph);
                out.ok = rep.agree && forest_sum_ok;
                if (!out.ok)
                    out.failure["graph"] =
                        graph_to_json({f, std::nullopt, std::nullopt, std::nullopt});
                break;
            }
            default: {  // apex graph
                out.kind = "apex";
                int n = 2 + rng.next_below(std::max(1, max_n / 3));
                ApexInstance inst = random_apex_graph(n, rng.next());
                CrossCheckOptions opt;
                opt.apex = inst.apex;
                opt.tutte_cap = cap;
                ConsistencyReport rep = cross_check(inst.graph, std::nullopt, opt);
                NormalizeResult norm = normalize_apex(inst.graph, inst.apex);
                bool preserved =
                    l_from_bicycle(inst.graph) == l_from_bicycle(norm.output);
                bool replays =
                    replay_normalization(inst.graph, inst.apex, norm.trace) ==
                    norm.output;
                out.ok = rep.agree && preserved && replays;
                if (!out.ok)
                    out.failure["graph"] = graph_to_json(
                        {inst.graph, std::nullopt, inst.apex, std::nullopt});
                break;
            }
        }
    } catch (const error& e) {
        out.ok = false;
        out.failure["error"] = e.what();
    }
    if (!out.ok) {
        out.failure["kind"] = out.kind;
        out.failure["index"] = index;
    }
    return out;
}

int cmd_xcheck(int trials, int max_n, std::uint64_t seed) {
    if (trials < 0 || max_n < 2) throw usage_error("bad xcheck bounds");
    const int cap = tutte_cap_from_env();
    std::vector<XcheckOutcome> outcomes(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < trials; ++i)
        outcomes[i] = xcheck_instance(i, max_n, seed, cap);

    ojson kinds;
    int failures = 0;
    ojson failing = ojson::array();
    for (const XcheckOutcome& o : outcomes) {
        if (!kinds.contains(o.kind)) kinds[o.kind] = {{"count", 0}, {"failures", 0}};
        kinds[o.kind]["count"] = kinds[o.kind]["count"].get<int>() + 1;
        if (!o.ok) {
            ++failures;
            kinds[o.kind]["failures"] = kinds[o.kind]["failures"].get<int>() + 1;
            if (failing.size() < 10) failing.push_back(o.failure);
            std::cerr << "xcheck failure: " << o.failure.dump() << "\n";
        }
    }
    ojson out;
    out["trials"] = trials;
    out["max_n"] = max_n;
    out["seed"] = seed;
    out["disagreements"] = failures;
    out["kinds"] = kinds;
    if (failures > 0) out["failures"] = failing;
    emit(out);
    return failures == 0 ? 0 : 1;
}

int cmd_bench(std::vector<int> sizes, std::vector<std::string> methods,
              std::uint64_t seed, int instances) {
    if (sizes.empty() || methods.empty() || instances < 1)
        throw usage_error("bench needs sizes, methods and a positive instance count");
    BenchOptions opt;
    opt.sizes = std::move(sizes);
    opt.methods = std::move(methods);
    opt.seed = seed;
    opt.instances_per_size = instances;
    opt.tutte_cap = tutte_cap_from_env();
    try {
        std::cout << bench_csv(run_bench(opt));
    } catch (const precondition_error& e) {
        throw usage_error(e.what());
    }
    return 0;
}

int cmd_replay(const std::string& file) {
    ojson j = parse_text(read_input(file));
    ojson out;
    bool ok = false;
    if (j.contains("ops")) {
        ReductionTrace t = reduction_trace_from_json(j);
        Multigraph final = replay_reduction(t.initial, t.ops);
        int type3 = 0;
        for (const ReductionOp& op : t.ops)
            type3 += std::holds_alternative<TypeIIIOp>(op);
        ok = final == t.final_tree && type3 == t.type3_count;
        out["kind"] = "reduction";
        out["type3_count"] = type3;
    } else if (j.contains("steps")) {
        GraphFile input = graph_from_json(j.at("input"));
        int apex = j.at("apex").get<int>();
        NormalizationTrace t = norm_trace_from_json(j.at("steps"));
        Multigraph replayed = replay_normalization(input.graph, apex, t);
        GraphFile expected = graph_from_json(j.at("output"));
        ok = replayed == expected.graph;
        out["kind"] = "normalization";
    } else {
        throw parse_error("replay needs a trace with \"ops\" or \"steps\"");
    }
    out["ok"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link component numbers of plane multigraphs"};
    app.require_subcommand(1);

    std::string file, method = "auto", policy = "deterministic";
    bool want_cert = false, want_trace = false;
    std::uint64_t seed = 1;
    int n = 2, extra = 0, trials = 100, max_n = 20, instances = 5;
    std::optional<int> apex_flag;
    std::vector<int> sizes{10, 14, 18};
    std::vector<std::string> methods{"reduce", "tutte"};

    auto* compute = app.add_subcommand("compute", "compute l(G) for a graph file");
    compute->add_option("file", file)->required();
    compute->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "strand", "tutte", "bicycle", "reduce", "blocks"}));
    compute->add_flag("--certificate", want_cert);

    auto* suspend = app.add_subcommand("suspend", "suspend a tree or forest");
    suspend->add_option("file", file)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a tree to K2");
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->add_option("--policy", policy)
        ->check(CLI::IsMember({"deterministic", "random"}));
    reduce_cmd->add_option("--seed", seed);
    reduce_cmd->add_flag("--trace", want_trace);

    auto* normalize = app.add_subcommand("normalize", "normalize an apex graph");
    normalize->add_option("file", file)->required();
    int apex_value = -1;
    auto* apex_opt = normalize->add_option("--apex", apex_value);

    auto* gen = app.add_subcommand("gen", "generate seeded instances");
    gen->require_subcommand(1);
    auto* gen_tree = gen->add_subcommand("tree", "uniform random labeled tree");
    gen_tree->add_option("--n", n)->required();
    gen_tree->add_option("--seed", seed);
    auto* gen_plane = gen->add_subcommand("plane", "random plane graph with rotation");
    gen_plane->add_option("--n", n)->required();
    gen_plane->add_option("--extra-edges", extra);
    gen_plane->add_option("--seed", seed);

    auto* xcheck = app.add_subcommand("xcheck", "cross-validate all methods");
    xcheck->add_option("--trials", trials);
    xcheck->add_option("--max-n", max_n);
    xcheck->add_option("--seed", seed);

    auto* bench = app.add_subcommand("bench", "method timings as CSV");
    bench->add_option("--sizes", sizes)->delimiter(',');
    bench->add_option("--methods", methods)->delimiter(',');
    bench->add_option("--seed", seed);
    bench->add_option("--instances", instances);

    auto* replay = app.add_subcommand("replay", "re-apply a trace file");
    replay->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit 2, --help is 0
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(file, method, want_cert);
        if (app.got_subcommand(suspend)) return cmd_suspend(file);
        if (app.got_subcommand(reduce_cmd))
            return cmd_reduce(file, policy, seed, want_trace);
        if (app.got_subcommand(normalize)) {
            if (*apex_opt) apex_flag = apex_value;
            return cmd_normalize(file, apex_flag);
        }
        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(gen_tree)) return cmd_gen_tree(n, seed);
            return cmd_gen_plane(n, extra, seed);
        }
        if (app.got_subcommand(xcheck)) return cmd_xcheck(trials, max_n, seed);
        if (app.got_subcommand(bench))
            return cmd_bench(sizes, methods, seed, instances);
        if (app.got_subcommand(replay)) return cmd_replay(file);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
