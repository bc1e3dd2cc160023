#include "linkcomp/suspension.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace linkcomp {

namespace {

Suspension suspend(const Multigraph& base, bool require_tree) {
    if (require_tree) {
        if (!base.is_tree()) throw precondition_error("base is not a tree");
    } else {
        if (!base.is_forest()) throw precondition_error("base is not a forest");
    }
    std::vector<int> deg = base.degrees();
    for (const auto& comp : base.connected_components())
        if (comp.size() < 2)
            throw precondition_error("every base component needs at least one edge");

    Suspension s;
    s.apex = base.vertex_count();
    s.graph = base.add_vertices(1);
    for (int v = 0; v < base.vertex_count(); ++v) {
        s.base_vertices.push_back(v);
        if (deg[v] == 1) {
            s.leaf_edges.emplace_back(v, s.graph.edge_count());
            s.graph = s.graph.add_edge(v, s.apex);
        }
    }
    return s;
}

}  // namespace

Suspension suspend_tree(const Multigraph& tree) { return suspend(tree, true); }

Suspension suspend_forest(const Multigraph& forest) { return suspend(forest, false); }

RotationSystem embed_suspension(const Multigraph& graph, int apex,
                                const RotationSystem& base_rot) {
    if (apex < 0 || apex >= graph.vertex_count())
        throw precondition_error("apex out of range");

    // Split edges into base edges and apex edges; map base vertices and
    // edges onto the standalone base tree (same relative order).
    const int n = graph.vertex_count();
    auto to_base = [&](int v) { return v > apex ? v - 1 : v; };
    auto from_base = [&](int v) { return v >= apex ? v + 1 : v; };
    std::vector<int> base_edge_of(graph.edge_count(), -1);
    std::map<int, int> apex_edge_of_leaf;
    int base_edges = 0;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const Edge& ed = graph.edge(e);
        if (ed.a == apex || ed.b == apex) {
            int leaf = ed.a == apex ? ed.b : ed.a;
            if (leaf == apex)
                throw precondition_error("loops at the apex cannot be embedded");
            if (!apex_edge_of_leaf.emplace(leaf, e).second)
                throw precondition_error("apex joined twice to the same vertex");
        } else {
            base_edge_of[e] = base_edges++;
        }
    }
    Multigraph base = graph.delete_vertex(apex);
    if (!base.is_tree())
        throw precondition_error("graph minus apex is not a tree");
    if (base.vertex_count() < 2)
        throw precondition_error("base tree needs at least one edge");
    std::vector<int> base_deg = base.degrees();
    for (auto [leaf, e] : apex_edge_of_leaf) {
        (void)e;
        if (base_deg[to_base(leaf)] != 1)
            throw precondition_error("apex joined to a non-leaf");
    }
    for (int v = 0; v < base.vertex_count(); ++v)
        if (base_deg[v] == 1 && !apex_edge_of_leaf.count(from_base(v)))
            throw precondition_error("leaf not joined to the apex");

    // Graph edge id for base edge k.
    std::vector<int> graph_edge_of_base(base_edges);
    for (int e = 0; e < graph.edge_count(); ++e)
        if (base_edge_of[e] >= 0) graph_edge_of_base[base_edge_of[e]] = e;

    // The base tree bounds a single face; its walk visits each leaf's dart
    // exactly once, giving the cyclic order in which the apex sees them.
    auto orbits = face_orbits(base, base_rot);
    if (orbits.size() != 1)
        throw internal_error("tree face walk is not a single orbit");
    std::vector<int> leaf_cycle;  // graph ids, in face-walk order
    for (Dart d : orbits.front()) {
        int t = base_rot.tail(d);
        if (base_deg[t] == 1) leaf_cycle.push_back(from_base(t));
    }

    auto base_dart_to_graph = [&](Dart d) {
        return 2 * graph_edge_of_base[dart_edge(d)] + (d & 1);
    };

    std::vector<std::vector<Dart>> orders(n);
    for (int bv = 0; bv < base.vertex_count(); ++bv) {
        int gv = from_base(bv);
        for (Dart d : base_rot.vertex_orders()[bv])
            orders[gv].push_back(base_dart_to_graph(d));
        if (base_deg[bv] == 1) {
            int e = apex_edge_of_leaf.at(gv);
            Dart leaf_dart = graph.edge(e).a == gv ? 2 * e : 2 * e + 1;
            orders[gv].push_back(leaf_dart);  // next to the single tree dart
        }
    }
    for (auto it = leaf_cycle.rbegin(); it != leaf_cycle.rend(); ++it) {
        int e = apex_edge_of_leaf.at(*it);
        Dart apex_dart = graph.edge(e).a == apex ? 2 * e : 2 * e + 1;
        orders[apex].push_back(apex_dart);
    }
    RotationSystem rot = RotationSystem::from_orders(graph, std::move(orders));
    validate_genus0(graph, rot);
    return rot;
}

RotationSystem embed_suspension(const Multigraph& graph, int apex) {
    Multigraph base = graph.delete_vertex(apex);
    return embed_suspension(graph, apex, RotationSystem::default_for(base));
}

std::pair<Suspension, RotationSystem> suspend_tree_embedded(
    const Multigraph& tree, const RotationSystem& tree_rot) {
    Suspension s = suspend_tree(tree);
    // The base keeps its vertex and edge ids inside the suspension, so the
    // supplied tree rotation carries over unchanged.
    RotationSystem rot = embed_suspension(s.graph, s.apex, tree_rot);
    return {std::move(s), std::move(rot)};
}

// -- apex normalization ------------------------------------------------------

namespace {

// Degree of u inside the base tree (edges avoiding the apex).
int tree_degree(const Multigraph& g, int apex, int u) {
    int d = 0;
    for (const Edge& e : g.edges()) {
        if (e.a == apex || e.b == apex) continue;
        if (e.a == u) ++d;
        if (e.b == u) ++d;
    }
    return d;
}

int apex_multiplicity(const Multigraph& g, int apex, int u) {
    int k = 0;
    for (const Edge& e : g.edges()) {
        bool touches_apex = (e.a == apex) != (e.b == apex);
        if (touches_apex && (e.a == u || e.b == u)) ++k;
    }
    return k;
}

}  // namespace

NormalizeResult normalize_apex(const Multigraph& g, int apex) {
    if (apex < 0 || apex >= g.vertex_count())
        throw precondition_error("apex out of range");
    {
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g.edges()) {
            if (e.a == apex || e.b == apex || e.a == e.b) continue;
            if (!seen.insert(std::minmax(e.a, e.b)).second)
                throw precondition_error("parallel edges not incident to the apex");
        }
    }
    if (!g.delete_vertex(apex).is_tree())
        throw precondition_error("graph minus apex is not a tree");

    NormalizeResult res;
    Multigraph work = g;
    int v = apex;

    auto record = [&](NormStep step) { res.trace.steps.push_back(std::move(step)); };

    // (a) loops at the apex
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < work.edge_count(); ++e) {
            if (work.edge(e).a == v && work.edge(e).b == v) {
                record(LoopDeletionStep{e});
                work = work.delete_edge(e);
                changed = true;
                break;
            }
        }
    }

    // (b) cancel parallel apex pairs until every multiplicity is 0 or 1
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < work.vertex_count() && !changed; ++x) {
            if (x == v) continue;
            if (apex_multiplicity(work, v, x) < 2) continue;
            int lo = -1, hi = -1;
            for (int e = 0; e < work.edge_count() && hi == -1; ++e) {
                bool touches = (work.edge(e).a == v && work.edge(e).b == x) ||
                               (work.edge(e).b == v && work.edge(e).a == x);
                if (!touches) continue;
                (lo == -1 ? lo : hi) = e;
            }
            record(ParallelPairDeletionStep{x, lo, hi});
            work = work.delete_edge(hi).delete_edge(lo);
            changed = true;
        }
    }

    // (c) untwist-contract tree leaves not joined to the apex; such a leaf
    // has whole-graph degree one, so contracting its edge is a plain
    // untwist.
    for (bool changed = true; changed;) {
        changed = false;
        if (work.vertex_count() <= 2) break;  // base is a single vertex
        for (int u = 0; u < work.vertex_count() && !changed; ++u) {
            if (u == v) continue;
            if (tree_degree(work, v, u) != 1) continue;
            if (apex_multiplicity(work, v, u) != 0) continue;
            int tree_edge = -1;
            for (int e = 0; e < work.edge_count(); ++e) {
                const Edge& ed = work.edge(e);
                if (ed.a == v || ed.b == v) continue;
                if (ed.a == u || ed.b == u) {
                    tree_edge = e;
                    break;
                }
            }
            record(LeafUntwistContractionStep{tree_edge});
            int gone = std::max(work.edge(tree_edge).a, work.edge(tree_edge).b);
            work = work.contract_edge(tree_edge);
            if (gone < v) --v;
            changed = true;
        }
    }

    if (work.vertex_count() == 2) {
        // Base collapsed to a single vertex.
        res.degenerate_l = work.edge_count() == 0 ? 2 : 1;
        res.output = std::move(work);
        res.output_apex = v;
        return res;
    }

    // (d) divert apex edges that end at interior vertices
    std::vector<int> attach;
    for (int x = 0; x < work.vertex_count(); ++x) {
        if (x == v) continue;
        if (apex_multiplicity(work, v, x) == 1 && tree_degree(work, v, x) >= 2)
            attach.push_back(x);
    }
    for (int x : attach) {
        const int p = work.vertex_count();
        const int q = p + 1;
        record(PathAttachmentStep{x, p, q});
        work = work.add_vertices(2).add_edge(x, p).add_edge(p, q);
        int old_edge = -1;
        for (int e = 0; e < work.edge_count(); ++e) {
            const Edge& ed = work.edge(e);
            if ((ed.a == v && ed.b == x) || (ed.b == v && ed.a == x)) {
                old_edge = e;
                break;
            }
        }
        work = work.delete_edge(old_edge).add_edge(v, q);
    }

    // Assemble the suspended tree.
    Suspension s;
    s.graph = work;
    s.apex = v;
    std::vector<int> deg_tree(work.vertex_count(), 0);
    for (int u = 0; u < work.vertex_count(); ++u)
        if (u != v) deg_tree[u] = tree_degree(work, v, u);
    for (int u = 0; u < work.vertex_count(); ++u) {
        if (u == v) continue;
        s.base_vertices.push_back(u);
        int mult = apex_multiplicity(work, v, u);
        if (deg_tree[u] == 1) {
            if (mult != 1)
                throw internal_error("normalized leaf not joined once to apex");
            for (int e = 0; e < work.edge_count(); ++e) {
                const Edge& ed = work.edge(e);
                if ((ed.a == v && ed.b == u) || (ed.b == v && ed.a == u)) {
                    s.leaf_edges.emplace_back(u, e);
                    break;
                }
            }
        } else if (mult != 0) {
            throw internal_error("normalized apex still joined to an interior vertex");
        }
    }
    res.output = work;
    res.output_apex = v;
    res.suspended = std::move(s);
    return res;
}

Multigraph replay_normalization(const Multigraph& g, int apex,
                                const NormalizationTrace& trace) {
    Multigraph work = g;
    int v = apex;
    for (const NormStep& step : trace.steps) {
        if (const auto* loop = std::get_if<LoopDeletionStep>(&step)) {
            if (!work.is_loop(loop->edge))
                throw precondition_error("replay: LoopDeletion names a non-loop");
            work = work.delete_edge(loop->edge);
        } else if (const auto* pair = std::get_if<ParallelPairDeletionStep>(&step)) {
            const Edge& e1 = work.edge(pair->edge_lo);
            const Edge& e2 = work.edge(pair->edge_hi);
            if (std::minmax(e1.a, e1.b) != std::minmax(e2.a, e2.b) ||
                (e1.a != pair->vertex && e1.b != pair->vertex))
                throw precondition_error("replay: ParallelPairDeletion mismatch");
            work = work.delete_edge(pair->edge_hi).delete_edge(pair->edge_lo);
        } else if (const auto* untwist = std::get_if<LeafUntwistContractionStep>(&step)) {
            const Edge& ed = work.edge(untwist->edge);
            int gone = std::max(ed.a, ed.b);
            work = work.contract_edge(untwist->edge);
            if (gone < v) --v;
        } else if (const auto* path = std::get_if<PathAttachmentStep>(&step)) {
            if (path->p != work.vertex_count() || path->q != path->p + 1)
                throw precondition_error("replay: PathAttachment ids out of order");
            work = work.add_vertices(2).add_edge(path->vertex, path->p)
                       .add_edge(path->p, path->q);
            int old_edge = -1;
            for (int e = 0; e < work.edge_count(); ++e) {
                const Edge& ed = work.edge(e);
                if ((ed.a == v && ed.b == path->vertex) ||
                    (ed.b == v && ed.a == path->vertex)) {
                    old_edge = e;
                    break;
                }
            }
            if (old_edge < 0)
                throw precondition_error("replay: no apex edge to divert");
            work = work.delete_edge(old_edge).add_edge(v, path->q);
        }
    }
    return work;
}

}  // namespace linkcomp
