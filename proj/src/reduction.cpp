#include "linkcomp/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "linkcomp/bicycle.hpp"
#include "linkcomp/blocks.hpp"
#include "linkcomp/rng.hpp"

namespace linkcomp {

namespace {

struct TreeView {
    std::vector<int> deg;
    std::vector<std::vector<int>> nbr;  // ascending
};

TreeView view_of(const Multigraph& t) {
    TreeView v;
    v.deg = t.degrees();
    v.nbr.resize(t.vertex_count());
    for (const Edge& e : t.edges()) {
        v.nbr[e.a].push_back(e.b);
        v.nbr[e.b].push_back(e.a);
    }
    for (auto& list : v.nbr) std::sort(list.begin(), list.end());
    return v;
}

void require_tree(const Multigraph& t) {
    if (!t.is_tree()) throw precondition_error("input is not a tree");
}

// Witness classification against a prebuilt view.
std::optional<ReductionOp> classify_with(const TreeView& v, int w) {
    if (w < 0 || w >= static_cast<int>(v.deg.size()))
        throw precondition_error("vertex id out of range");
    std::vector<int> leaf_nbrs, d2l_nbrs;
    for (int u : v.nbr[w]) {
        if (v.deg[u] == 1) leaf_nbrs.push_back(u);
        if (v.deg[u] == 2) {
            for (int z : v.nbr[u])
                if (z != w && v.deg[z] == 1) {
                    d2l_nbrs.push_back(u);
                    break;
                }
        }
    }
    auto leaf_of = [&](int u) {
        for (int z : v.nbr[u])
            if (z != w && v.deg[z] == 1) return z;
        return -1;
    };
    if (!leaf_nbrs.empty() && !d2l_nbrs.empty()) {
        int u = d2l_nbrs.front();
        return ReductionOp(TypeIOp{w, u, leaf_of(u)});
    }
    if (d2l_nbrs.size() >= 2 && v.deg[w] >= 3) {
        int u1 = d2l_nbrs[0], u2 = d2l_nbrs[1];
        return ReductionOp(
            TypeIIOp{w, u1, leaf_of(u1), u2, leaf_of(u2), v.deg[w] == 3});
    }
    if (leaf_nbrs.size() >= 2)
        return ReductionOp(TypeIIIOp{w, leaf_nbrs.front()});
    return std::nullopt;
}

}  // namespace

std::optional<int> find_contraction_site(const Multigraph& tree) {
    require_tree(tree);
    TreeView v = view_of(tree);
    for (int w = 0; w < tree.vertex_count(); ++w) {
        if (v.deg[w] != 2) continue;
        if (v.deg[v.nbr[w][0]] >= 2 && v.deg[v.nbr[w][1]] >= 2) return w;
    }
    return std::nullopt;
}

std::optional<ReductionOp> classify_op(const Multigraph& tree, int w) {
    require_tree(tree);
    return classify_with(view_of(tree), w);
}

std::optional<VertexType> classify_type(const Multigraph& tree, int w) {
    auto op = classify_op(tree, w);
    if (!op) return std::nullopt;
    if (std::holds_alternative<TypeIOp>(*op)) return VertexType::type_i;
    if (std::holds_alternative<TypeIIOp>(*op)) return VertexType::type_ii;
    return VertexType::type_iii;
}

namespace {

int edge_between(const Multigraph& g, int a, int b) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)) return e;
    }
    throw precondition_error("required edge is missing");
}

Multigraph delete_vertices(Multigraph g, std::vector<int> victims) {
    std::sort(victims.begin(), victims.end(), std::greater<int>());
    for (int v : victims) g = g.delete_vertex(v);
    return g;
}

void check_result(const Multigraph& g) {
    if (g.vertex_count() < 2)
        throw precondition_error("rewrite would leave fewer than two vertices");
    if (!g.is_tree()) throw internal_error("rewrite left a non-tree");
}

}  // namespace

Multigraph apply_op(const Multigraph& tree, const ReductionOp& op) {
    require_tree(tree);
    TreeView v = view_of(tree);

    if (const auto* c = std::get_if<ContractOp>(&op)) {
        if (v.deg[c->v] != 2) throw precondition_error("contract core is not degree 2");
        std::vector<int> nb = v.nbr[c->v];
        if (std::minmax(c->x, c->y) != std::minmax(nb[0], nb[1]))
            throw precondition_error("contract neighbors do not match");
        if (v.deg[c->x] < 2 || v.deg[c->y] < 2)
            throw precondition_error("contract neighbor is a leaf");
        int e1 = edge_between(tree, c->v, c->x);
        Multigraph g1 = tree.contract_edge(e1);
        int merged = std::min(c->v, c->x);
        int hi = std::max(c->v, c->x);
        int y = c->y > hi ? c->y - 1 : c->y;
        Multigraph g2 = g1.contract_edge(edge_between(g1, merged, y));
        check_result(g2);
        return g2;
    }
    if (const auto* t1 = std::get_if<TypeIOp>(&op)) {
        if (t1->w == t1->u || t1->u == t1->leaf || t1->w == t1->leaf)
            throw precondition_error("TypeI vertices must be distinct");
        edge_between(tree, t1->w, t1->u);
        edge_between(tree, t1->u, t1->leaf);
        if (v.deg[t1->u] != 2 || v.deg[t1->leaf] != 1)
            throw precondition_error("TypeI degree conditions violated");
        bool w_has_leaf = false;
        for (int z : v.nbr[t1->w]) w_has_leaf |= v.deg[z] == 1;
        if (!w_has_leaf)
            throw precondition_error("TypeI pivot has no leaf neighbor");
        Multigraph g = delete_vertices(tree, {t1->u, t1->leaf});
        check_result(g);
        return g;
    }
    if (const auto* t2 = std::get_if<TypeIIOp>(&op)) {
        std::vector<int> ids = {t2->w, t2->u1, t2->l1, t2->u2, t2->l2};
        std::set<int> uniq(ids.begin(), ids.end());
        if (uniq.size() != ids.size())
            throw precondition_error("TypeII vertices must be distinct");
        edge_between(tree, t2->w, t2->u1);
        edge_between(tree, t2->u1, t2->l1);
        edge_between(tree, t2->w, t2->u2);
        edge_between(tree, t2->u2, t2->l2);
        if (v.deg[t2->u1] != 2 || v.deg[t2->u2] != 2 || v.deg[t2->l1] != 1 ||
            v.deg[t2->l2] != 1)
            throw precondition_error("TypeII degree conditions violated");
        if (v.deg[t2->w] < 3)
            throw precondition_error("TypeII pivot needs degree at least 3");
        if (t2->w_deleted != (v.deg[t2->w] == 3))
            throw precondition_error("TypeII w_deleted flag inconsistent");
        if (v.deg[t2->w] == 3) {
            for (int z : v.nbr[t2->w])
                if (z != t2->u1 && z != t2->u2 && v.deg[z] == 1)
                    throw precondition_error(
                        "TypeII with degree-3 pivot and leaf third neighbor");
        }
        std::vector<int> victims = {t2->u1, t2->l1, t2->u2, t2->l2};
        if (t2->w_deleted) victims.push_back(t2->w);
        Multigraph g = delete_vertices(tree, std::move(victims));
        check_result(g);
        return g;
    }
    const auto& t3 = std::get<TypeIIIOp>(op);
    edge_between(tree, t3.w, t3.deleted_leaf);
    if (v.deg[t3.deleted_leaf] != 1)
        throw precondition_error("TypeIII target is not a leaf");
    int leaf_nbrs = 0;
    for (int z : v.nbr[t3.w]) leaf_nbrs += v.deg[z] == 1;
    if (leaf_nbrs < 2)
        throw precondition_error("TypeIII pivot needs two leaf neighbors");
    Multigraph g = tree.delete_vertex(t3.deleted_leaf);
    check_result(g);
    return g;
}

Multigraph replay_reduction(const Multigraph& initial,
                            const std::vector<ReductionOp>& ops) {
    Multigraph g = initial;
    for (const ReductionOp& op : ops) g = apply_op(g, op);
    return g;
}

// ---------------------------------------------------------------------------
// Reduction engine.  Vertices live in stable slots; a merged class carries
// the minimum slot of its members.  Compaction preserves relative order, so
// the current id of a class is the number of live minimum-slots below its
// own, a Fenwick prefix.  Leafness and leaf-adjacency are incremental
// counters, which keeps each rewrite local; the whole run is near-linear and
// clears the 10^4-vertex performance bound with two orders of magnitude to
// spare, where per-step rescans would be quadratic.
// ---------------------------------------------------------------------------

namespace {

struct Fenwick {
    explicit Fenwick(int n) : t(n + 1, 0) {
        for (int i = 1; i <= n; ++i) t[i] = i & -i;  // all slots live
    }
    void remove(int i) {
        for (++i; i < static_cast<int>(t.size()); i += i & -i) --t[i];
    }
    int prefix(int i) const {  // live count in slots [0, i)
        int s = 0;
        for (; i > 0; i -= i & -i) s += t[i];
        return s;
    }
    std::vector<int> t;
};

class ReduceEngine {
  public:
    explicit ReduceEngine(const Multigraph& tree)
        : n_(tree.vertex_count()), adj_(n_), min_slot_(n_), root_at_(n_),
          nleaf_(n_, 0), nd2l_(n_, 0), leaf_f_(n_, 0), d2l_f_(n_, 0),
          fen_(n_), live_(n_) {
        for (int v = 0; v < n_; ++v) {
            min_slot_[v] = v;
            root_at_[v] = v;
        }
        for (int e = 0; e < tree.edge_count(); ++e) {
            const Edge& ed = tree.edge(e);
            adj_[ed.a].emplace(ed.b, 1);  // edge record starts at ed.a
            adj_[ed.b].emplace(ed.a, 0);
        }
        for (int v = 0; v < n_; ++v) leaf_f_[v] = deg(v) == 1;
        for (int v = 0; v < n_; ++v)
            for (auto [nb, fwd] : adj_[v]) {
                (void)fwd;
                nleaf_[v] += leaf_f_[nb];
            }
        for (int v = 0; v < n_; ++v) d2l_f_[v] = deg(v) == 2 && nleaf_[v] >= 1;
        for (int v = 0; v < n_; ++v)
            for (auto [nb, fwd] : adj_[v]) {
                (void)fwd;
                nd2l_[v] += d2l_f_[nb];
            }
        for (int v = 0; v < n_; ++v) refresh_sets(v);
    }

    ReductionTrace run(const Multigraph& initial, const ReducePolicy& policy) {
        SplitMix64 rng(policy.seed);
        const bool random = policy.mode == ReducePolicy::Mode::seeded_random;
        std::vector<ReductionOp> ops;
        int type3 = 0;
        while (live_ > 2) {
            if (!sites_.empty()) {
                int key = random ? *std::next(sites_.begin(),
                                              rng.next_below(sites_.size()))
                                 : *sites_.begin();
                ops.push_back(contract_at(root_at_[key]));
            } else if (!classifiable_.empty()) {
                int key = random ? *std::next(classifiable_.begin(),
                                              rng.next_below(classifiable_.size()))
                                 : *classifiable_.begin();
                ReductionOp op = rewrite_at(root_at_[key]);
                type3 += std::holds_alternative<TypeIIIOp>(op);
                ops.push_back(std::move(op));
            } else {
                throw internal_error(
                    "no rewrite available for a non-K2 tree; this contradicts "
                    "the unavoidability of the three vertex types");
            }
        }
        return {initial, std::move(ops), final_k2(), type3};
    }

  private:
    int deg(int r) const { return static_cast<int>(adj_[r].size()); }
    int cur_id(int r) const { return fen_.prefix(min_slot_[r]); }

    void refresh_sets(int r) {
        const int key = min_slot_[r];
        const bool site = deg(r) == 2 && nleaf_[r] == 0;
        const bool cls = (nleaf_[r] >= 1 && nd2l_[r] >= 1) ||
                         (nd2l_[r] >= 2 && deg(r) >= 3) || nleaf_[r] >= 2;
        if (site)
            sites_.insert(key);
        else
            sites_.erase(key);
        if (cls)
            classifiable_.insert(key);
        else
            classifiable_.erase(key);
    }

    void refresh_flags(int r) {
        const bool now_leaf = deg(r) == 1;
        if (now_leaf != static_cast<bool>(leaf_f_[r])) {
            leaf_f_[r] = now_leaf;
            for (auto [nb, fwd] : adj_[r]) {
                (void)fwd;
                nleaf_[nb] += now_leaf ? 1 : -1;
                refresh_flags(nb);
            }
        }
        const bool now_d2l = deg(r) == 2 && nleaf_[r] >= 1;
        if (now_d2l != static_cast<bool>(d2l_f_[r])) {
            d2l_f_[r] = now_d2l;
            for (auto [nb, fwd] : adj_[r]) {
                (void)fwd;
                nd2l_[nb] += now_d2l ? 1 : -1;
                refresh_sets(nb);
            }
        }
        refresh_sets(r);
    }

    void drop_class(int r) {
        sites_.erase(min_slot_[r]);
        classifiable_.erase(min_slot_[r]);
        fen_.remove(min_slot_[r]);
        root_at_[min_slot_[r]] = -1;
        --live_;
    }

    void remove_vertex(int r) {
        std::vector<int> nbs;
        nbs.reserve(adj_[r].size());
        for (auto [nb, fwd] : adj_[r]) {
            (void)fwd;
            nbs.push_back(nb);
        }
        const bool was_leaf = leaf_f_[r], was_d2l = d2l_f_[r];
        for (int nb : nbs) adj_[nb].erase(r);
        adj_[r].clear();
        drop_class(r);
        for (int nb : nbs) {
            if (was_leaf) --nleaf_[nb];
            if (was_d2l) --nd2l_[nb];
            refresh_flags(nb);
        }
    }

    // Move b's adjacency into a, fixing counters on both sides; candidate
    // keys and slot bookkeeping are the caller's job.  Returns the physical
    // survivor.
    int absorb(int a, int b) {
        if (adj_[a].size() < adj_[b].size()) std::swap(a, b);
        const bool b_leaf = leaf_f_[b], b_d2l = d2l_f_[b];
        std::vector<std::pair<int, char>> moved(adj_[b].begin(), adj_[b].end());
        adj_[b].clear();
        for (auto [nb, fwd] : moved) {
            adj_[nb].erase(b);
            if (!adj_[nb].emplace(a, !static_cast<bool>(fwd)).second ||
                !adj_[a].emplace(nb, fwd).second)
                throw internal_error("merge created a parallel edge in a tree");
            // nb swapped neighbor b for a; both sides see the stored flags,
            // and refresh_flags below propagates any flips.
            if (b_leaf) --nleaf_[nb];
            if (b_d2l) --nd2l_[nb];
            if (leaf_f_[a]) ++nleaf_[nb];
            if (d2l_f_[a]) ++nd2l_[nb];
            nleaf_[a] += leaf_f_[nb];
            nd2l_[a] += d2l_f_[nb];
        }
        refresh_flags(a);
        for (auto [nb, fwd] : moved) {
            (void)fwd;
            refresh_flags(nb);
        }
        return a;
    }

    std::vector<int> neighbors_by_id(int r) const {
        std::vector<int> nbs;
        nbs.reserve(adj_[r].size());
        for (auto [nb, fwd] : adj_[r]) {
            (void)fwd;
            nbs.push_back(nb);
        }
        std::sort(nbs.begin(), nbs.end(),
                  [&](int p, int q) { return min_slot_[p] < min_slot_[q]; });
        return nbs;
    }

    // The unique neighbor of a degree-2 class u besides w; always its leaf
    // when u carries the d2l flag.
    int other_neighbor(int u, int w) const {
        for (auto [nb, fwd] : adj_[u]) {
            (void)fwd;
            if (nb != w) return nb;
        }
        throw internal_error("degree-2 class without a second neighbor");
    }

    // Merge x - site - y into one class.  The pure contract chain keeps the
    // lowest of the three current ids, so the surviving class carries the
    // minimum of the three slots, the site's included.
    ReductionOp contract_at(int site) {
        std::vector<int> nbs = neighbors_by_id(site);
        const int x = nbs[0], y = nbs[1];
        ContractOp op{cur_id(site), cur_id(x), cur_id(y)};

        const int ms = min_slot_[site], mx = min_slot_[x], my = min_slot_[y];
        const bool site_leaf = leaf_f_[site], site_d2l = d2l_f_[site];
        adj_[x].erase(site);
        adj_[y].erase(site);
        adj_[site].clear();
        for (int nb : {x, y}) {
            if (site_leaf) --nleaf_[nb];
            if (site_d2l) --nd2l_[nb];
            refresh_flags(nb);
        }
        for (int slot : {ms, mx, my}) {
            sites_.erase(slot);
            classifiable_.erase(slot);
        }
        const int keep = std::min({ms, mx, my});
        for (int slot : {ms, mx, my}) {
            if (slot == keep) continue;
            fen_.remove(slot);
            root_at_[slot] = -1;
        }
        live_ -= 2;
        // both halves key their set updates to the final slot during absorb
        min_slot_[x] = keep;
        min_slot_[y] = keep;
        int survivor = absorb(x, y);
        root_at_[keep] = survivor;
        refresh_sets(survivor);
        return op;
    }

    ReductionOp rewrite_at(int w) {
        // lowest-id witnesses in one pass; no sort, hubs stay cheap
        int low_leaf = -1, low_d2l = -1, next_d2l = -1;
        for (auto [nb, fwd] : adj_[w]) {
            (void)fwd;
            if (leaf_f_[nb] &&
                (low_leaf < 0 || min_slot_[nb] < min_slot_[low_leaf]))
                low_leaf = nb;
            if (d2l_f_[nb]) {
                if (low_d2l < 0 || min_slot_[nb] < min_slot_[low_d2l]) {
                    next_d2l = low_d2l;
                    low_d2l = nb;
                } else if (next_d2l < 0 || min_slot_[nb] < min_slot_[next_d2l]) {
                    next_d2l = nb;
                }
            }
        }
        if (nleaf_[w] >= 1 && nd2l_[w] >= 1) {
            int leaf = other_neighbor(low_d2l, w);
            TypeIOp op{cur_id(w), cur_id(low_d2l), cur_id(leaf)};
            remove_vertex(leaf);
            remove_vertex(low_d2l);
            return op;
        }
        if (nd2l_[w] >= 2 && deg(w) >= 3) {
            int l1 = other_neighbor(low_d2l, w), l2 = other_neighbor(next_d2l, w);
            const bool drop_w = deg(w) == 3;
            TypeIIOp op{cur_id(w), cur_id(low_d2l), cur_id(l1),
                        cur_id(next_d2l), cur_id(l2), drop_w};
            remove_vertex(l1);
            remove_vertex(low_d2l);
            remove_vertex(l2);
            remove_vertex(next_d2l);
            if (drop_w) remove_vertex(w);
            return op;
        }
        if (nleaf_[w] >= 2) {
            TypeIIIOp op{cur_id(w), cur_id(low_leaf)};
            remove_vertex(low_leaf);
            return op;
        }
        throw internal_error("classified vertex admits no rewrite");
    }

    Multigraph final_k2() const {
        std::vector<int> roots;
        for (int s = 0; s < n_; ++s)
            if (root_at_[s] != -1) roots.push_back(root_at_[s]);
        if (roots.size() != 2)
            throw internal_error("reduction did not end at two vertices");
        int p = roots[0], q = roots[1];  // min_slot order: p has id 0
        auto it = adj_[p].find(q);
        if (it == adj_[p].end() || adj_[p].size() != 1 || adj_[q].size() != 1)
            throw internal_error("reduction did not end at K2");
        // Preserve the surviving edge's endpoint orientation.
        return it->second ? Multigraph::build(2, {{0, 1}})
                          : Multigraph::build(2, {{1, 0}});
    }

    int n_;
    std::vector<std::map<int, char>> adj_;  // neighbor root -> edge starts here
    std::vector<int> min_slot_;
    std::vector<int> root_at_;
    std::vector<int> nleaf_, nd2l_;
    std::vector<char> leaf_f_, d2l_f_;
    Fenwick fen_;
    int live_;
    std::set<int> sites_, classifiable_;
};

}  // namespace

ReductionTrace reduce(const Multigraph& tree, const ReducePolicy& policy) {
    require_tree(tree);
    if (tree.edge_count() < 1)
        throw precondition_error("reduce needs a tree with at least one edge");
    if (tree.vertex_count() == 2) return {tree, {}, tree, 0};
    ReduceEngine engine(tree);
    return engine.run(tree, policy);
}

ReducedCount l_suspended(const Multigraph& tree, const ReducePolicy& policy) {
    ReductionTrace trace = reduce(tree, policy);
    return {trace.type3_count + 1, std::move(trace)};
}

int l_suspended_forest(const Multigraph& forest) {
    if (!forest.is_forest()) throw precondition_error("input is not a forest");
    auto comps = forest.connected_components();
    int total = 0;
    for (const auto& comp : comps) {
        if (comp.size() < 2)
            throw precondition_error("every forest component needs at least one edge");
        total += l_suspended(forest.induced(comp)).l;
    }
    return total - (static_cast<int>(comps.size()) - 1);
}

Multigraph edge_subgraph(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::vector<int> verts;
    for (int e : edge_ids) {
        verts.push_back(g.edge(e).a);
        verts.push_back(g.edge(e).b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    for (int e : edge_ids)
        edges.push_back({index[g.edge(e).a], index[g.edge(e).b]});
    return Multigraph(static_cast<int>(verts.size()), std::move(edges));
}

int l_by_blocks(const Multigraph& g,
                const std::function<int(const Multigraph&)>& block_l) {
    if (g.vertex_count() == 0)
        throw precondition_error("empty graph has no block decomposition");
    if (g.component_count() != 1)
        throw precondition_error("l_by_blocks needs a connected graph");
    BlockDecomposition d = blocks(g);
    int total = 0;
    for (const auto& blk : d.blocks) total += block_l(edge_subgraph(g, blk));
    return total - (static_cast<int>(d.blocks.size()) - 1);
}

int l_by_blocks(const Multigraph& g) {
    return l_by_blocks(g, [](const Multigraph& b) { return l_from_bicycle(b); });
}

}  // namespace linkcomp
