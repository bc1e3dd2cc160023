#include "linkcomp/embedding.hpp"

#include <algorithm>

#include "linkcomp/rng.hpp"

namespace linkcomp {

void RotationSystem::index(const Multigraph& g) {
    const int nd = 2 * g.edge_count();
    tail_.resize(nd);
    for (int e = 0; e < g.edge_count(); ++e) {
        tail_[2 * e] = g.edge(e).a;
        tail_[2 * e + 1] = g.edge(e).b;
    }
    succ_.assign(nd, -1);
    pred_.assign(nd, -1);
    std::vector<char> seen(nd, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& cyc = orders_[v];
        for (size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            if (d < 0 || d >= nd) throw precondition_error("rotation lists an unknown dart");
            if (seen[d]) throw precondition_error("rotation repeats a dart");
            seen[d] = 1;
            if (tail_[d] != v)
                throw precondition_error("rotation places a dart away from its tail");
            succ_[d] = cyc[(i + 1) % cyc.size()];
            pred_[d] = cyc[(i + cyc.size() - 1) % cyc.size()];
        }
    }
    for (int d = 0; d < nd; ++d)
        if (!seen[d]) throw precondition_error("rotation omits a dart");
}

RotationSystem RotationSystem::default_for(const Multigraph& g) {
    RotationSystem r;
    r.orders_.resize(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        r.orders_[g.edge(e).a].push_back(2 * e);
        r.orders_[g.edge(e).b].push_back(2 * e + 1);
    }
    r.index(g);
    return r;
}

RotationSystem RotationSystem::random_for(const Multigraph& g, std::uint64_t seed) {
    RotationSystem r = default_for(g);
    SplitMix64 rng(seed);
    for (auto& cyc : r.orders_) {
        for (size_t i = cyc.size(); i > 1; --i)
            std::swap(cyc[i - 1], cyc[rng.next_below(i)]);
    }
    r.succ_.clear();
    r.pred_.clear();
    r.tail_.clear();
    r.index(g);
    return r;
}

RotationSystem RotationSystem::from_orders(const Multigraph& g,
                                           std::vector<std::vector<Dart>> orders) {
    if (static_cast<int>(orders.size()) != g.vertex_count())
        throw precondition_error("rotation must list every vertex");
    RotationSystem r;
    r.orders_ = std::move(orders);
    r.index(g);
    return r;
}

RotationSystem RotationSystem::mirrored() const {
    RotationSystem r(*this);
    for (auto& cyc : r.orders_) std::reverse(cyc.begin(), cyc.end());
    const int nd = dart_count();
    for (Dart d = 0; d < nd; ++d) {
        r.succ_[d] = pred_[d];
        r.pred_[d] = succ_[d];
    }
    return r;
}

std::vector<std::vector<Dart>> face_orbits(const Multigraph& g,
                                           const RotationSystem& rot) {
    const int nd = 2 * g.edge_count();
    std::vector<char> seen(nd, 0);
    std::vector<std::vector<Dart>> orbits;
    for (Dart start = 0; start < nd; ++start) {
        if (seen[start]) continue;
        std::vector<Dart> orbit;
        Dart d = start;
        do {
            seen[d] = 1;
            orbit.push_back(d);
            d = rot.succ(mate(d));
        } while (d != start);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

int validate_genus0(const Multigraph& g, const RotationSystem& rot) {
    auto comps = g.connected_components();
    std::vector<int> comp_of(g.vertex_count());
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

    std::vector<int> edges_in(comps.size(), 0), faces_in(comps.size(), 0);
    for (int e = 0; e < g.edge_count(); ++e) ++edges_in[comp_of[g.edge(e).a]];
    for (const auto& orbit : face_orbits(g, rot))
        ++faces_in[comp_of[rot.tail(orbit.front())]];

    int total = 0;
    for (size_t c = 0; c < comps.size(); ++c) {
        int v = static_cast<int>(comps[c].size());
        int f = edges_in[c] == 0 ? 1 : faces_in[c];
        int euler = v - edges_in[c] + f;
        if (euler != 2) throw genus_error(comps[c].front(), euler);
        total += f;
    }
    return total;
}

StrandCount strand_components(const Multigraph& g, const RotationSystem& rot) {
    validate_genus0(g, rot);

    const int nd = 2 * g.edge_count();
    // The two transitions available at each corner arc: crossing the medial
    // vertex of the corner's own edge, or of the next edge around the tail.
    auto cross_own = [&](Dart d) { return mate(d); };
    auto cross_next = [&](Dart d) { return rot.pred(mate(rot.succ(d))); };

    StrandCount out;
    out.partition.strands.clear();
    std::vector<char> seen(nd, 0);
    for (Dart start = 0; start < nd; ++start) {
        if (seen[start]) continue;
        std::vector<Dart> walk;
        Dart d = start;
        bool own = true;  // alternate the two transition kinds
        do {
            seen[d] = 1;
            walk.push_back(d);
            d = own ? cross_own(d) : cross_next(d);
            own = !own;
        } while (d != start || !own);
        out.partition.strands.push_back(std::move(walk));
    }

    out.strand_count = static_cast<int>(out.partition.strands.size());
    int isolated = 0;
    std::vector<int> deg = g.degrees();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] == 0) ++isolated;
    out.l = out.strand_count + isolated;
    return out;
}

std::pair<Multigraph, RotationSystem> insert_edge_at_corners(
    const Multigraph& g, const RotationSystem& rot, Dart before_u, Dart before_w) {
    const int u = rot.tail(before_u);
    const int w = rot.tail(before_w);
    Multigraph g2 = g.add_edge(u, w);
    const Dart du_new = 2 * g.edge_count();
    const Dart dw_new = du_new + 1;

    auto orders = rot.vertex_orders();
    auto insert_before = [&](int vertex, Dart anchor, Dart fresh) {
        auto& cyc = orders[vertex];
        auto it = std::find(cyc.begin(), cyc.end(), anchor);
        cyc.insert(it, fresh);
    };
    if (before_u == before_w) {
        // Loop hung in a single corner: both fresh darts ahead of the anchor.
        insert_before(u, before_u, dw_new);
        insert_before(u, dw_new, du_new);
    } else {
        insert_before(u, before_u, du_new);
        insert_before(w, before_w, dw_new);
    }
    return {g2, RotationSystem::from_orders(g2, std::move(orders))};
}

std::pair<Multigraph, RotationSystem> insert_edge_in_face(
    const Multigraph& g, const RotationSystem& rot, int u, int w, Dart face_dart) {
    if (face_dart < 0 || face_dart >= rot.dart_count())
        throw precondition_error("face dart out of range");
    // Walk the face orbit containing face_dart.
    std::vector<Dart> orbit;
    Dart d = face_dart;
    do {
        orbit.push_back(d);
        d = rot.succ(mate(d));
    } while (d != face_dart);

    Dart du = -1, dw = -1;
    for (Dart x : orbit) {
        if (rot.tail(x) == u && (du == -1 || x < du)) du = x;
    }
    for (Dart x : orbit) {
        if (rot.tail(x) != w) continue;
        if (u == w && x == du) continue;
        if (dw == -1 || x < dw) dw = x;
    }
    if (u == w && dw == -1) dw = du;  // single corner: loop insertion
    if (du == -1 || dw == -1)
        throw precondition_error("endpoint not on the face boundary walk");
    return insert_edge_at_corners(g, rot, du, dw);
}

}  // namespace linkcomp
