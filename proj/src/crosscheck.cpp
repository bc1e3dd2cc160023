#include "linkcomp/crosscheck.hpp"

#include <chrono>

#include "linkcomp/bicycle.hpp"
#include "linkcomp/reduction.hpp"
#include "linkcomp/suspension.hpp"

namespace linkcomp {

int l_by_blocks_componentwise(const Multigraph& g) {
    int total = 0;
    for (const auto& comp : g.connected_components())
        total += l_by_blocks(g.induced(comp));
    return total;
}

int l_via_reduction(const Multigraph& g, int apex) {
    NormalizeResult norm = normalize_apex(g, apex);
    if (norm.degenerate_l) return *norm.degenerate_l;
    Multigraph base = norm.output.delete_vertex(norm.output_apex);
    return l_suspended(base).l;
}

ConsistencyReport cross_check(const Multigraph& g,
                              const std::optional<RotationSystem>& rot,
                              const CrossCheckOptions& options,
                              std::string instance_name) {
    ConsistencyReport report;
    report.instance = std::move(instance_name);

    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        int l = fn();
        auto t1 = std::chrono::steady_clock::now();
        report.results.push_back(
            {name, l,
             std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()});
    };

    timed("bicycle", [&] { return l_from_bicycle(g); });
    timed("blocks", [&] { return l_by_blocks_componentwise(g); });
    if (g.edge_count() <= options.tutte_cap)
        timed("tutte", [&] { return l_from_tutte(g, {options.tutte_cap, false}); });
    if (rot) {
        timed("strand", [&] { return strand_components(g, *rot).l; });
    } else if (g.is_forest()) {
        timed("strand",
              [&] { return strand_components(g, RotationSystem::default_for(g)).l; });
    }
    if (options.apex)
        timed("reduce", [&] { return l_via_reduction(g, *options.apex); });

    report.agree = true;
    for (const MethodResult& r : report.results)
        report.agree &= r.l == report.results.front().l;
    return report;
}

}  // namespace linkcomp
