#include "linkcomp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "linkcomp/bicycle.hpp"
#include "linkcomp/embedding.hpp"
#include "linkcomp/reduction.hpp"
#include "linkcomp/rng.hpp"
#include "linkcomp/suspension.hpp"

namespace linkcomp {

namespace {

struct Instance {
    Multigraph tree;
    Multigraph suspended;
    RotationSystem rot;  // of the suspended graph
};

double time_us(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    for (const std::string& m : options.methods) {
        if (m != "reduce" && m != "tutte" && m != "bicycle" &&
            m != "bicycle-serial" && m != "bicycle-parallel" && m != "strand")
            throw precondition_error("unknown bench method: " + m);
    }
    for (int n : options.sizes)
        if (n < 2) throw precondition_error("bench sizes must be at least 2");

    std::vector<BenchRow> rows;
    for (int size : options.sizes) {
        std::vector<Instance> instances;
        for (int i = 0; i < options.instances_per_size; ++i) {
            Multigraph t = random_tree(
                size, derive_seed(options.seed, 0xbe5c4ull, 1000u * size + i));
            auto [susp, rot] = suspend_tree_embedded(t, RotationSystem::default_for(t));
            instances.push_back({std::move(t), std::move(susp.graph), std::move(rot)});
        }
        for (const std::string& method : options.methods) {
            BenchRow row{size, method, static_cast<int>(instances.size()), 0, 0.0};
            double total = 0;
            for (const Instance& inst : instances) {
                if (method == "tutte" &&
                    inst.suspended.edge_count() > options.tutte_cap)
                    continue;
                std::function<void()> work;
                if (method == "reduce")
                    work = [&] { l_suspended(inst.tree); };
                else if (method == "tutte")
                    work = [&] { l_from_tutte(inst.suspended, {options.tutte_cap, false}); };
                else if (method == "bicycle")
                    work = [&] { l_from_bicycle(inst.suspended); };
                else if (method == "bicycle-serial")
                    work = [&] { l_from_bicycle(inst.suspended, RankKernel::serial); };
                else if (method == "bicycle-parallel")
                    work = [&] { l_from_bicycle(inst.suspended, RankKernel::parallel); };
                else
                    work = [&] { strand_components(inst.suspended, inst.rot); };
                double best = time_us(work);
                for (int rep = 1; rep < options.reps; ++rep)
                    best = std::min(best, time_us(work));
                total += best;
                ++row.feasible;
            }
            if (row.feasible > 0) row.mean_us = total / row.feasible;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "size,method,instances,feasible,mean_us\n";
    for (const BenchRow& r : rows) {
        out << r.size << ',' << r.method << ',' << r.instances << ','
            << r.feasible << ',';
        if (r.feasible == 0)
            out << "infeasible";
        else
            out << r.mean_us;
        out << '\n';
    }
    return out.str();
}

}  // namespace linkcomp
