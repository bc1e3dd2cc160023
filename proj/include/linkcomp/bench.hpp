#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkcomp/tutte.hpp"

namespace linkcomp {

struct BenchRow {
    int size;            // base tree vertex count
    std::string method;
    int instances;
    int feasible;        // instances the method actually ran on
    double mean_us;      // over feasible instances; meaningless when 0
};

struct BenchOptions {
    std::vector<int> sizes;
    std::vector<std::string> methods;  // reduce | tutte | bicycle |
                                       // bicycle-serial | bicycle-parallel | strand
    std::uint64_t seed = 1;
    int instances_per_size = 5;
    int reps = 3;  // per instance; the minimum rep is the measurement
    int tutte_cap = kDefaultTutteCap;
};

/// Times each method on seeded suspended trees (reduce runs on the base
/// tree, everything else on the suspended graph).  Tutte instances above
/// the cap are skipped and show up as infeasible rather than run.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// size,method,instances,feasible,mean_us — mean column reads "infeasible"
/// when no instance qualified.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace linkcomp
