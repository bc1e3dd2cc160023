// Compares the OpenMP GF(2) elimination kernel against the serial reference,
// both on raw random matrices and through the bicycle oracle on suspended
// trees.  CSV on stdout.

#include <chrono>
#include <iostream>

#include "linkcomp/bench.hpp"
#include "linkcomp/gf2.hpp"
#include "linkcomp/rng.hpp"

using namespace linkcomp;

namespace {

double time_rank(gf2::Matrix m, bool parallel, int* rank_out) {
    auto t0 = std::chrono::steady_clock::now();
    int r = parallel ? gf2::rank_parallel(std::move(m)) : gf2::rank_serial(std::move(m));
    auto t1 = std::chrono::steady_clock::now();
    *rank_out = r;
    return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

}  // namespace

int main() {
    std::cout << "kernel,size,serial_us,parallel_us,rank\n";
    SplitMix64 rng(20240401);
    for (int size : {128, 256, 512, 1024, 2048}) {
        gf2::Matrix m(size, size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                if (rng.next_below(100) < 40) m.set(r, c);
        int rank_serial = 0, rank_parallel = 0;
        double su = time_rank(m, false, &rank_serial);
        double pu = time_rank(m, true, &rank_parallel);
        if (rank_serial != rank_parallel) {
            std::cerr << "kernel mismatch at size " << size << "\n";
            return 1;
        }
        std::cout << "gf2_rank," << size << ',' << su << ',' << pu << ','
                  << rank_serial << "\n";
    }

    BenchOptions opt;
    opt.sizes = {200, 400, 800, 1600};
    opt.methods = {"bicycle-serial", "bicycle-parallel"};
    opt.instances_per_size = 3;
    std::vector<BenchRow> rows = run_bench(opt);
    for (size_t i = 0; i + 1 < rows.size(); i += 2) {
        // run_bench emits serial then parallel for each size
        std::cout << "bicycle_dim," << rows[i].size << ',' << rows[i].mean_us
                  << ',' << rows[i + 1].mean_us << ",\n";
    }
    return 0;
}
