#include "linkcomp/gf2.hpp"

#include <utility>

namespace linkcomp::gf2 {

namespace {

inline void xor_into(std::vector<std::uint64_t>& dst,
                     const std::vector<std::uint64_t>& src) {
    for (size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

int rank_serial(Matrix m) {
    const int R = m.rows(), C = m.cols();
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int r = rank; r < R; ++r) {
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.row(rank), m.row(pivot));
        for (int r = rank + 1; r < R; ++r)
            if (m.get(r, col)) xor_into(m.row(r), m.row(rank));
        ++rank;
    }
    return rank;
}

int rank_parallel(Matrix m) {
    const int R = m.rows(), C = m.cols();
    int rank = 0;
#ifdef _OPENMP
    // Panel elimination, one team for the whole run.  One thread factors a
    // word-aligned block of 64 columns, tracking each candidate row's panel
    // bits in a single word so pivots can be chosen without touching full
    // rows; then one work-shared pass reduces every remaining row against
    // the whole panel.  That is two barriers per panel instead of two per
    // column, which is what makes the parallel kernel worthwhile.
    constexpr int kPanel = 64;
    std::vector<int> pivot_cols;
    std::vector<std::uint64_t> panel_bits;
#pragma omp parallel default(shared)
    for (int c0 = 0; c0 < C; c0 += kPanel) {
        if (rank >= R) continue;  // rank only moves behind full barriers
        int found = 0;            // per-thread copy of the panel pivot count
#pragma omp single copyprivate(found)
        {
            const int c1 = std::min(C, c0 + kPanel);
            const int word = c0 >> 6;
            const std::uint64_t mask =
                c1 - c0 == 64 ? ~0ull : (1ull << (c1 - c0)) - 1;
            pivot_cols.clear();
            panel_bits.assign(R - rank, 0);
            for (int r = rank; r < R; ++r)
                panel_bits[r - rank] = m.row(r)[word] & mask;
            for (int col = c0; col < c1; ++col) {
                const int base = rank + static_cast<int>(pivot_cols.size());
                if (base >= R) break;
                const std::uint64_t bit = 1ull << (col - c0);
                int pivot = -1;
                for (int r = base; r < R; ++r) {
                    if (panel_bits[r - rank] & bit) {
                        pivot = r;
                        break;
                    }
                }
                if (pivot < 0) continue;
                std::swap(m.row(base), m.row(pivot));
                std::swap(panel_bits[base - rank], panel_bits[pivot - rank]);
                // settle the pivot row against the earlier panel pivots
                for (size_t j = 0; j < pivot_cols.size(); ++j)
                    if (m.get(base, pivot_cols[j]))
                        xor_into(m.row(base), m.row(rank + static_cast<int>(j)));
                panel_bits[base - rank] = m.row(base)[word] & mask;
                const std::uint64_t pivot_panel = panel_bits[base - rank];
                for (int r = base + 1; r < R; ++r)
                    if (panel_bits[r - rank] & bit) panel_bits[r - rank] ^= pivot_panel;
                pivot_cols.push_back(col);
            }
            found = static_cast<int>(pivot_cols.size());
        }
        if (found == 0) continue;
#pragma omp for schedule(static)
        for (int r = rank + found; r < R; ++r) {
            for (int i = 0; i < found; ++i)
                if (m.get(r, pivot_cols[i])) xor_into(m.row(r), m.row(rank + i));
        }
#pragma omp single
        rank += found;
    }
#else
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int r = rank; r < R; ++r) {
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.row(rank), m.row(pivot));
        for (int r = rank + 1; r < R; ++r)
            if (m.get(r, col)) xor_into(m.row(r), m.row(rank));
        ++rank;
    }
#endif
    return rank;
}

int rank(Matrix m) {
    // Crossover measured with the kernel benchmark target; below it the
    // per-panel synchronization costs more than the shared work saves.
    if (m.rows() >= 1024 && m.cols() >= 1024) return rank_parallel(std::move(m));
    return rank_serial(std::move(m));
}

}  // namespace linkcomp::gf2
