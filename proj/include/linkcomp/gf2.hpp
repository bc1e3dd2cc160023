#pragma once

#include <cstdint>
#include <vector>

namespace linkcomp::gf2 {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class Matrix {
  public:
    Matrix(int rows, int cols)
        : cols_(cols), words_((cols + 63) / 64),
          rows_(static_cast<size_t>(rows), std::vector<std::uint64_t>(words_, 0)) {}

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    void set(int r, int c) { rows_[r][c >> 6] |= 1ull << (c & 63); }
    bool get(int r, int c) const { return (rows_[r][c >> 6] >> (c & 63)) & 1; }

    void flip(int r, int c) { rows_[r][c >> 6] ^= 1ull << (c & 63); }

    std::vector<std::uint64_t>& row(int r) { return rows_[r]; }
    const std::vector<std::uint64_t>& row(int r) const { return rows_[r]; }

  private:
    int cols_;
    int words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Plain row-echelon rank; the reference implementation.
int rank_serial(Matrix m);

/// Same elimination with the row-clearing loop parallelized; always returns
/// the same value as rank_serial (every target row XORs the same pivot row,
/// so the order does not matter).  Falls back to serial without OpenMP.
int rank_parallel(Matrix m);

/// rank_parallel for large matrices, rank_serial otherwise.
int rank(Matrix m);

}  // namespace linkcomp::gf2
