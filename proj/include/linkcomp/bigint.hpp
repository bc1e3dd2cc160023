#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linkcomp {

/// Signed arbitrary-width integer, just wide enough for the Tutte
/// accumulator: construction, addition, negation, comparison, and the
/// power-of-two queries the sign/magnitude identity needs.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt power_of_two(int exponent, int sign = 1);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const { return *this + (-o); }
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }

    friend bool operator==(const BigInt&, const BigInt&) = default;

    bool magnitude_is_power_of_two() const;
    /// floor(log2 |x|); magnitude must be nonzero.
    int magnitude_log2() const;

    /// Throws if the value does not fit.
    long long to_int64() const;
    std::string to_string() const;  // decimal

  private:
    static int compare_magnitude(const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_magnitude(
        const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> sub_magnitude(
        const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    void trim();

    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint64_t> mag_;   // little-endian words, no trailing zeros
};

}  // namespace linkcomp
