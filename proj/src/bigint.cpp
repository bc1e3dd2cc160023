#include "linkcomp/bigint.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "linkcomp/errors.hpp"

namespace linkcomp {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long mag =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
              : static_cast<unsigned long long>(v);
    mag_.push_back(mag);
}

BigInt BigInt::power_of_two(int exponent, int sign) {
    BigInt r;
    r.sign_ = sign < 0 ? -1 : 1;
    r.mag_.assign(exponent / 64 + 1, 0);
    r.mag_.back() = 1ull << (exponent % 64);
    return r;
}

int BigInt::compare_magnitude(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint64_t> BigInt::add_magnitude(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    const auto& lo = a.size() <= b.size() ? a : b;
    const auto& hi = a.size() <= b.size() ? b : a;
    std::vector<std::uint64_t> out(hi.size(), 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        unsigned __int128 s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) out.push_back(static_cast<std::uint64_t>(carry));
    return out;
}

std::vector<std::uint64_t> BigInt::sub_magnitude(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    // requires |a| >= |b|
    std::vector<std::uint64_t> out(a.size(), 0);
    unsigned __int128 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned __int128 sub = borrow + (i < b.size() ? b[i] : 0);
        if (a[i] >= sub) {
            out[i] = static_cast<std::uint64_t>(a[i] - sub);
            borrow = 0;
        } else {
            out[i] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(1) << 64) + a[i] - sub);
            borrow = 1;
        }
    }
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r(*this);
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_magnitude(mag_, o.mag_);
        return r;
    }
    int cmp = compare_magnitude(mag_, o.mag_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) {
        r.sign_ = sign_;
        r.mag_ = sub_magnitude(mag_, o.mag_);
    } else {
        r.sign_ = o.sign_;
        r.mag_ = sub_magnitude(o.mag_, mag_);
    }
    r.trim();
    return r;
}

bool BigInt::magnitude_is_power_of_two() const {
    if (sign_ == 0) return false;
    for (size_t i = 0; i + 1 < mag_.size(); ++i)
        if (mag_[i] != 0) return false;
    return std::has_single_bit(mag_.back());
}

int BigInt::magnitude_log2() const {
    if (sign_ == 0) throw internal_error("log2 of zero");
    return static_cast<int>(mag_.size() - 1) * 64 +
           (63 - std::countl_zero(mag_.back()));
}

long long BigInt::to_int64() const {
    if (sign_ == 0) return 0;
    if (mag_.size() > 1) throw internal_error("BigInt does not fit in 64 bits");
    std::uint64_t v = mag_[0];
    if (sign_ > 0) {
        if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
            throw internal_error("BigInt does not fit in 64 bits");
        return static_cast<long long>(v);
    }
    if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1ull)
        throw internal_error("BigInt does not fit in 64 bits");
    return -static_cast<long long>(v - 1) - 1;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint64_t> work(mag_);
    std::string digits;
    while (!work.empty()) {
        // divide by 10^18, collecting the remainder
        unsigned __int128 rem = 0;
        const std::uint64_t base = 1000000000000000000ull;
        for (size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / base);
            rem = cur % base;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::uint64_t chunk = static_cast<std::uint64_t>(rem);
        for (int k = 0; k < 18; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace linkcomp
