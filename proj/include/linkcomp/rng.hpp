#pragma once

#include <cstdint>

namespace linkcomp {

// SplitMix64 stream.  Fixed algorithm, 64-bit state, so seeded runs
// replicate bit-for-bit on every platform; no standard-library
// distributions are involved anywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via the 128-bit multiply-shift reduction.
    // Bias is bound/2^64, far below anything a statistical test at corpus
    // scale can see; powers of two are exact.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return (next() >> 63) != 0; }

    // Child stream, decorrelated from the parent by one scramble round.
    SplitMix64 fork() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

  private:
    std::uint64_t state_;
};

// Deterministic per-instance seed: instance i of stream `tag` under a
// top-level seed.  Used by the corpus generators and the fan-out runners so
// results do not depend on thread count or evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t index) {
    SplitMix64 s(seed ^ (tag * 0x9e3779b97f4a7c15ull) ^
                 (index * 0xc2b2ae3d27d4eb4full));
    s.next();
    return s.next();
}

}  // namespace linkcomp
