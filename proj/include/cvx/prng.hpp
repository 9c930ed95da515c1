#pragma once

#include <cstdint>

namespace cvx {

/// splitmix64: tiny deterministic generator, identical on every platform.
/// Used wherever reproducibility for a fixed seed is part of the contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Signed value in [-mag, mag].
    std::int64_t spread(std::int64_t mag) {
        return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(2 * mag + 1))) - mag;
    }

private:
    std::uint64_t state_;
};

} // namespace cvx
