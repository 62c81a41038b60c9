#pragma once

#include "sbk/rational.hpp"

#include <cstdint>
#include <random>

namespace sbk {

/// Deterministic rational sampler: numerator and denominator uniform in
/// [1, 97], sign uniform. Never draws zero, so sampled points stay inside
/// Zariski-open witness domains with probability 1 up to explicit guards.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> mag(1, 97);
        std::uniform_int_distribution<int> sign(0, 1);
        int num = mag(gen_);
        int den = mag(gen_);
        return make_rational(sign(gen_) ? num : -num, den);
    }

    /// Uniform integer in [lo, hi].
    int next_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace sbk
