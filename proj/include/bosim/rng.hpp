// bosim: the one random generator used everywhere, so a recorded seed
// reproduces a run exactly.
#pragma once

#include <cstdint>
#include <random>

namespace bosim {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1). Derived from the raw 64-bit stream directly so the
    // sequence is pinned by this code, not by library internals.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller on the pinned uniform stream.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform integer in [0, bound).
    std::uint64_t integer(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound; // rejection bound
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= threshold) return x % bound;
        }
    }

    // Poisson draw; inversion for small means, normal approximation above.
    long poisson(double mean);

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline long Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
        double l = std::exp(-mean), p = 1.0;
        long k = 0;
        do {
            ++k;
            p *= uniform();
        } while (p > l);
        return k - 1;
    }
    double x = mean + std::sqrt(mean) * gaussian();
    return x < 0.0 ? 0 : static_cast<long>(x + 0.5);
}

} // namespace bosim
