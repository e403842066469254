// bosim: unitary matrices, Haar sampling, gauge freedom, comparison metrics.
#pragma once

#include "bosim/rng.hpp"
#include "bosim/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace bosim {

// Free input/output port phases. Multiplying a unitary by a phase shifter at
// every input and output port leaves all measurable statistics unchanged;
// this struct carries one such choice. Angles are kept in [0, 2*pi).
struct GaugePhases {
    std::vector<double> input;
    std::vector<double> output;

    static GaugePhases zero(int m) {
        return {std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
    }
};

inline double wrap_2pi(double x) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    double y = std::fmod(x, two_pi);
    if (y < 0) y += two_pi;
    if (y >= two_pi) y -= two_pi;
    return y;
}

/// Max-norm of U†U - I.
double unitarity_residual(const Mat& u);

constexpr double kDefaultUnitarityTol = 1e-9;

bool is_unitary(const Mat& u, double tol = kDefaultUnitarityTol);

/// Throws Error("unitarity") naming the residual when the check fails.
void require_unitary(const Mat& u, double tol = kDefaultUnitarityTol);

/// Nearest unitary in Frobenius norm (polar decomposition). Used to repair
/// matrices entered from rounded published tables before strict checks.
Mat polar_project(const Mat& u);

/// Haar-distributed m x m unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded back into Q. Deterministic for a fixed seed.
Mat haar_sample(int m, Rng& rng);
Mat haar_sample(int m, std::uint64_t seed);

/// |Tr(a b†)| / m.
double gate_fidelity(const Mat& a, const Mat& b);

/// (sum_i sqrt(p_i q_i))^2 for two probability vectors that each sum to 1
/// within 1e-6. Negative entries or broken normalization raise Error.
double similarity(const std::vector<double>& p, const std::vector<double>& q);

/// D(output) * U * D(input) with D diagonal unit-modulus phases.
Mat apply_gauge(const Mat& u, const GaugePhases& g);

/// Gauge-equivalent u' maximizing gate_fidelity(u', ref), found by alternating
/// closed-form row/column phase updates (each step sets the phase of the
/// conjugated overlap, so the fidelity is monotone). The global phase is then
/// fixed so entry (0,0) is real and non-negative. Returns u' and the phases g
/// with u' = apply_gauge(u, g).
std::pair<Mat, GaugePhases> align_gauge(const Mat& u, const Mat& ref,
                                        int max_iter = 1000,
                                        double tol = 1e-12);

} // namespace bosim
