#include "bosim/sampler.hpp"

#include "bosim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace bosim {

namespace {

constexpr double kVisibilityFloor = 1e-12;
constexpr long kOutcomeCap = 2000000;

void check_modes(const Mat& u, const FockState& s, const char* what) {
    require(static_cast<int>(s.size()) == u.rows(), "dimension-mismatch",
            std::string(what) + " state length must equal the mode count");
}

std::string partial_tag(double r) {
    std::ostringstream os;
    os << "partial:" << std::setprecision(12) << r;
    return os.str();
}

} // namespace

std::vector<double> OutputDistribution::conditional() const {
    require(total_mass > 0, "distribution",
            "cannot condition on an empty outcome set");
    std::vector<double> c(probabilities.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = probabilities[k] / total_mass;
    return c;
}

VisibilityTensor::Entry& VisibilityTensor::at(int i, int j, int K, int L) {
    if (i > j) std::swap(i, j);
    if (K > L) std::swap(K, L);
    return entries[pair_index(m, i, j) * pair_count(m) + pair_index(m, K, L)];
}

const VisibilityTensor::Entry& VisibilityTensor::at(int i, int j, int K,
                                                    int L) const {
    if (i > j) std::swap(i, j);
    if (K > L) std::swap(K, L);
    return entries[pair_index(m, i, j) * pair_count(m) + pair_index(m, K, L)];
}

Mat build_submatrix(const Mat& u, const FockState& input,
                    const FockState& output) {
    check_modes(u, input, "input");
    check_modes(u, output, "output");
    const int n = total_photons(input);
    require(n == total_photons(output), "photon-mismatch",
            "input and output photon numbers differ");
    require(n >= 1, "photon-mismatch", "at least one photon is required");
    Mat cols(u.rows(), n);
    int c = 0;
    for (int i = 0; i < static_cast<int>(input.size()); ++i)
        for (int rep = 0; rep < input[i]; ++rep) cols.col(c++) = u.col(i);
    Mat sub(n, n);
    int r = 0;
    for (int j = 0; j < static_cast<int>(output.size()); ++j)
        for (int rep = 0; rep < output[j]; ++rep) sub.row(r++) = cols.row(j);
    return sub;
}

double output_probability(const Mat& u, const FockState& input,
                          const FockState& output) {
    Mat sub = build_submatrix(u, input, output);
    Complex p = permanent(sub, PermAlgorithm::ryser);
    double norm = occupation_factorial(input) * occupation_factorial(output);
    return std::norm(p) / norm;
}

OutputDistribution full_distribution(const Mat& u, const FockState& input,
                                     Restrict restrict_to) {
    check_modes(u, input, "input");
    const int m = static_cast<int>(u.rows());
    const int n = total_photons(input);
    require(n >= 1 && n <= kRyserPermanentCap, "cap",
            "photon number outside the tractable range");
    bool cf = restrict_to == Restrict::collision_free;
    std::vector<FockState> states = enumerate_states(m, n, cf);
    require(static_cast<long>(states.size()) <= kOutcomeCap, "cap",
            "outcome space too large to enumerate");
    OutputDistribution d;
    d.input = input;
    d.modes = m;
    d.model = "indistinguishable";
    d.collision_free = cf;
    d.states = std::move(states);
    d.probabilities.resize(d.states.size());
    double mass = 0.0;
    for (std::size_t k = 0; k < d.states.size(); ++k) {
        double p = output_probability(u, input, d.states[k]);
        d.probabilities[k] = p;
        mass += p;
    }
    d.total_mass = mass;
    return d;
}

OutputDistribution classical_distribution(const Mat& u, const FockState& input,
                                          Restrict restrict_to) {
    check_modes(u, input, "input");
    for (int v : input)
        require(v <= 1, "unsupported",
                "the distinguishable-photon model is defined for "
                "collision-free inputs only");
    const int m = static_cast<int>(u.rows());
    const int n = total_photons(input);
    require(n >= 1 && n <= kRyserPermanentCap, "cap",
            "photon number outside the tractable range");
    bool cf = restrict_to == Restrict::collision_free;
    std::vector<FockState> states = enumerate_states(m, n, cf);
    OutputDistribution d;
    d.input = input;
    d.modes = m;
    d.model = "classical";
    d.collision_free = cf;
    d.states = std::move(states);
    d.probabilities.resize(d.states.size());
    double mass = 0.0;
    for (std::size_t k = 0; k < d.states.size(); ++k) {
        Mat sub = build_submatrix(u, input, d.states[k]);
        Mat sq = sub.cwiseAbs2().cast<Complex>();
        Complex p = permanent(sq, PermAlgorithm::ryser);
        double val = p.real() / occupation_factorial(d.states[k]);
        d.probabilities[k] = val;
        mass += val;
    }
    d.total_mass = mass;
    return d;
}

double hom_visibility(const Mat& u, int i, int j, int K, int L) {
    const int m = static_cast<int>(u.rows());
    require(i >= 1 && j >= 1 && K >= 1 && L >= 1 && i <= m && j <= m &&
                K <= m && L <= m,
            "mode-range", "mode labels are 1-based and bounded by m");
    require(i != j && K != L, "mode-range",
            "visibility needs two distinct inputs and two distinct outputs");
    Complex a = u(K - 1, i - 1) * u(L - 1, j - 1);
    Complex b = u(K - 1, j - 1) * u(L - 1, i - 1);
    double p_cl = std::norm(a) + std::norm(b);
    double p_q = std::norm(a + b);
    if (p_cl < kVisibilityFloor)
        throw Error("undefined-visibility",
                    "distinguishable coincidence probability is zero");
    return (p_cl - p_q) / p_cl;
}

VisibilityTensor visibility_tensor(const Mat& u) {
    const int m = static_cast<int>(u.rows());
    VisibilityTensor t;
    t.m = m;
    t.entries.assign(static_cast<std::size_t>(VisibilityTensor::pair_count(m)) *
                         VisibilityTensor::pair_count(m),
                     {});
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int K = 1; K <= m; ++K)
                for (int L = K + 1; L <= m; ++L) {
                    auto& e = t.at(i, j, K, L);
                    try {
                        e.v = hom_visibility(u, i, j, K, L);
                        e.valid = true;
                    } catch (const Error&) {
                        e.valid = false;
                    }
                }
    return t;
}

double degrade_visibility(double v, double q) {
    require(q >= 0.0 && q <= 1.0, "invalid-parameter",
            "indistinguishability q must lie in [0, 1]");
    return q * v;
}

VisibilityTensor degrade_visibility(const VisibilityTensor& t, double q) {
    require(q >= 0.0 && q <= 1.0, "invalid-parameter",
            "indistinguishability q must lie in [0, 1]");
    VisibilityTensor out = t;
    for (auto& e : out.entries)
        if (e.valid) e.v *= q;
    return out;
}

OutputDistribution three_photon_partial_distribution(
    const Mat& u, double r, std::array<int, 3> input_modes) {
    const int m = static_cast<int>(u.rows());
    require(r >= 0.0 && r <= 1.0, "invalid-parameter",
            "indistinguishability weight r must lie in [0, 1]");
    std::array<int, 3> md = input_modes;
    require(md[0] >= 1 && md[0] < md[1] && md[1] < md[2] && md[2] <= m,
            "mode-range", "three distinct ascending input modes are required");
    const int a = md[0] - 1, b = md[1] - 1, c = md[2] - 1;
    FockState input(m, 0);
    input[a] = input[b] = input[c] = 1;

    OutputDistribution d;
    d.input = input;
    d.modes = m;
    d.model = partial_tag(r);
    d.collision_free = true;
    d.states = enumerate_states(m, 3, true);
    d.probabilities.resize(d.states.size());

    double mass = 0.0;
    for (std::size_t k = 0; k < d.states.size(); ++k) {
        const FockState& T = d.states[k];
        std::array<int, 3> outs{};
        int w = 0;
        for (int mode = 0; mode < m; ++mode)
            if (T[mode]) outs[w++] = mode;
        double p_ind = output_probability(u, input, T);
        // Mixed term: the middle photon is distinguishable, so it routes
        // classically to one of the three output modes while the outer pair
        // interferes in the remaining two.
        double p_mix = 0.0;
        for (int x = 0; x < 3; ++x) {
            int K = outs[(x + 1) % 3], L = outs[(x + 2) % 3];
            Complex amp =
                u(K, a) * u(L, c) + u(L, a) * u(K, c);
            p_mix += std::norm(u(outs[x], b)) * std::norm(amp);
        }
        double p = r * p_ind + (1.0 - r) * p_mix;
        d.probabilities[k] = p;
        mass += p;
    }
    d.total_mass = mass;
    return d;
}

OutputDistribution conditional_distribution(const OutputDistribution& d) {
    OutputDistribution out = d;
    out.probabilities = d.conditional();
    out.total_mass = 1.0;
    return out;
}

std::vector<FockState> sample_outcomes(const OutputDistribution& dist,
                                       long shots, std::uint64_t seed) {
    require(std::abs(dist.total_mass - 1.0) <= 1e-9, "unnormalized",
            "sampling requires a normalized distribution; condition a "
            "restricted one first");
    require(shots >= 0, "invalid-parameter", "shot count must be non-negative");
    std::vector<double> cum(dist.probabilities.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < cum.size(); ++k) {
        acc += std::max(dist.probabilities[k], 0.0);
        cum[k] = acc;
    }
    Rng rng(seed);
    std::vector<FockState> out;
    out.reserve(shots);
    for (long s = 0; s < shots; ++s) {
        double x = rng.uniform() * acc;
        auto it = std::lower_bound(cum.begin(), cum.end(), x);
        std::size_t idx = it == cum.end() ? cum.size() - 1
                                          : static_cast<std::size_t>(
                                                it - cum.begin());
        out.push_back(dist.states[idx]);
    }
    return out;
}

} // namespace bosim
