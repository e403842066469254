// bosim: exact multi-photon output statistics of a linear interferometer.
#pragma once

#include "bosim/fock.hpp"
#include "bosim/permanent.hpp"
#include "bosim/types.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bosim {

enum class Restrict { all, collision_free };

// One exact output distribution. `probabilities` are raw event probabilities;
// when the outcome space is restricted to collision-free states they sum to
// total_mass < 1 and conditional() gives the renormalized view. States are in
// ascending lexicographic order, which is the canonical file order as well.
struct OutputDistribution {
    FockState input;
    int modes = 0;
    std::string model; // "indistinguishable" | "classical" | "partial:<r>"
    bool collision_free = false;
    std::vector<FockState> states;
    std::vector<double> probabilities;
    double total_mass = 0.0;

    std::vector<double> conditional() const;
};

// Two-photon interference visibilities V(i,j; K,L) for all unordered input
// pairs i<j and output pairs K<L. Entries where the distinguishable-photon
// coincidence rate vanishes are flagged invalid rather than stored as +-Inf.
struct VisibilityTensor {
    struct Entry {
        double v = 0.0;
        bool valid = false;
    };

    int m = 0;
    std::vector<Entry> entries; // [input pair][output pair], pair-major

    static int pair_count(int m) { return m * (m - 1) / 2; }
    // 1-based a < b.
    static int pair_index(int m, int a, int b) {
        return (a - 1) * (2 * m - a) / 2 + (b - a - 1);
    }

    Entry& at(int i, int j, int K, int L);
    const Entry& at(int i, int j, int K, int L) const;
};

/// The n x n matrix built from u by repeating column i `input[i]` times and
/// row j `output[j]` times. Throws on photon-number mismatch.
Mat build_submatrix(const Mat& u, const FockState& input,
                    const FockState& output);

/// |per(U_{S,T})|^2 / (prod s_i! prod t_j!).
double output_probability(const Mat& u, const FockState& input,
                          const FockState& output);

/// Exact distribution over all outputs (or the collision-free subset) for
/// indistinguishable photons.
OutputDistribution full_distribution(const Mat& u, const FockState& input,
                                     Restrict restrict_to = Restrict::all);

/// Fully distinguishable photons: per(|U_{S,T}|^2) / prod t_j!. Input must be
/// collision-free (the model is only needed there).
OutputDistribution classical_distribution(const Mat& u, const FockState& input,
                                          Restrict restrict_to = Restrict::all);

/// (P_cl - P_q) / P_cl for inputs {i, j}, outputs {K, L} (1-based).
/// Throws Error("undefined-visibility") when P_cl is numerically zero.
double hom_visibility(const Mat& u, int i, int j, int K, int L);

/// All visibilities at once; undefined entries flagged instead of thrown.
VisibilityTensor visibility_tensor(const Mat& u);

/// q-weighted mixture of interfering and non-interfering two-photon states.
double degrade_visibility(double v, double q);
VisibilityTensor degrade_visibility(const VisibilityTensor& t, double q);

/// Three photons with partial mutual distinguishability: the photons in
/// input_modes[0] and input_modes[2] interfere perfectly with each other,
/// the middle photon is distinguishable from them with weight (1 - r).
/// P(T) = r P_indist(T) + (1 - r) P_mixed(T) over collision-free triples.
OutputDistribution three_photon_partial_distribution(
    const Mat& u, double r, std::array<int, 3> input_modes = {1, 3, 5});

/// Renormalized view of a restricted distribution (probabilities / mass).
OutputDistribution conditional_distribution(const OutputDistribution& d);

/// i.i.d. draws by inverse CDF over the canonical outcome order. The
/// distribution must be normalized (total_mass within 1e-9 of 1).
std::vector<FockState> sample_outcomes(const OutputDistribution& dist,
                                       long shots, std::uint64_t seed);

} // namespace bosim
