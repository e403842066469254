// bosim: reconstructing the interferometer unitary from one-photon
// probabilities and two-photon interference visibilities.
#pragma once

#include "bosim/sampler.hpp"
#include "bosim/types.hpp"
#include "bosim/unitary.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bosim {

// Measured (or synthesized) data. single_photon holds P1(i -> K) at row K,
// column i, matching |U_{K,i}|^2; sigma_* are per-entry uncertainties used as
// chi-square weights (1 when the data are noiseless).
struct MeasurementData {
    int m = 0;
    double q = 1.0; // photon indistinguishability, measured independently
    RealMat single_photon;
    RealMat sigma_single;
    VisibilityTensor visibilities;
    std::vector<std::vector<double>> sigma_vis; // same shape as entries

    double vis_sigma(int i, int j, int K, int L) const;
    void validate() const;
};

struct NoiseModel {
    enum class Kind { none, gaussian, poisson };
    Kind kind = Kind::none;
    double sigma_rel_p = 0.0; // relative noise on P1 entries
    double sigma_abs_v = 0.0; // absolute noise on visibilities
    long shots = 0;           // Poisson mode: shots per setting
};

struct ReconstructionResult {
    Mat unitary;
    double chi2 = 0.0;
    int reference_input = 0;  // i0, 1-based
    int reference_output = 0; // K0, 1-based
    long refine_iterations = 0;
    double refine_final = 0.0;
    GaugePhases gauge; // alignment applied to the refined unitary
    int clip_warnings = 0;
};

/// Ideal data from u: P1 = |U|^2, visibilities q-degraded, then the chosen
/// noise applied. Gaussian mode perturbs P1 multiplicatively (columns are
/// renormalized afterwards, the chip is lossless) and visibilities
/// additively; Poisson mode draws counts at `shots` per setting.
MeasurementData synthesize_data(const Mat& u, double q, const NoiseModel& noise,
                                std::uint64_t seed);

/// chi^2 = sum over all m^2 one-photon entries and every valid visibility of
/// (model - observed)^2 / sigma^2; the model visibility includes the q factor.
double chi2(const Mat& u, const MeasurementData& data);

/// Analytic candidate for one reference choice (input i0, output K0), both
/// 1-based: moduli from sqrt(P1); phases zero on row K0 and column i0 by
/// gauge; each remaining phase from the visibility of inputs {i0, i} and
/// outputs {K0, K} via a q-corrected arccos; within-row relative signs from
/// same-row visibilities; the remaining per-row sign freedom (2^(m-1)
/// patterns) resolved against the held-out cross-row visibilities. Returns a
/// generally non-unitary matrix. Throws Error("ill-conditioned-reference") if
/// a reference modulus is below 1e-6, Error("phase-extraction") when an
/// arccos argument overshoots past 1.2 (clipped, with a warning counter,
/// below that).
Mat reconstruct_candidate(const MeasurementData& data, int i0, int K0,
                          int* clip_warnings = nullptr);

/// Full pipeline: all m^2 reference choices, polar projection, chi-square
/// ranking, then refinement over the raw triangular mesh coordinates
/// (coordinate probes plus numeric-gradient descent; chi^2 never increases).
/// If a reference unitary is supplied the result (or its complex conjugate,
/// which the data cannot distinguish) is gauge-aligned to it; otherwise the
/// global phase is fixed so entry (0,0) is real non-negative.
ReconstructionResult reconstruct_best(
    const MeasurementData& data,
    const std::optional<Mat>& reference = std::nullopt);

/// 1 - sum |v_a - v_b| / (2 n) over the n entries valid in both tensors.
double visibility_similarity(const VisibilityTensor& a,
                             const VisibilityTensor& b);

} // namespace bosim
