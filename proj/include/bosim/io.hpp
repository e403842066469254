// bosim: JSON and CSV serialization, run manifests.
//
// File schemas:
//   matrix        {"rows": m, "cols": m, "entries": [[re, im], ...]} row-major
//   distribution  {"input": [s...], "model": "...", "collision_free": b,
//                  "outcomes": [{"state": [t...], "p": x}, ...],
//                  "total_mass": x, "seed": n?}
//   measurement   {"m": 5, "q": 0.95, "single_photon": [[p, sigma], ...],
//                  "visibilities": [{"i","j","K","L","v","sigma"}, ...]}
//                 single_photon is row-major over (K, i): P1(i -> K).
#pragma once

#include "bosim/chip.hpp"
#include "bosim/mesh.hpp"
#include "bosim/recon.hpp"
#include "bosim/sampler.hpp"
#include "bosim/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace bosim {

using Json = nlohmann::json;

Json matrix_to_json(const Mat& u);
Mat matrix_from_json(const Json& j);

/// Load a matrix file. `repair` projects to the nearest unitary first (for
/// matrices typed in from rounded published tables); the unitarity check
/// applies afterwards in both cases.
Mat load_unitary(const std::string& path, bool repair = false,
                 double tol = kDefaultUnitarityTol);
void save_unitary(const std::string& path, const Mat& u,
                  const std::optional<Json>& manifest = std::nullopt);

Json distribution_to_json(const OutputDistribution& d);
OutputDistribution distribution_from_json(const Json& j);

Json layout_to_json(const InterferometerLayout& l);
InterferometerLayout layout_from_json(const Json& j);

Json measurement_to_json(const MeasurementData& d);
MeasurementData measurement_from_json(const Json& j);

Json geometry_to_json(const ChipGeometry& g);
ChipGeometry geometry_from_json(const Json& j);

Json fabrication_to_json(const FabricationSpec& f);

Json visibilities_to_json(const VisibilityTensor& t);
VisibilityTensor visibilities_from_json(const Json& j);

Json reconstruction_to_json(const ReconstructionResult& r);

/// Read/parse helpers that wrap file errors into Error("io"/"parse") with the
/// path in the message.
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

/// FNV-1a 64-bit content digest, hex. Provenance bookkeeping, not security.
std::string digest_file(const std::string& path);

/// Run manifest embedded in every CLI output (or written as a .manifest.json
/// sidecar next to CSV outputs). Reruns are byte-identical except for the
/// timestamp field.
Json make_manifest(const std::string& command, const Json& params,
                   std::optional<std::uint64_t> seed,
                   const std::vector<std::string>& input_paths);

void write_distribution_csv(const std::string& path,
                            const OutputDistribution& d);

} // namespace bosim
