// bosim: matrix permanent kernels.
//
// The permanent is the determinant's sum without signs; it is #P-hard, and the
// exponential cost caps below are the documented contract, not a temporary
// limitation.
#pragma once

#include "bosim/types.hpp"

namespace bosim {

enum class PermAlgorithm { naive, ryser };

constexpr int kNaivePermanentCap = 8;
constexpr int kRyserPermanentCap = 20;

/// Permutation-sum definition, O(n! n). Kept as the independent cross-check
/// path for the production kernel.
Complex permanent_naive(const Mat& a);

/// Ryser's inclusion-exclusion formula with Gray-code column updates,
/// O(2^n n).
Complex permanent_ryser(const Mat& a);

/// Cap-enforcing front end. Non-square input or a dimension above the
/// algorithm's cap raises Error.
Complex permanent(const Mat& a, PermAlgorithm alg = PermAlgorithm::ryser);

} // namespace bosim
