#include "bosim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <vector>

namespace bosim {

namespace {

void check_square(const Mat& a) {
    require(a.rows() == a.cols(), "shape", "permanent requires a square matrix");
}

} // namespace

Complex permanent_naive(const Mat& a) {
    check_square(a);
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Complex(1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum(0, 0);
    do {
        Complex prod(1, 0);
        for (int r = 0; r < n; ++r) prod *= a(r, perm[r]);
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

Complex permanent_ryser(const Mat& a) {
    check_square(a);
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Complex(1, 0);
    // per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} A_ij.
    // Gray-code iteration updates the row sums by one column per step.
    std::vector<Complex> rowsum(n, Complex(0, 0));
    Complex total(0, 0);
    std::uint64_t gray = 0;
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        std::uint64_t next = k ^ (k >> 1);
        std::uint64_t changed = next ^ gray;
        int col = std::countr_zero(changed);
        double sign_col = (next & changed) ? 1.0 : -1.0;
        for (int r = 0; r < n; ++r) rowsum[r] += sign_col * a(r, col);
        gray = next;
        Complex prod(1, 0);
        for (int r = 0; r < n; ++r) prod *= rowsum[r];
        int bits = std::popcount(next);
        total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    return total;
}

Complex permanent(const Mat& a, PermAlgorithm alg) {
    check_square(a);
    const int n = static_cast<int>(a.rows());
    const int cap =
        alg == PermAlgorithm::naive ? kNaivePermanentCap : kRyserPermanentCap;
    if (n > cap) {
        std::ostringstream os;
        os << "dimension " << n << " exceeds the cap " << cap
           << " for this algorithm (the cost is exponential by nature)";
        throw Error("permanent-cap", os.str());
    }
    return alg == PermAlgorithm::naive ? permanent_naive(a)
                                       : permanent_ryser(a);
}

} // namespace bosim
