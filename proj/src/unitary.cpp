#include "bosim/unitary.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace bosim {

double unitarity_residual(const Mat& u) {
    if (u.rows() != u.cols()) return INFINITY;
    Mat g = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
    return g.cwiseAbs().maxCoeff();
}

bool is_unitary(const Mat& u, double tol) {
    return u.rows() == u.cols() && unitarity_residual(u) <= tol;
}

void require_unitary(const Mat& u, double tol) {
    if (u.rows() != u.cols())
        throw Error("unitarity", "matrix is not square");
    double res = unitarity_residual(u);
    if (!(res <= tol)) {
        std::ostringstream os;
        os << "unitarity residual " << res << " exceeds tolerance " << tol;
        throw Error("unitarity", os.str());
    }
}

Mat polar_project(const Mat& u) {
    Eigen::JacobiSVD<Mat> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Mat haar_sample(int m, Rng& rng) {
    require(m >= 1, "invalid-dimension", "mode count must be at least 1");
    Mat z(m, m);
    const double inv_sqrt2 = 0.7071067811865475244;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            z(r, c) = Complex(rng.gaussian(), rng.gaussian()) * inv_sqrt2;
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fold the R-diagonal phases into Q; with a positive-diagonal R the QR
    // factorization is unique, which is what makes the distribution Haar.
    for (int c = 0; c < m; ++c) {
        Complex d = r(c, c);
        double a = std::abs(d);
        Complex phase = a > 0 ? d / a : Complex(1, 0);
        q.col(c) *= phase;
    }
    return q;
}

Mat haar_sample(int m, std::uint64_t seed) {
    Rng rng(seed);
    return haar_sample(m, rng);
}

double gate_fidelity(const Mat& a, const Mat& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension-mismatch",
            "gate_fidelity requires matrices of equal dimensions");
    Complex tr = (a * b.adjoint()).trace();
    return std::abs(tr) / static_cast<double>(a.rows());
}

double similarity(const std::vector<double>& p, const std::vector<double>& q) {
    require(p.size() == q.size(), "dimension-mismatch",
            "similarity requires equal-length distributions");
    double sp = 0.0, sq = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        require(p[k] >= -1e-12 && q[k] >= -1e-12, "distribution",
                "similarity requires non-negative probabilities");
        sp += p[k];
        sq += q[k];
    }
    require(std::abs(sp - 1.0) <= 1e-6 && std::abs(sq - 1.0) <= 1e-6,
            "distribution", "similarity requires normalized distributions");
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        s += std::sqrt(std::max(p[k], 0.0) * std::max(q[k], 0.0));
    return s * s;
}

Mat apply_gauge(const Mat& u, const GaugePhases& g) {
    require(static_cast<int>(g.input.size()) == u.cols() &&
                static_cast<int>(g.output.size()) == u.rows(),
            "dimension-mismatch", "gauge phase count must match dimensions");
    Mat out = u;
    for (int r = 0; r < u.rows(); ++r)
        out.row(r) *= std::polar(1.0, g.output[r]);
    for (int c = 0; c < u.cols(); ++c)
        out.col(c) *= std::polar(1.0, g.input[c]);
    return out;
}

std::pair<Mat, GaugePhases> align_gauge(const Mat& u, const Mat& ref,
                                        int max_iter, double tol) {
    require(u.rows() == ref.rows() && u.cols() == ref.cols(),
            "dimension-mismatch", "align_gauge requires equal dimensions");
    const int m = static_cast<int>(u.rows());
    std::vector<double> in(m, 0.0), out(m, 0.0);
    Mat cur = u;
    double fid = gate_fidelity(cur, ref);
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        // Rows: Tr(D_out X ref^dag) = sum_k e^{i th_k} (X ref^dag)_{kk};
        // th_k = -arg makes every term real positive. Columns likewise on
        // ref^dag D_out X.
        Mat xr = cur * ref.adjoint();
        for (int k = 0; k < m; ++k) {
            Complex c = xr(k, k);
            if (std::abs(c) > 0) {
                double th = -std::arg(c);
                out[k] = wrap_2pi(out[k] + th);
                cur.row(k) *= std::polar(1.0, th);
            }
        }
        Mat rx = ref.adjoint() * cur;
        for (int k = 0; k < m; ++k) {
            Complex c = rx(k, k);
            if (std::abs(c) > 0) {
                double th = -std::arg(c);
                in[k] = wrap_2pi(in[k] + th);
                cur.col(k) *= std::polar(1.0, th);
            }
        }
        double next = gate_fidelity(cur, ref);
        if (next - fid < tol && it > 0) {
            fid = next;
            converged = true;
            break;
        }
        fid = next;
    }
    if (!converged)
        throw Error("non-convergence",
                    "gauge alignment did not converge within the iteration cap");
    // Fix the global phase so entry (0,0) is real non-negative.
    if (std::abs(cur(0, 0)) > 0) {
        double th = -std::arg(cur(0, 0));
        cur *= std::polar(1.0, th);
        for (int k = 0; k < m; ++k) out[k] = wrap_2pi(out[k] + th);
    }
    return {cur, GaugePhases{std::move(in), std::move(out)}};
}

} // namespace bosim
