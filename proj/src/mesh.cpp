#include "bosim/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace bosim {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

// The 2x2 coupler core: a real rotation. r is the reflection amplitude.
void rot_block(double t, Complex out[2][2]) {
    double r = std::sqrt(std::max(0.0, 1.0 - t * t));
    out[0][0] = t;
    out[0][1] = -r;
    out[1][0] = r;
    out[1][1] = t;
}

} // namespace

std::vector<std::pair<int, int>> label_pairs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int d = 1; d < m; ++d)
        for (int q = m - d; q >= 1; --q) pairs.emplace_back(q, q + d);
    return pairs;
}

std::vector<std::pair<int, int>> application_pairs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = m; p >= 2; --p)
        for (int q = p - 1; q >= 1; --q) pairs.emplace_back(q, p);
    return pairs;
}

Mat element_unitary(const MeshElement& e, int m) {
    require(e.mode_q >= 1 && e.mode_q < e.mode_p && e.mode_p <= m, "topology",
            "element mode pair out of range");
    Mat u = Mat::Identity(m, m);
    Complex g[2][2];
    rot_block(e.t, g);
    Complex pq = std::polar(1.0, e.beta);  // lower arm q
    Complex pp = std::polar(1.0, e.alpha); // higher arm p
    int q = e.mode_q - 1, p = e.mode_p - 1;
    u(q, q) = g[0][0] * pq;
    u(q, p) = g[0][1] * pp;
    u(p, q) = g[1][0] * pq;
    u(p, p) = g[1][1] * pp;
    return u;
}

Mat compose(const InterferometerLayout& layout) {
    const int m = layout.m;
    require(m >= 1, "topology", "mode count must be at least 1");
    auto labels = label_pairs(m);
    require(layout.elements.size() == labels.size(), "topology",
            "element count must be m(m-1)/2");
    require(static_cast<int>(layout.external.input.size()) == m &&
                static_cast<int>(layout.external.output.size()) == m,
            "topology", "external gauge must carry m phases per side");
    std::map<std::pair<int, int>, const MeshElement*> by_pair;
    for (const auto& e : layout.elements) {
        require(e.mode_q >= 1 && e.mode_q < e.mode_p && e.mode_p <= m,
                "topology", "element mode pair out of range");
        require(e.t >= 0.0 && e.t <= 1.0 + 1e-12, "topology",
                "transmissivity out of [0, 1]");
        bool fresh = by_pair.emplace(std::make_pair(e.mode_q, e.mode_p), &e)
                         .second;
        require(fresh, "topology", "duplicate element mode pair");
    }
    Mat u = Mat::Zero(m, m);
    for (int w = 0; w < m; ++w)
        u(w, w) = std::polar(1.0, layout.external.input[w]);
    for (const auto& pq : application_pairs(m)) {
        auto it = by_pair.find(pq);
        require(it != by_pair.end(), "topology",
                "missing element for a required mode pair");
        u = element_unitary(*it->second, m) * u;
    }
    for (int w = 0; w < m; ++w)
        u.row(w) *= std::polar(1.0, layout.external.output[w]);
    return u;
}

namespace {

struct RawElement {
    double t = 1.0;
    double delta = 0.0; // nulling phase, on arm p
};

// Right-multiplication nulling sweep. Entry (p, q) of W is cleared against
// (p, p) by the inverse of G(t) diag(1, e^{i delta}) acting on columns
// (q, p); rows are processed bottom-up, right to left. Returns the element
// parameters and the residual diagonal.
void null_sweep(const Mat& u, std::map<std::pair<int, int>, RawElement>& elems,
                std::vector<Complex>& diag) {
    const int m = static_cast<int>(u.rows());
    Mat w = u;
    for (const auto& pq : application_pairs(m)) {
        int q = pq.first - 1, p = pq.second - 1;
        double uabs = std::abs(w(p, q));
        double vabs = std::abs(w(p, p));
        RawElement el;
        if (uabs < 1e-13) {
            el.t = 1.0; // entry already clear; the documented tie-break
            el.delta = 0.0;
        } else {
            double h = std::hypot(uabs, vabs);
            el.t = vabs / h;
            double r = uabs / h; // = sqrt(1 - t^2), exact here
            Complex den = w(p, p) * r;
            if (std::abs(den) == 0.0) {
                el.delta = 0.0; // t = 0: a swap nulls for any phase
            } else {
                Complex z = w(p, q) * el.t / den;
                el.delta = wrap_2pi(-std::arg(z));
            }
        }
        // W <- W * inv(G P) on columns (q, p): inv(G P) = diag(1, e^{-i d}) G^T.
        double r = std::sqrt(std::max(0.0, 1.0 - el.t * el.t));
        Complex em = std::polar(1.0, -el.delta);
        Complex m00 = el.t, m01 = r;
        Complex m10 = -r * em, m11 = el.t * em;
        for (int row = 0; row < m; ++row) {
            Complex cq = w(row, q), cp = w(row, p);
            w(row, q) = cq * m00 + cp * m10;
            w(row, p) = cq * m01 + cp * m11;
        }
        elems[pq] = el;
    }
    diag.resize(m);
    for (int k = 0; k < m; ++k) diag[k] = w(k, k);
}

} // namespace

InterferometerLayout decompose(const Mat& u, double unitarity_tol) {
    require(u.rows() == u.cols(), "unitarity", "matrix is not square");
    require_unitary(u, unitarity_tol);
    const int m = static_cast<int>(u.rows());

    std::map<std::pair<int, int>, RawElement> raw;
    std::vector<Complex> diag;
    null_sweep(u, raw, diag);

    // Forward fold: walk the elements in application order pushing each
    // coupler's common phase chi downstream on both wires. acc[w] is the
    // phase currently riding on wire w; psi[w] is the phase we assign to
    // input port w instead of an element. Diagonal-head elements (q, m) meet
    // wire q fresh from its input port, which is what lets them be pinned.
    std::vector<double> acc(m + 1, 0.0), psi(m + 1, 0.0);
    std::map<std::pair<int, int>, MeshElement> folded;
    for (const auto& pq : application_pairs(m)) {
        int q = pq.first, p = pq.second;
        const RawElement& el = raw[pq];
        bool head_first = (p == m && q == m - 1);
        bool mid_head = (p == m && q >= 2 && q <= m - 2);
        bool head_last = (p == m && q == 1 && m > 2);
        double phi_q = acc[q];
        double phi_p = acc[p] + el.delta;
        if (head_first) {
            // Both wires are fresh; port m absorbs the whole phase.
            psi[p] = -(phi_p - phi_q);
            phi_p = phi_q;
        }
        if (mid_head) {
            // Port q flips by pi when needed so the head keeps beta = 0.
            if (wrap_2pi(phi_p - phi_q) > kPi) {
                psi[q] = kPi;
                phi_q += kPi;
            }
        }
        if (head_last) {
            // Port 1 absorbs the whole phase of the last diagonal head.
            psi[q] = phi_p - acc[q];
            phi_q = phi_p;
        }
        double delta = wrap_2pi(phi_p - phi_q);
        MeshElement e;
        e.mode_q = q;
        e.mode_p = p;
        e.t = el.t;
        double chi;
        if (delta <= kPi) {
            e.alpha = delta;
            e.beta = 0.0;
            chi = phi_q;
        } else {
            e.alpha = 0.0;
            e.beta = kTwoPi - delta;
            chi = phi_p;
        }
        acc[q] = acc[p] = chi;
        folded[pq] = e;
    }

    InterferometerLayout layout;
    layout.m = m;
    layout.external.input.resize(m);
    layout.external.output.resize(m);
    for (int w = 1; w <= m; ++w) {
        layout.external.input[w - 1] = wrap_2pi(-psi[w]);
        layout.external.output[w - 1] =
            wrap_2pi(acc[w] + std::arg(diag[w - 1]));
    }
    auto labels = label_pairs(m);
    layout.elements.reserve(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        MeshElement e = folded[labels[k]];
        e.index = static_cast<int>(k) + 1;
        layout.elements.push_back(e);
    }
    return layout;
}

std::vector<double> RawMesh::pack() const {
    std::vector<double> x;
    x.reserve(theta.size() + delta.size() + out_phase.size());
    x.insert(x.end(), theta.begin(), theta.end());
    x.insert(x.end(), delta.begin(), delta.end());
    x.insert(x.end(), out_phase.begin(), out_phase.end());
    return x;
}

void RawMesh::unpack(const std::vector<double>& x) {
    const std::size_t e = pairs.size();
    require(x.size() == 2 * e + static_cast<std::size_t>(m), "shape",
            "raw mesh parameter vector has the wrong length");
    theta.assign(x.begin(), x.begin() + e);
    delta.assign(x.begin() + e, x.begin() + 2 * e);
    out_phase.assign(x.begin() + 2 * e, x.end());
}

RawMesh decompose_raw(const Mat& u) {
    require_unitary(u, 1e-6);
    const int m = static_cast<int>(u.rows());
    std::map<std::pair<int, int>, RawElement> raw;
    std::vector<Complex> diag;
    null_sweep(u, raw, diag);
    RawMesh mesh;
    mesh.m = m;
    mesh.pairs = application_pairs(m);
    mesh.theta.reserve(mesh.pairs.size());
    mesh.delta.reserve(mesh.pairs.size());
    for (const auto& pq : mesh.pairs) {
        const RawElement& el = raw[pq];
        mesh.theta.push_back(std::acos(std::clamp(el.t, 0.0, 1.0)));
        mesh.delta.push_back(el.delta);
    }
    mesh.out_phase.resize(m);
    for (int k = 0; k < m; ++k) mesh.out_phase[k] = std::arg(diag[k]);
    return mesh;
}

Mat compose_raw(const RawMesh& mesh) {
    const int m = mesh.m;
    require(mesh.pairs.size() == mesh.theta.size() &&
                mesh.pairs.size() == mesh.delta.size() &&
                static_cast<int>(mesh.out_phase.size()) == m,
            "shape", "raw mesh field lengths disagree");
    Mat u = Mat::Identity(m, m);
    for (std::size_t k = 0; k < mesh.pairs.size(); ++k) {
        int q = mesh.pairs[k].first - 1, p = mesh.pairs[k].second - 1;
        Complex g[2][2];
        rot_block(std::cos(mesh.theta[k]), g);
        Complex ph = std::polar(1.0, mesh.delta[k]);
        // Left-multiply by the element acting on rows (q, p).
        for (int col = 0; col < m; ++col) {
            Complex rq = u(q, col), rp = u(p, col);
            u(q, col) = g[0][0] * rq + g[0][1] * ph * rp;
            u(p, col) = g[1][0] * rq + g[1][1] * ph * rp;
        }
    }
    for (int w = 0; w < m; ++w)
        u.row(w) *= std::polar(1.0, mesh.out_phase[w]);
    return u;
}

void write_table_csv(const std::string& path, const InterferometerLayout& l,
                     bool rounded) {
    std::ofstream f(path);
    require(f.good(), "io", "cannot open '" + path + "' for writing");
    f << "i,t,alpha_rad,beta_rad\n";
    char buf[160];
    for (const auto& e : l.elements) {
        if (rounded)
            std::snprintf(buf, sizeof buf, "%d,%.2f,%.2f,%.2f\n", e.index, e.t,
                          e.alpha, e.beta);
        else
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", e.index,
                          e.t, e.alpha, e.beta);
        f << buf;
    }
    require(f.good(), "io", "write failed for '" + path + "'");
}

InterferometerLayout read_table_csv(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), "io", "cannot open '" + path + "'");
    std::string line;
    require(static_cast<bool>(std::getline(f, line)), "parse",
            path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    require(line == "i,t,alpha_rad,beta_rad", "parse",
            path + ": line 1: expected header 'i,t,alpha_rad,beta_rad'");
    std::vector<MeshElement> elements;
    int lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::ostringstream where;
        where << path << ": line " << lineno;
        std::stringstream ss(line);
        std::string tok;
        std::vector<std::string> cols;
        while (std::getline(ss, tok, ',')) cols.push_back(tok);
        require(cols.size() == 4, "parse",
                where.str() + ": expected 4 columns, found " +
                    std::to_string(cols.size()));
        MeshElement e;
        try {
            e.index = std::stoi(cols[0]);
            e.t = std::stod(cols[1]);
            e.alpha = std::stod(cols[2]);
            e.beta = std::stod(cols[3]);
        } catch (const std::exception&) {
            throw Error("parse", where.str() + ": malformed number");
        }
        require(e.t >= 0.0 && e.t <= 1.0 + 1e-9, "parse",
                where.str() + ": transmissivity outside [0, 1]");
        require(e.alpha >= 0.0 && e.alpha <= kPi + 1e-9 && e.beta >= 0.0 &&
                    e.beta <= kPi + 1e-9,
                "parse", where.str() + ": phase outside [0, pi]");
        e.t = std::min(e.t, 1.0);
        elements.push_back(e);
    }
    // Element count fixes m; the mode pairs follow from the table order.
    const int count = static_cast<int>(elements.size());
    int m = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * count)) / 2.0 + 0.5);
    require(m * (m - 1) / 2 == count, "parse",
            path + ": element count " + std::to_string(count) +
                " is not m(m-1)/2 for any m");
    auto labels = label_pairs(m);
    for (int k = 0; k < count; ++k) {
        require(elements[k].index == k + 1, "parse",
                path + ": element indices must be 1..N in order");
        elements[k].mode_q = labels[k].first;
        elements[k].mode_p = labels[k].second;
    }
    InterferometerLayout l;
    l.m = m;
    l.elements = std::move(elements);
    l.external = GaugePhases::zero(m);
    return l;
}

} // namespace bosim
