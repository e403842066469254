// bosim: triangular beam-splitter mesh, decomposition and recomposition.
//
// Element convention (fixed project-wide): the 2 x 2 coupler block on mode
// pair (q, p), q < p, is
//
//     E = G(t) * diag(e^{i beta}, e^{i alpha}),   G(t) = [[t, -r], [r, t]],
//
// r = sqrt(1 - t^2), rows/cols ordered (q, p). The phase plates sit at the
// coupler inputs, alpha on the higher-index arm p and beta on the lower arm q.
// The decomposition emits at most one nonzero phase per element, in [0, pi].
#pragma once

#include "bosim/types.hpp"
#include "bosim/unitary.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bosim {

struct MeshElement {
    int index = 0;  // 1-based position in the parameter table
    int mode_q = 0; // 1-based, mode_q < mode_p
    int mode_p = 0;
    double t = 1.0;     // amplitude transmissivity; t^2 is the probability
    double alpha = 0.0; // phase on arm mode_p, [0, pi]
    double beta = 0.0;  // phase on arm mode_q, [0, pi]
};

struct InterferometerLayout {
    int m = 0;
    std::vector<MeshElement> elements; // table order (see label_pairs)
    GaugePhases external;              // free input/output port phases
};

/// Element order as listed in parameter tables: diagonals p - q = 1, 2, ...
/// ascending, q descending inside each diagonal. For m = 5:
/// (4,5),(3,4),(2,3),(1,2),(3,5),(2,4),(1,3),(2,5),(1,4),(1,5).
std::vector<std::pair<int, int>> label_pairs(int m);

/// The order in which elements act on the input state (and the nulling order
/// of the decomposition): pairs (q, p) for p = m..2, q = p-1..1.
std::vector<std::pair<int, int>> application_pairs(int m);

/// The m x m matrix of one element.
Mat element_unitary(const MeshElement& e, int m);

/// D(output) * T_N ... T_1 * D(input) with T_1 nearest the inputs.
Mat compose(const InterferometerLayout& layout);

/// Triangular nulling decomposition with the canonical phase fold:
///  - right-multiplication nulls row p = m..2 right to left against the
///    diagonal, extracting (t, raw phase) per pair;
///  - a forward pass pushes per-coupler common phases downstream and assigns
///    each element its single [0, pi] phase;
///  - the head element of every nulling diagonal (pairs (q, m)) is pinned:
///    the fresh input port q absorbs what is needed so beta = 0 there, and
///    the first and last heads carry no phase at all;
///  - leftover per-mode phases land in external gauge.
/// Round trip: compose(decompose(U)) reproduces U exactly (machine
/// precision), external gauge included.
InterferometerLayout decompose(const Mat& u,
                               double unitarity_tol = kDefaultUnitarityTol);

// Raw triangular coordinates (no phase folding): every element is
// G(cos(theta)) * diag(1, e^{i delta}) in application order, then a diagonal
// of output phases. Any parameter vector gives a valid unitary, which makes
// this the search space for reconstruction refinement.
struct RawMesh {
    int m = 0;
    std::vector<std::pair<int, int>> pairs; // application order
    std::vector<double> theta;              // t = cos(theta)
    std::vector<double> delta;              // phase on arm p
    std::vector<double> out_phase;          // m diagonal phases

    std::vector<double> pack() const;
    void unpack(const std::vector<double>& x);
};

RawMesh decompose_raw(const Mat& u);
Mat compose_raw(const RawMesh& mesh);

/// CSV with columns i, t, alpha_rad, beta_rad. `rounded` writes the 2-decimal
/// display form; default is full precision (lossless round trip).
void write_table_csv(const std::string& path, const InterferometerLayout& l,
                     bool rounded = false);

/// Reads a parameter table; the mode pairs are implied by the element count
/// via label_pairs. External gauge is zero (the table does not carry it).
InterferometerLayout read_table_csv(const std::string& path);

} // namespace bosim
