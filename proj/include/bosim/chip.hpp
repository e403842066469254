// bosim: physical model of the femtosecond-written 3D photonic chip.
//
// Waveguide pairs meet in directional couplers; the cross-coupled power is
// T = sin^2(kappa Z) with kappa = kappa0 exp(-s / s0), and the spacing s at
// the coupler follows from rotating one S-bend arm out of plane by alpha:
// s^2 = h^2 + (h + s_min)^2 - 2 h (h + s_min) cos(alpha). Phases are set by
// stretching an S-bend with the deformation x -> x + d sin(2 pi x / L).
#pragma once

#include "bosim/mesh.hpp"
#include "bosim/types.hpp"

#include <string>
#include <vector>

namespace bosim {

struct ChipGeometry {
    double h = 0.04;      // S-bend transverse extension, mm
    double L = 2.5;       // S-bend longitudinal extension, mm
    double Z = 0.435;     // coupler interaction length, mm
    double s_min = 6.0;   // minimum in-plane waveguide spacing, um
    double kappa0 = 42.0; // coupling constant at contact, 1/mm
    double s0 = 2.4;      // coupling decay length, um
    double lambda = 806.0; // wavelength, nm
    double n_eff = 1.6;   // effective mode index

    void validate() const; // throws Error("geometry") on nonphysical values
};

// Fabrication parameters realizing one mesh element.
struct ElementFabrication {
    int index = 0;
    double rotation_rad = 0.0; // out-of-plane rotation realizing t
    double d_alpha_mm = 0.0;   // S-bend deformation realizing alpha
    double d_beta_mm = 0.0;    // S-bend deformation realizing beta
};

struct FabricationSpec {
    ChipGeometry geometry;
    std::vector<ElementFabrication> elements;
};

/// Arc length (mm) of the deformed S-bend y = -(h/2) cos(2 pi x / L),
/// x' = x + d sin(2 pi x / L), by adaptive Simpson quadrature to 1e-9 mm.
/// |d| >= L / (2 pi) makes the path fold back on itself and throws.
double sbend_path_length(double h, double L, double d);

/// (2 pi / lambda) n_eff (length(d) - length(0)).
double deformation_phase(double d, const ChipGeometry& g);

/// Smallest non-negative d with deformation_phase(d) = target, by bisection
/// (the phase is monotone in d). target must lie in [0, pi] and be reachable
/// inside the injectivity bound, else Error("unattainable-phase").
double invert_phase_to_deformation(double target_phase, const ChipGeometry& g);

/// Deformation budget of a geometry: the d realizing a pi phase.
double max_deformation(const ChipGeometry& g);

/// Coupler spacing s(alpha) in um, alpha in [0, pi/2].
double coupler_spacing(double rotation_rad, const ChipGeometry& g);

/// Cross-coupled power fraction T(alpha) in [0, 1].
double coupler_transmissivity(double rotation_rad, const ChipGeometry& g);

/// Closed-form inversion of T(alpha) on the monotone branch kappa Z <= pi/2.
/// Unattainable targets raise Error("unattainable-transmissivity") naming the
/// attainable interval.
double invert_transmissivity_to_angle(double t_cross, const ChipGeometry& g);

/// The single place where mesh amplitudes meet chip cross powers: the mesh t
/// is the amplitude of staying in the same waveguide, so t^2 = 1 - T_cross.
double mesh_amplitude_to_cross_power(double t);
double cross_power_to_mesh_amplitude(double t_cross);

/// Rotation angle and deformations for every element. Unattainable elements
/// are collected and reported together in one Error("unattainable").
FabricationSpec layout_to_fabrication(const InterferometerLayout& layout,
                                      const ChipGeometry& g);

ChipGeometry load_geometry(const std::string& path);
void save_geometry(const std::string& path, const ChipGeometry& g);

} // namespace bosim
