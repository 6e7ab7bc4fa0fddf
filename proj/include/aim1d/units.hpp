#pragma once

#include "aim1d/errors.hpp"

namespace aim1d {

// Physical constants, all in one place. Values are pinned to reproduce the
// published conversion factors (38.104 meV per dimensionless unit at
// x0 = 10 Angstrom for an electron, and hc = 1.2424 eV um) to every printed
// digit.
namespace constants {
inline constexpr double hbar_js = 1.0546e-34;        // J s
inline constexpr double electron_mass_kg = 9.11e-31; // kg
inline constexpr double ev_joule = 1.602e-19;        // J per eV
inline constexpr double hc_ev_um = 1.2424;           // h c in eV um
inline constexpr double angstrom_m = 1e-10;          // m per Angstrom
} // namespace constants

// Conversion context between dimensionless energies and physical units for a
// given length scale x0 and particle mass. One dimensionless energy unit is
// hbar^2 / (2 m x0^2).
struct UnitContext {
    double x0_angstrom = 10.0;
    double mass_kg = constants::electron_mass_kg;
    double energy_scale_ev = 0.0; // eV per dimensionless unit

    static UnitContext make(double x0_angstrom, double mass_kg = constants::electron_mass_kg);
};

// hbar^2 / (2 m x0^2) in eV.
double energy_scale_ev(double x0_angstrom, double mass_kg = constants::electron_mass_kg);

// Transition wavelength in micrometres for a dimensionless energy
// difference: lambda = hc / (delta_e * scale).
double transition_wavelength_um(double delta_e_dimensionless, const UnitContext& ctx);

// Recover the dimensionless energy difference from a wavelength.
double delta_e_from_wavelength_um(double lambda_um, const UnitContext& ctx);

enum class Band { uv, visible, ir };

// Optical band of a wavelength; the visible interval is taken as the closed
// range [0.4, 0.8] um. These are rough boundaries, so callers should print
// the wavelength alongside the label.
Band classify_band(double lambda_um);

const char* band_name(Band b);

} // namespace aim1d
