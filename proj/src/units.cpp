#include "aim1d/units.hpp"

#include <cmath>

namespace aim1d {

UnitContext UnitContext::make(double x0_angstrom, double mass_kg) {
    UnitContext ctx;
    ctx.x0_angstrom = x0_angstrom;
    ctx.mass_kg = mass_kg;
    ctx.energy_scale_ev = aim1d::energy_scale_ev(x0_angstrom, mass_kg);
    return ctx;
}

double energy_scale_ev(double x0_angstrom, double mass_kg) {
    if (!(x0_angstrom > 0) || !(mass_kg > 0))
        throw DomainError("energy_scale: x0 and mass must be positive");
    const double x0_m = x0_angstrom * constants::angstrom_m;
    const double joule = constants::hbar_js * constants::hbar_js / (2.0 * mass_kg * x0_m * x0_m);
    return joule / constants::ev_joule;
}

double transition_wavelength_um(double delta_e_dimensionless, const UnitContext& ctx) {
    if (!(delta_e_dimensionless > 0))
        throw DomainError("transition_wavelength: energy difference must be positive");
    return constants::hc_ev_um / (delta_e_dimensionless * ctx.energy_scale_ev);
}

double delta_e_from_wavelength_um(double lambda_um, const UnitContext& ctx) {
    if (!(lambda_um > 0))
        throw DomainError("delta_e_from_wavelength: wavelength must be positive");
    return constants::hc_ev_um / (lambda_um * ctx.energy_scale_ev);
}

Band classify_band(double lambda_um) {
    if (!(lambda_um > 0))
        throw DomainError("classify_band: wavelength must be positive");
    if (lambda_um < 0.4)
        return Band::uv;
    if (lambda_um <= 0.8)
        return Band::visible;
    return Band::ir;
}

const char* band_name(Band b) {
    switch (b) {
    case Band::uv:
        return "UV";
    case Band::visible:
        return "visible";
    case Band::ir:
        return "IR";
    }
    return "?";
}

} // namespace aim1d
