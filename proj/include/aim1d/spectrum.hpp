#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aim1d/aim.hpp"
#include "aim1d/potential.hpp"
#include "aim1d/units.hpp"

namespace aim1d {

struct DegeneratePair {
    double e_low = 0;
    double e_high = 0;
    double gap = 0;
};

// Classified spectrum at one parameter point. Converged real candidates are
// partitioned at V(0): roots below it do not correspond to bound states and
// are reported separately. The boundary is inclusive on the bound side.
struct SpectrumReport {
    PotentialSpec spec;
    SolverConfig cfg; // resolved values (u0, window) actually used
    PotentialExtrema extrema;
    double pair_threshold = 0.1;
    std::vector<double> bound_states;    // ascending
    std::vector<double> below_min_states; // ascending
    std::vector<DegeneratePair> pairs;   // adjacent bound states closer than the threshold
    std::vector<EigenvalueCandidate> candidates; // full root layer, pre-classification
};

// Greedy left-to-right pairing of adjacent energies with gap < threshold;
// each energy joins at most one pair. Input must be sorted ascending.
std::vector<DegeneratePair> pair_degenerate(const std::vector<double>& bound, double threshold);

SpectrumReport classify(const std::vector<EigenvalueCandidate>& candidates,
                        const PotentialExtrema& ex, double tol_imag = 1e-4,
                        double pair_threshold = 0.1);

// solve + classify in one step, with the auto fields of cfg (u0, energy
// window) resolved from the potential.
SpectrumReport solve_spectrum(const PotentialSpec& spec, const SolverConfig& cfg,
                              double pair_threshold = 0.1, Exec ex = Exec::par);

// The adjacent pair of bound states straddling the barrier top, when both
// exist: the transition whose wavelength the unit conversion reports.
struct StraddlingTransition {
    double e_inside = 0;  // highest bound state below v_max
    double e_outside = 0; // lowest bound state above v_max
    double delta_e = 0;
};
std::optional<StraddlingTransition> straddling_transition(const SpectrumReport& report);

enum class SweepParam { a, b, c };

const char* sweep_param_name(SweepParam p);

struct SweepRow {
    std::string param;
    double value = 0;
    bool ok = false;
    std::string status; // "ok" or the per-row failure message
    std::vector<double> bound_states;
    std::vector<DegeneratePair> pairs;
    std::optional<double> delta_e;   // straddling transition gap
    std::optional<double> lambda_um; // and its wavelength, when units are given
    std::string band;
};

struct SweepOptions {
    SolverConfig solver;
    // when false, u0 / the energy window are re-derived from each row's
    // potential; when true the values in `solver` are used verbatim
    bool pin_u0 = false;
    bool pin_window = false;
    double pair_threshold = 0.1;
    std::optional<UnitContext> units; // enables the wavelength columns
};

// Runs solve+classify for each parameter value. Rows are independent jobs;
// with jobs != 1 they are fanned out across OpenMP threads, and the output
// order is by parameter value regardless of completion order. Per-row solver
// failures are recorded in the row and the sweep continues.
std::vector<SweepRow> sweep(const PotentialSpec& base, SweepParam param,
                            const std::vector<double>& values, const SweepOptions& opts,
                            int jobs = 0);

// One point of the degeneracy-splitting curve.
struct SplitPoint {
    double c = 0;
    bool ok = false;
    std::string status;
    double e_low = 0;
    double e_high = 0;
    double delta_e = 0;
    bool numerical_floor = false; // c = 0: the gap is method error, not physics
};

// Gap of the tracked level pair of modified(a, b, c) as a function of c.
// Tracking starts from the pair nearest `target` and follows the pair whose
// midpoint is nearest the previous row's midpoint. The c = 0 row, when
// present, is labeled as a numerical floor.
std::vector<SplitPoint> splitting_curve(double a, double b, std::vector<double> c_values,
                                        const SweepOptions& opts, double target = -0.25,
                                        int jobs = 0);

} // namespace aim1d
