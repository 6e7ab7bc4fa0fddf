#include "aim1d/aim.hpp"

namespace aim1d {

std::vector<EigenvalueCandidate> solve(const PotentialSpec& spec, const SolverConfig& cfg,
                                       Exec ex) {
    const SolverConfig rc = cfg.resolved_for(spec);
    rc.validate();
    if (!std::isfinite(rc.u0))
        throw UsageError("solve: expansion point u0 must be finite");
    const int order = rc.resolved_jet_order();
    if (rc.precision == Precision::extended) {
        const auto base = init_coeffs<long double>(spec, static_cast<long double>(rc.u0), order);
        return solve_t<long double>(base, rc, ex);
    }
    const auto base = init_coeffs<double>(spec, rc.u0, order);
    return solve_t<double>(base, rc, ex);
}

} // namespace aim1d
