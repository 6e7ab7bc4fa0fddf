#include "aim1d/spectrum.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aim1d {

std::vector<DegeneratePair> pair_degenerate(const std::vector<double>& bound, double threshold) {
    std::vector<DegeneratePair> pairs;
    std::size_t i = 0;
    while (i + 1 < bound.size()) {
        const double gap = bound[i + 1] - bound[i];
        if (gap < threshold) {
            pairs.push_back({bound[i], bound[i + 1], gap});
            i += 2;
        } else {
            ++i;
        }
    }
    return pairs;
}

SpectrumReport classify(const std::vector<EigenvalueCandidate>& candidates,
                        const PotentialExtrema& ex, double tol_imag, double pair_threshold) {
    SpectrumReport rep;
    rep.extrema = ex;
    rep.pair_threshold = pair_threshold;
    rep.candidates = candidates;
    for (const auto& cand : candidates) {
        if (!cand.converged || std::fabs(cand.energy.imag()) >= tol_imag)
            continue;
        const double e = cand.energy.real();
        if (e < ex.v_origin)
            rep.below_min_states.push_back(e);
        else
            rep.bound_states.push_back(e);
    }
    std::sort(rep.bound_states.begin(), rep.bound_states.end());
    std::sort(rep.below_min_states.begin(), rep.below_min_states.end());
    rep.pairs = pair_degenerate(rep.bound_states, pair_threshold);
    return rep;
}

SpectrumReport solve_spectrum(const PotentialSpec& spec, const SolverConfig& cfg,
                              double pair_threshold, Exec ex) {
    const SolverConfig rc = cfg.resolved_for(spec);
    const auto candidates = solve(spec, rc, ex);
    auto rep = classify(candidates, potential_extrema(spec), rc.tol_imag, pair_threshold);
    rep.spec = spec;
    rep.cfg = rc;
    return rep;
}

std::optional<StraddlingTransition> straddling_transition(const SpectrumReport& report) {
    if (!report.extrema.v_max)
        return std::nullopt;
    const double vmax = *report.extrema.v_max;
    StraddlingTransition tr;
    bool have_inside = false, have_outside = false;
    for (double e : report.bound_states) {
        if (e < vmax) {
            tr.e_inside = e;
            have_inside = true;
        } else if (!have_outside) {
            tr.e_outside = e;
            have_outside = true;
        }
    }
    if (!have_inside || !have_outside)
        return std::nullopt;
    tr.delta_e = tr.e_outside - tr.e_inside;
    return tr;
}

const char* sweep_param_name(SweepParam p) {
    switch (p) {
    case SweepParam::a:
        return "a";
    case SweepParam::b:
        return "b";
    case SweepParam::c:
        return "c";
    }
    return "?";
}

namespace {

PotentialSpec with_param(PotentialSpec spec, SweepParam p, double value) {
    switch (p) {
    case SweepParam::a:
        spec.a = value;
        break;
    case SweepParam::b:
        spec.b = value;
        break;
    case SweepParam::c:
        // sweeping the damping parameter implies the modified family
        spec.family = Family::modified_cosh_sech;
        spec.c = value;
        break;
    }
    return spec;
}

SolverConfig row_config(const SweepOptions& opts) {
    SolverConfig cfg = opts.solver;
    if (!opts.pin_u0)
        cfg.u0 = std::numeric_limits<double>::quiet_NaN();
    if (!opts.pin_window) {
        cfg.window_lo = -std::numeric_limits<double>::infinity();
        cfg.window_hi = std::numeric_limits<double>::infinity();
    }
    return cfg;
}

int resolve_jobs(int jobs) {
    if (jobs > 0)
        return jobs;
    if (exec::max_threads() > 0)
        return exec::max_threads();
    return exec::hardware_threads();
}

template <class Fn>
void run_rows(std::size_t n, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        fn(static_cast<std::size_t>(i));
}

} // namespace

std::vector<SweepRow> sweep(const PotentialSpec& base, SweepParam param,
                            const std::vector<double>& values, const SweepOptions& opts,
                            int jobs) {
    std::vector<SweepRow> rows(values.size());
    const int njobs = resolve_jobs(jobs);
    // inner solves stay serial when rows are fanned out
    const Exec inner = njobs > 1 ? Exec::seq : Exec::par;

    run_rows(values.size(), njobs, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.param = sweep_param_name(param);
        row.value = values[i];
        try {
            const auto spec = with_param(base, param, values[i]);
            const auto rep = solve_spectrum(spec, row_config(opts), opts.pair_threshold, inner);
            row.bound_states = rep.bound_states;
            row.pairs = rep.pairs;
            if (opts.units) {
                if (const auto tr = straddling_transition(rep)) {
                    row.delta_e = tr->delta_e;
                    row.lambda_um = transition_wavelength_um(tr->delta_e, *opts.units);
                    row.band = band_name(classify_band(*row.lambda_um));
                }
            }
            row.ok = true;
            row.status = "ok";
        } catch (const Error& e) {
            row.ok = false;
            row.status = e.what();
        }
    });
    return rows;
}

std::vector<SplitPoint> splitting_curve(double a, double b, std::vector<double> c_values,
                                        const SweepOptions& opts, double target, int jobs) {
    std::sort(c_values.begin(), c_values.end());
    std::vector<SplitPoint> points(c_values.size());
    std::vector<SpectrumReport> reports(c_values.size());
    std::vector<std::string> failures(c_values.size());

    const int njobs = resolve_jobs(jobs);
    const Exec inner = njobs > 1 ? Exec::seq : Exec::par;
    run_rows(c_values.size(), njobs, [&](std::size_t i) {
        PotentialSpec spec;
        spec.family = c_values[i] > 0 ? Family::modified_cosh_sech : Family::cosh_sech;
        spec.a = a;
        spec.b = b;
        spec.c = c_values[i];
        try {
            reports[i] = solve_spectrum(spec, row_config(opts), opts.pair_threshold, inner);
        } catch (const Error& e) {
            failures[i] = e.what();
        }
    });

    // walk rows in ascending c, following the pair whose midpoint is nearest
    // the previous row's midpoint
    double track = target;
    for (std::size_t i = 0; i < c_values.size(); ++i) {
        SplitPoint& pt = points[i];
        pt.c = c_values[i];
        pt.numerical_floor = c_values[i] == 0.0;
        if (!failures[i].empty()) {
            pt.status = failures[i];
            continue;
        }
        const auto& bound = reports[i].bound_states;
        if (bound.size() < 2) {
            pt.status = "pair lost: fewer than two bound states";
            continue;
        }
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j + 1 < bound.size(); ++j) {
            const double mid = 0.5 * (bound[j] + bound[j + 1]);
            const double dist = std::fabs(mid - track);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        pt.e_low = bound[best];
        pt.e_high = bound[best + 1];
        pt.delta_e = pt.e_high - pt.e_low;
        pt.ok = true;
        pt.status = "ok";
        track = 0.5 * (pt.e_low + pt.e_high);
    }
    return points;
}

} // namespace aim1d
