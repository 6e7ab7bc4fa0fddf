#include "aim1d/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

#include "aim1d/version.hpp"

namespace aim1d {

std::string num_str(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string now_iso8601_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json manifest_json(const RunManifest& m) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = m.command;
    j["timestamp"] = m.timestamp.empty() ? now_iso8601_utc() : m.timestamp;
    j["config"] = m.config.is_null() ? ordered_json::object() : m.config;
    if (!m.outputs.empty())
        j["outputs"] = m.outputs;
    return j;
}

ordered_json potential_json(const PotentialSpec& spec) {
    ordered_json j;
    j["family"] = spec.family == Family::cosh_sech ? "coshsech" : "modified";
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["c"] = spec.c;
    j["canonical"] = spec.canonical();
    return j;
}

ordered_json extrema_json(const PotentialExtrema& ex) {
    ordered_json j;
    if (ex.x_max) {
        j["x_max"] = *ex.x_max;
        j["v_max"] = *ex.v_max;
    } else {
        j["x_max"] = nullptr;
        j["v_max"] = nullptr;
    }
    j["v_origin"] = ex.v_origin;
    j["v_min"] = ex.v_min;
    return j;
}

ordered_json solver_config_json(const SolverConfig& cfg) {
    ordered_json j;
    j["u0"] = cfg.u0;
    j["k_max"] = cfg.k_max;
    j["jet_order"] = cfg.resolved_jet_order();
    j["tol_converge"] = cfg.tol_converge;
    j["tol_imag"] = cfg.tol_imag;
    j["energy_window"] = {cfg.window_lo, cfg.window_hi};
    j["precision"] = cfg.precision == Precision::extended ? "extended" : "double";
    return j;
}

ordered_json units_json(const UnitContext& ctx) {
    ordered_json j;
    j["x0_angstrom"] = ctx.x0_angstrom;
    j["mass_kg"] = ctx.mass_kg;
    j["energy_scale_ev"] = ctx.energy_scale_ev;
    return j;
}

ordered_json candidate_json(const EigenvalueCandidate& c) {
    ordered_json j;
    j["re"] = c.energy.real();
    j["im"] = c.energy.imag();
    j["first_seen_k"] = c.first_seen_k;
    j["last_delta"] = c.last_delta;
    j["residual"] = c.residual;
    j["converged"] = c.converged;
    return j;
}

namespace {

ordered_json pairs_json(const std::vector<DegeneratePair>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pairs) {
        ordered_json j;
        j["e_low"] = p.e_low;
        j["e_high"] = p.e_high;
        j["gap"] = p.gap;
        arr.push_back(j);
    }
    return arr;
}

} // namespace

ordered_json report_json(const SpectrumReport& rep, const RunManifest& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = manifest_json(m);
    j["potential"] = potential_json(rep.spec);
    j["extrema"] = extrema_json(rep.extrema);
    j["solver"] = solver_config_json(rep.cfg);
    j["pair_threshold"] = rep.pair_threshold;
    j["bound_states"] = rep.bound_states;
    j["below_min_states"] = rep.below_min_states;
    j["pairs"] = pairs_json(rep.pairs);
    ordered_json cands = ordered_json::array();
    for (const auto& c : rep.candidates)
        cands.push_back(candidate_json(c));
    j["candidates"] = cands;
    return j;
}

ordered_json sweep_json(const std::vector<SweepRow>& rows, const RunManifest& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = manifest_json(m);
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["param"] = r.param;
        row["value"] = r.value;
        row["status"] = r.status;
        row["bound_states"] = r.bound_states;
        row["pairs"] = pairs_json(r.pairs);
        row["delta_e"] = r.delta_e ? ordered_json(*r.delta_e) : ordered_json(nullptr);
        row["lambda_um"] = r.lambda_um ? ordered_json(*r.lambda_um) : ordered_json(nullptr);
        row["band"] = r.band;
        arr.push_back(row);
    }
    j["rows"] = arr;
    return j;
}

ordered_json split_json(const std::vector<SplitPoint>& points, const RunManifest& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = manifest_json(m);
    ordered_json arr = ordered_json::array();
    for (const auto& p : points) {
        ordered_json row;
        row["c"] = p.c;
        row["status"] = p.status;
        row["e_low"] = p.ok ? ordered_json(p.e_low) : ordered_json(nullptr);
        row["e_high"] = p.ok ? ordered_json(p.e_high) : ordered_json(nullptr);
        row["delta_e"] = p.ok ? ordered_json(p.delta_e) : ordered_json(nullptr);
        row["numerical_floor"] = p.numerical_floor;
        arr.push_back(row);
    }
    j["points"] = arr;
    return j;
}

ordered_json oracle_json(const OracleComparison& cmp, const RunManifest& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["manifest"] = manifest_json(m);
    j["advisory"] = cmp.advisory;
    j["grid"] = {{"half_width", cmp.grid.half_width}, {"points", cmp.grid.points}};
    j["fd_eigenvalues"] = cmp.fd_eigenvalues;
    j["fd_eigenvalues_wide"] = cmp.fd_eigenvalues_wide;
    j["fd_eigenvalues_fine"] = cmp.fd_eigenvalues_fine;
    j["fd_stable"] = cmp.fd_stable;
    ordered_json rows = ordered_json::array();
    for (const auto& r : cmp.rows) {
        ordered_json row;
        row["aim_energy"] = r.aim_energy;
        row["fd_energy"] = r.fd_energy;
        row["abs_dev"] = r.abs_dev;
        row["rel_dev"] = r.rel_dev;
        row["fd_stable"] = r.fd_stable;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

namespace {

std::string join_nums(const std::vector<double>& v, const char* sep = ";") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += num_str(v[i]);
    }
    return s;
}

} // namespace

std::string report_table(const SpectrumReport& rep, char sep) {
    std::string out = "index";
    const std::string s(1, sep);
    out += s + "energy" + s + "classification" + s + "pair_index" + s + "pair_gap\n";

    auto pair_of = [&](double e) -> int {
        for (std::size_t i = 0; i < rep.pairs.size(); ++i)
            if (rep.pairs[i].e_low == e || rep.pairs[i].e_high == e)
                return static_cast<int>(i);
        return -1;
    };
    int idx = 0;
    for (double e : rep.below_min_states) {
        out += std::to_string(idx++) + s + num_str(e) + s + "below_min" + s + "-1" + s + "\n";
    }
    for (double e : rep.bound_states) {
        const int p = pair_of(e);
        out += std::to_string(idx++) + s + num_str(e) + s + "bound" + s + std::to_string(p) + s +
               (p >= 0 ? num_str(rep.pairs[p].gap) : "") + "\n";
    }
    return out;
}

std::string sweep_table(const std::vector<SweepRow>& rows, char sep) {
    const std::string s(1, sep);
    std::string out = "param" + s + "value" + s + "status" + s + "n_bound" + s + "bound_states" +
                      s + "pair_gaps" + s + "delta_e" + s + "lambda_um" + s + "band\n";
    for (const auto& r : rows) {
        std::vector<double> gaps;
        for (const auto& p : r.pairs)
            gaps.push_back(p.gap);
        out += r.param + s + num_str(r.value) + s + (r.ok ? "ok" : "failed") + s +
               std::to_string(r.bound_states.size()) + s + join_nums(r.bound_states) + s +
               join_nums(gaps) + s + (r.delta_e ? num_str(*r.delta_e) : "") + s +
               (r.lambda_um ? num_str(*r.lambda_um) : "") + s + r.band + "\n";
    }
    return out;
}

std::string split_table(const std::vector<SplitPoint>& points, char sep) {
    const std::string s(1, sep);
    std::string out = "c" + s + "delta_e" + s + "e_low" + s + "e_high" + s + "numerical_floor" +
                      s + "status\n";
    for (const auto& p : points) {
        out += num_str(p.c) + s + (p.ok ? num_str(p.delta_e) : "") + s +
               (p.ok ? num_str(p.e_low) : "") + s + (p.ok ? num_str(p.e_high) : "") + s +
               (p.numerical_floor ? "yes" : "no") + s + (p.ok ? "ok" : p.status) + "\n";
    }
    return out;
}

std::string oracle_table(const OracleComparison& cmp, char sep) {
    const std::string s(1, sep);
    std::string out =
        "aim_energy" + s + "fd_energy" + s + "abs_dev" + s + "rel_dev" + s + "fd_stable\n";
    for (const auto& r : cmp.rows) {
        out += num_str(r.aim_energy) + s + num_str(r.fd_energy) + s + num_str(r.abs_dev) + s +
               num_str(r.rel_dev) + s + (r.fd_stable ? "yes" : "no") + "\n";
    }
    return out;
}

} // namespace aim1d
