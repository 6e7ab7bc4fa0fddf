#include "aim1d/potential.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace aim1d {

namespace {

constexpr double kLn2 = 0.6931471805599453;
// exp() arguments above this are treated as overflow
constexpr double kExpCap = 700.0;

double log_cosh(double x) {
    const double ax = std::fabs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - kLn2;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

PotentialSpec PotentialSpec::parse(std::string_view text) {
    const std::string_view t = strip(text);
    const auto open = t.find('(');
    if (open == std::string_view::npos || t.back() != ')')
        throw UsageError("potential spec must look like coshsech(a=3,b=1): got '" +
                         std::string(text) + "'");
    const std::string_view name = strip(t.substr(0, open));
    PotentialSpec spec;
    if (name == "coshsech")
        spec.family = Family::cosh_sech;
    else if (name == "modified")
        spec.family = Family::modified_cosh_sech;
    else
        throw UsageError("unknown potential family '" + std::string(name) +
                         "' (expected coshsech or modified)");

    std::string_view body = t.substr(open + 1, t.size() - open - 2);
    while (!strip(body).empty()) {
        const auto comma = body.find(',');
        std::string_view item = strip(comma == std::string_view::npos ? body : body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("bad key=value pair '" + std::string(item) + "' in potential spec");
        const std::string_view key = strip(item.substr(0, eq));
        const std::string val(strip(item.substr(eq + 1)));
        double parsed = 0;
        try {
            std::size_t pos = 0;
            parsed = std::stod(val, &pos);
            if (pos != val.size())
                throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw UsageError("bad numeric value '" + val + "' in potential spec");
        }
        if (key == "a")
            spec.a = parsed;
        else if (key == "b")
            spec.b = parsed;
        else if (key == "c")
            spec.c = parsed;
        else
            throw UsageError("unknown potential parameter '" + std::string(key) + "'");
    }
    spec.validate();
    return spec;
}

std::string PotentialSpec::canonical() const {
    std::string s = family == Family::cosh_sech ? "coshsech(" : "modified(";
    s += "a=" + fmt_num(a) + ",b=" + fmt_num(b);
    if (family == Family::modified_cosh_sech)
        s += ",c=" + fmt_num(c);
    s += ")";
    return s;
}

void PotentialSpec::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw UsageError("potential parameters must be finite");
    if (b < 0)
        throw UsageError("potential parameter b must be >= 0");
    if (c < 0)
        throw UsageError("potential parameter c must be >= 0");
    if (family == Family::cosh_sech && c != 0)
        throw UsageError("coshsech takes no c parameter (use modified)");
}

double v_eval(const PotentialSpec& spec, double x) {
    spec.validate();
    if (!std::isfinite(x))
        throw UsageError("v_eval: x must be finite");
    double total = 0.0;
    if (spec.b != 0.0) {
        // -(b^2/4) cosh^2 x e^{-c x^2}, evaluated as a single exponential so
        // the Gaussian damping can cancel the cosh growth before it overflows
        const double expo = 2.0 * log_cosh(x) - spec.c * x * x;
        if (expo > kExpCap)
            throw PotentialOverflow("v_eval: cosh^2 term exceeds floating range at x = " +
                                    fmt_num(x));
        total -= (spec.b * spec.b / 4.0) * std::exp(expo);
    }
    const double sech = 2.0 * std::exp(-std::fabs(x)) / (1.0 + std::exp(-2.0 * std::fabs(x)));
    total -= (spec.a * spec.a - 0.25) * sech * sech;
    return total;
}

PotentialExtrema extrema(const PotentialSpec& spec) {
    spec.validate();
    if (spec.family == Family::modified_cosh_sech && spec.c > 0)
        throw UsageError("extrema: closed forms hold only for c = 0; use locate_extrema_numeric");
    PotentialExtrema ex;
    ex.v_origin = v_eval(spec, 0.0);
    ex.v_min = -(spec.a * spec.a - 0.25) - spec.b * spec.b / 4.0;
    const double disc = 4.0 * spec.a * spec.a - 1.0;
    if (disc > 0 && spec.b > 0 && spec.b < std::sqrt(disc)) {
        ex.x_max = std::acosh(std::pow(disc / (spec.b * spec.b), 0.25));
        ex.v_max = -(spec.b / 2.0) * std::sqrt(disc);
    }
    return ex;
}

namespace {

// golden-section maximization of V on [lo, hi]
double golden_max(const PotentialSpec& spec, double lo, double hi) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = v_eval(spec, x1);
    double f2 = v_eval(spec, x2);
    while (b - a > 1e-12 * std::max(1.0, std::fabs(b))) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = v_eval(spec, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = v_eval(spec, x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

PotentialExtrema locate_extrema_numeric(const PotentialSpec& spec) {
    spec.validate();
    if (!(spec.family == Family::modified_cosh_sech && spec.c > 0))
        throw UsageError("locate_extrema_numeric applies to the modified family with c > 0");

    PotentialExtrema ex;
    ex.v_origin = v_eval(spec, 0.0);
    ex.v_min = ex.v_origin;

    // Scan window: march until the cosh^2 e^{-c x^2} factor has decayed below
    // 1e-8 of the largest value seen, or its exponent nears the floating
    // range (for small c it peaks astronomically high before decaying).
    const double ln_cut = std::log(1e-8);
    double x_cut = 0.0;
    double ln_peak = -std::numeric_limits<double>::infinity();
    for (double x = 0.0; x <= 400.0; x += 0.05) {
        const double lnm = 2.0 * log_cosh(x) - spec.c * x * x;
        ln_peak = std::max(ln_peak, lnm);
        x_cut = x;
        if (lnm > 650.0 || (x > 1.0 && lnm < ln_peak + ln_cut))
            break;
    }

    // locate the barrier top: the largest interior strict local maximum
    const int n = 8192;
    const double h = x_cut / n;
    double best_x = 0.0;
    double best_v = -std::numeric_limits<double>::infinity();
    double vm1 = ex.v_origin;
    double v0 = v_eval(spec, h);
    for (int i = 1; i < n; ++i) {
        const double vp1 = v_eval(spec, (i + 1) * h);
        if (v0 > vm1 && v0 > vp1 && v0 > best_v) {
            const double refined = golden_max(spec, (i - 1) * h, (i + 1) * h);
            const double vr = v_eval(spec, refined);
            if (vr > best_v) {
                best_v = vr;
                best_x = refined;
            }
        }
        vm1 = v0;
        v0 = vp1;
    }
    if (best_v > -std::numeric_limits<double>::infinity()) {
        ex.x_max = best_x;
        ex.v_max = best_v;
    }
    return ex;
}

PotentialExtrema potential_extrema(const PotentialSpec& spec) {
    if (spec.family == Family::modified_cosh_sech && spec.c > 0)
        return locate_extrema_numeric(spec);
    return extrema(spec);
}

double default_u0(const PotentialSpec& spec) {
    const auto ex = potential_extrema(spec);
    return ex.x_max ? std::sinh(*ex.x_max) : 0.0;
}

} // namespace aim1d
