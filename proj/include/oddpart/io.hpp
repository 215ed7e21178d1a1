#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddpart/analysis/decay_fit.hpp"
#include "oddpart/analysis/gamma_limit.hpp"
#include "oddpart/analysis/liminf.hpp"
#include "oddpart/analysis/tau_bracket.hpp"
#include "oddpart/decreasing_stream.hpp"
#include "oddpart/np/weyl.hpp"
#include "oddpart/rational.hpp"

namespace oddpart::io {

/// Fixed-width float formatting; identical bytes for identical runs.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string value_string(const Rational& v) { return rational_to_string(v); }
inline std::string value_string(double v) { return fmt(v); }

/// Enumeration CSV, schema fixed: j,a_j,c_j,origin_N,origin_k.
/// Exact families print a_j as p/q so diagram prefixes diff cleanly.
template <class Scalar>
void write_enumeration_csv(std::ostream& os, const std::vector<Emitted<Scalar>>& rows) {
    os << "j,a_j,c_j,origin_N,origin_k\n";
    std::uint64_t j = 0;
    for (const auto& e : rows) {
        ++j;
        const double c = std::sqrt(static_cast<double>(j)) * to_double(e.value);
        os << j << ',' << value_string(e.value) << ',' << fmt(c) << ',' << e.origin_n << ','
           << e.origin_k << '\n';
    }
}

template <class Scalar>
nlohmann::json enumeration_json(const std::vector<Emitted<Scalar>>& rows) {
    nlohmann::json out = nlohmann::json::array();
    std::uint64_t j = 0;
    for (const auto& e : rows) {
        ++j;
        out.push_back({{"j", j},
                       {"a_j", value_string(e.value)},
                       {"c_j", std::sqrt(static_cast<double>(j)) * to_double(e.value)},
                       {"origin_N", e.origin_n},
                       {"origin_k", e.origin_k}});
    }
    return out;
}

inline nlohmann::json fit_json(const analysis::DecayFit& fit) {
    nlohmann::json j{{"C_hat", fit.C_hat},
                     {"alpha_hat", fit.alpha_hat},
                     {"window", {fit.j_lo, fit.j_hi}},
                     {"residual", fit.residual}};
    if (fit.c_extrapolated) j["c_extrapolated"] = *fit.c_extrapolated;
    return j;
}

/// WeylReport JSON, schema fixed:
/// {xi0, willmore, chi, coeff, coeff_doubled, fit:{C_hat, alpha_hat, window, residual}}
inline nlohmann::json weyl_json(const np::WeylReport& r) {
    nlohmann::json j{{"xi0", r.shape.sphere_limit ? nlohmann::json("inf")
                                                  : nlohmann::json(r.shape.xi0)},
                     {"willmore", r.willmore},
                     {"chi", r.euler_char},
                     {"coeff", r.coeff},
                     {"coeff_doubled", r.coeff_doubled}};
    if (r.fit)
        j["fit"] = {{"C_hat", r.fit->C_hat},
                    {"alpha_hat", r.fit->alpha_hat},
                    {"window", {r.fit->j_lo, r.fit->j_hi}},
                    {"residual", r.fit->residual}};
    return j;
}

/// Analysis CSV, columns: family, p or window, value, bound, margin.
inline void write_tau_csv(std::ostream& os, const std::string& family,
                          const analysis::TauBracket& br) {
    os << "family,p,value,bound,margin\n";
    os << family << ',' << fmt(br.p) << ',' << fmt(br.lower) << ',' << fmt(br.bound_ref) << ','
       << fmt(br.lower - br.bound_ref) << '\n';
}

inline void write_liminf_csv(std::ostream& os, const std::string& family,
                             const std::vector<analysis::WindowInfimum>& rows) {
    os << "family,window,value,bound,margin\n";
    for (const auto& r : rows)
        os << family << ',' << r.window.j_lo << ':' << r.window.j_hi << ',' << fmt(r.inf_c)
           << ",0.5," << fmt(r.inf_c - 0.5) << '\n';
}

inline void write_gamma_csv(std::ostream& os, const analysis::GammaLimitProbe& probe,
                            double target) {
    os << "family,p,value,bound,margin\n";
    for (const auto& [p, v] : probe.values)
        os << "zeta-tail," << fmt(p) << ',' << fmt(v) << ',' << fmt(target) << ','
           << fmt(v - target) << '\n';
    os << "zeta-tail,extrapolated," << fmt(probe.extrapolated) << ',' << fmt(target) << ','
       << fmt(probe.extrapolated - target) << '\n';
}

/// Static log-log scatter with the fitted line; no external assets.
inline void write_decay_svg(std::ostream& os,
                            const std::vector<std::pair<std::uint64_t, double>>& samples,
                            const analysis::DecayFit& fit) {
    const double W = 640, H = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& [j, a] : samples) {
        xlo = std::min(xlo, std::log10(double(j)));
        xhi = std::max(xhi, std::log10(double(j)));
        ylo = std::min(ylo, std::log10(a));
        yhi = std::max(yhi, std::log10(a));
    }
    if (xhi <= xlo) xhi = xlo + 1;
    if (yhi <= ylo) yhi = ylo + 1;
    const auto px = [&](double lx) { return ml + (lx - xlo) / (xhi - xlo) * (W - ml - mr); };
    const auto py = [&](double ly) { return H - mb - (ly - ylo) / (yhi - ylo) * (H - mt - mb); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(H - mb) << "\" x2=\"" << fmt(W - mr)
       << "\" y2=\"" << fmt(H - mb) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(ml) << "\" y2=\""
       << fmt(H - mb) << "\" stroke=\"black\"/>\n";
    const double fy0 = std::log10(fit.C_hat) + fit.alpha_hat * xlo;
    const double fy1 = std::log10(fit.C_hat) + fit.alpha_hat * xhi;
    os << "<line x1=\"" << fmt(px(xlo)) << "\" y1=\"" << fmt(py(fy0)) << "\" x2=\""
       << fmt(px(xhi)) << "\" y2=\"" << fmt(py(fy1)) << "\" stroke=\"#c33\"/>\n";
    for (const auto& [j, a] : samples)
        os << "<circle cx=\"" << fmt(px(std::log10(double(j)))) << "\" cy=\""
           << fmt(py(std::log10(a))) << "\" r=\"3\" fill=\"#235\"/>\n";
    os << "<text x=\"" << fmt(W / 2) << "\" y=\"" << fmt(H - 8)
       << "\" text-anchor=\"middle\" font-size=\"13\">log10 j</text>\n";
    os << "<text x=\"14\" y=\"" << fmt(H / 2)
       << "\" font-size=\"13\" transform=\"rotate(-90 14 " << fmt(H / 2)
       << ")\" text-anchor=\"middle\">log10 a_j</text>\n";
    os << "<text x=\"" << fmt(W - mr) << "\" y=\"" << fmt(mt + 12)
       << "\" text-anchor=\"end\" font-size=\"13\">a_j ~ " << fmt(fit.C_hat) << " j^"
       << fmt(fit.alpha_hat) << "</text>\n";
    os << "</svg>\n";
}

}  // namespace oddpart::io
