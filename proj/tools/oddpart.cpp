// Command line for constructing odd partitions of the interval,
// enumerating their merged length sequence, and probing the decay,
// tail-sum and spectral quantities attached to them.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "oddpart/analysis/decay_fit.hpp"
#include "oddpart/analysis/gamma_limit.hpp"
#include "oddpart/analysis/liminf.hpp"
#include "oddpart/analysis/tau_bracket.hpp"
#include "oddpart/decreasing_stream.hpp"
#include "oddpart/family_spec.hpp"
#include "oddpart/io.hpp"
#include "oddpart/np/nystrom.hpp"
#include "oddpart/np/solve_xi0.hpp"
#include "oddpart/np/weyl.hpp"
#include "oddpart/verify.hpp"

namespace {

using namespace oddpart;

struct GlobalOpts {
    std::string format = "csv";
    std::string output;
    std::string precision = "double";
    std::uint64_t seed = 7;
    long ncap = 512;

    np::Precision precision_mode() const {
        return precision == "extended" ? np::Precision::Extended : np::Precision::Double;
    }
    FamilySpecOptions family_options() const {
        FamilySpecOptions opt;
        opt.spectrum.n_cap = ncap;
        opt.spectrum.precision = precision_mode();
        opt.default_seed = seed;
        return opt;
    }
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw ArgumentOutOfDomain("cannot open output file '" + g.output + "'");
    out << text;
}

std::vector<std::uint64_t> parse_windows_arg(const std::string& text,
                                             std::vector<analysis::Window>& windows) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ArgumentOutOfDomain("windows look like lo:hi[,lo:hi...]");
        windows.push_back({std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1))});
    }
    return {};
}

int run_enumerate(const GlobalOpts& g, const std::string& family_spec, std::uint64_t count) {
    auto family = make_family(family_spec, g.family_options());
    std::ostringstream os;
    std::visit(
        [&](const auto& fam) {
            auto rows = enumerate(*fam, count);
            if (g.format == "json")
                os << io::enumeration_json(rows).dump(2) << '\n';
            else
                io::write_enumeration_csv(os, rows);
        },
        family);
    emit(g, os.str());
    return 0;
}

int run_decay(const GlobalOpts& g, const std::string& family_spec, std::uint64_t jlo,
              std::uint64_t jhi) {
    auto family = make_family(family_spec, g.family_options());
    std::ostringstream os;
    std::visit(
        [&](const auto& fam) {
            auto fit = analysis::decay_fit(*fam, jlo, jhi);
            if (g.format == "svg") {
                std::vector<std::pair<std::uint64_t, double>> samples;
                for (auto j : analysis::dyadic_probes(jlo, jhi))
                    samples.emplace_back(j, fam->has_nth_value()
                                                ? to_double(fam->nth_value(j))
                                                : fit.C_hat * std::pow(double(j), fit.alpha_hat));
                io::write_decay_svg(os, samples, fit);
            } else if (g.format == "json") {
                nlohmann::json j = io::fit_json(fit);
                j["family"] = fam->name();
                os << j.dump(2) << '\n';
            } else {
                os << "family,window,C_hat,alpha_hat,residual\n"
                   << fam->name() << ',' << jlo << ':' << jhi << ',' << io::fmt(fit.C_hat) << ','
                   << io::fmt(fit.alpha_hat) << ',' << io::fmt(fit.residual) << '\n';
            }
        },
        family);
    emit(g, os.str());
    return 0;
}

int run_tau(const GlobalOpts& g, const std::string& family_spec, double p, long rows) {
    auto family = make_family(family_spec, g.family_options());
    std::ostringstream os;
    std::visit(
        [&](const auto& fam) {
            auto br = analysis::tau_bracket(*fam, p, rows);
            if (g.format == "json") {
                nlohmann::json j{{"family", fam->name()}, {"p", br.p},
                                 {"lower", br.lower},     {"upper", br.upper},
                                 {"rows_used", br.rows_used}, {"bound", br.bound_ref}};
                os << j.dump(2) << '\n';
            } else {
                io::write_tau_csv(os, fam->name(), br);
            }
        },
        family);
    emit(g, os.str());
    return 0;
}

int run_gamma_probe(const GlobalOpts& g, const std::string& plist) {
    std::vector<double> ps;
    if (plist.empty()) {
        for (int k = 3; k <= 10; ++k) ps.push_back(2.0 + std::exp2(-k));
    } else {
        std::stringstream ss(plist);
        std::string item;
        while (std::getline(ss, item, ',')) ps.push_back(std::stod(item));
    }
    auto probe = analysis::gamma_limit_probe(ps);
    const double target = analysis::gamma_limit_target();
    std::ostringstream os;
    if (g.format == "json") {
        nlohmann::json j{{"target", target}, {"extrapolated", probe.extrapolated}};
        j["values"] = nlohmann::json::array();
        for (const auto& [p, v] : probe.values) j["values"].push_back({{"p", p}, {"value", v}});
        os << j.dump(2) << '\n';
    } else {
        io::write_gamma_csv(os, probe, target);
    }
    emit(g, os.str());
    return 0;
}

int run_liminf(const GlobalOpts& g, const std::string& family_spec,
               const std::string& windows_arg) {
    std::vector<analysis::Window> windows;
    parse_windows_arg(windows_arg, windows);
    auto family = make_family(family_spec, g.family_options());
    std::ostringstream os;
    std::visit(
        [&](const auto& fam) {
            auto res = analysis::liminf_probe(*fam, windows);
            if (g.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : res)
                    j.push_back({{"window", {r.window.j_lo, r.window.j_hi}}, {"inf_c", r.inf_c}});
                os << j.dump(2) << '\n';
            } else {
                io::write_liminf_csv(os, fam->name(), res);
            }
        },
        family);
    emit(g, os.str());
    return 0;
}

int run_np_eigen(const GlobalOpts& g, double xi0, long n, bool doubled) {
    np::SpectrumOptions sopt{std::max(g.ncap, n), g.precision_mode()};
    auto row = families::spheroid_row(xi0, n, doubled, sopt);
    std::ostringstream os;
    if (g.format == "json") {
        nlohmann::json j{{"xi0", xi0}, {"n", n}, {"doubled", doubled}};
        j["lengths"] = row.lengths;
        j["target_sum"] = to_double(row.target_sum);
        os << j.dump(2) << '\n';
    } else {
        os << "n,k,lambda\n";
        long k = 1;
        for (double v : row.lengths) os << n << ',' << k++ << ',' << io::fmt(v) << '\n';
    }
    emit(g, os.str());
    return 0;
}

int run_np_weyl(const GlobalOpts& g, double xi0, bool with_fit) {
    np::WeylOptions opt;
    opt.with_fit = with_fit;
    opt.spectrum.n_cap = g.ncap;
    opt.spectrum.precision = g.precision_mode();
    auto report = np::weyl_coefficient(np::SpheroidShape::of(xi0), opt);
    std::ostringstream os;
    if (g.format == "csv") {
        os << "xi0,willmore,chi,coeff,coeff_doubled\n"
           << io::fmt(xi0) << ',' << io::fmt(report.willmore) << ',' << report.euler_char << ','
           << io::fmt(report.coeff) << ',' << io::fmt(report.coeff_doubled) << '\n';
    } else {
        os << io::weyl_json(report).dump(2) << '\n';
    }
    emit(g, os.str());
    return 0;
}

int run_np_solve(const GlobalOpts& g, double target) {
    np::SolveOptions opt;
    opt.precision = g.precision_mode();
    auto shape = np::solve_xi0(target, opt);
    auto report = np::weyl_coefficient(shape);
    std::ostringstream os;
    nlohmann::json j = io::weyl_json(report);
    j["target"] = target;
    j["sphere_limit"] = shape.sphere_limit;
    os << j.dump(2) << '\n';
    emit(g, os.str());
    return 0;
}

int run_np_oracle(const GlobalOpts& g, double xi0, bool sphere, int mesh, int k) {
    np::NystromOptions opt;
    opt.mesh_size = mesh;
    opt.top_k = k;
    const auto shape = sphere ? np::SpheroidShape::sphere() : np::SpheroidShape::of(xi0);
    auto oracle = np::nystrom_eigenvalues(shape, opt);

    std::vector<double> formula;
    if (sphere) {
        for (long n = 0; formula.size() < static_cast<std::size_t>(2 * k); ++n)
            for (long m = -n; m <= n; ++m) formula.push_back(0.5 / (2 * n + 1));
    } else {
        np::SpectrumOptions sopt{g.ncap, g.precision_mode()};
        np::SpheroidSpectrum spec(xi0, sopt);
        for (long n = 0; n * n < 4 * k + 16; ++n)
            for (long m = -n; m <= n; ++m) formula.push_back(spec.eigenvalue(n, m));
    }
    std::sort(formula.begin(), formula.end(), std::greater<>());

    std::ostringstream os;
    if (g.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (int i = 0; i < k; ++i)
            j.push_back({{"rank", i + 1},
                         {"oracle", oracle[i]},
                         {"formula", formula[i]},
                         {"abs_diff", std::abs(oracle[i] - formula[i])}});
        os << j.dump(2) << '\n';
    } else {
        os << "rank,oracle,formula,abs_diff\n";
        for (int i = 0; i < k; ++i)
            os << i + 1 << ',' << io::fmt(oracle[i]) << ',' << io::fmt(formula[i]) << ','
               << io::fmt(std::abs(oracle[i] - formula[i])) << '\n';
    }
    emit(g, os.str());
    return 0;
}

int run_verify(const GlobalOpts& g) {
    auto results = run_verification();
    std::ostringstream os;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        os << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
    os << (all ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    emit(g, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd interval partitions, their decreasing enumeration, and the "
                 "Neumann-Poincare spectra that realize prescribed decay coefficients"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("ODDPART_PRECISION")) g.precision = env;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "write to a file instead of stdout");
    app.add_option("--precision", g.precision, "working precision for spectral code")
        ->check(CLI::IsMember({"double", "extended"}));
    app.add_option("--seed", g.seed, "default seed for random families");
    app.add_option("--ncap", g.ncap, "spectral degree cap");

    std::string family_spec = "equi";
    std::uint64_t count = 20, jlo = 1000, jhi = 100000;
    double p = 3.0, xi0 = 1.5, target = 0.6;
    long rows = 1000, degree = 1;
    bool doubled = false, no_fit = false, sphere = false;
    int mesh = 1024, topk = 9;
    std::string windows_arg = "10000:40000";
    std::string plist;

    auto* c_enum = app.add_subcommand("enumerate", "first k terms of the decreasing sequence");
    c_enum->add_option("--family", family_spec, "family spec")->capture_default_str();
    c_enum->add_option("--count", count, "terms to emit")->capture_default_str();

    auto* c_decay = app.add_subcommand("decay", "power-law fit of a_j over a window");
    c_decay->add_option("--family", family_spec)->capture_default_str();
    c_decay->add_option("--jlo", jlo)->capture_default_str();
    c_decay->add_option("--jhi", jhi)->capture_default_str();

    auto* c_tau = app.add_subcommand("tau", "two-sided enclosure of the p-power sum");
    c_tau->add_option("--family", family_spec)->capture_default_str();
    c_tau->add_option("--p", p)->capture_default_str();
    c_tau->add_option("--rows", rows)->capture_default_str();

    auto* c_gamma = app.add_subcommand("gamma-probe", "zeta tail limit toward (log2+gamma)/2");
    c_gamma->add_option("--p-list", plist, "comma separated p values in (2,3]");

    auto* c_liminf = app.add_subcommand("liminf", "inf of sqrt(j) a_j over windows");
    c_liminf->add_option("--family", family_spec)->capture_default_str();
    c_liminf->add_option("--windows", windows_arg, "lo:hi[,lo:hi...]")->capture_default_str();

    auto* c_np = app.add_subcommand("np", "Neumann-Poincare spectral operations");
    c_np->require_subcommand(1);
    auto* c_eigen = c_np->add_subcommand("eigen", "one spectral partition row");
    c_eigen->add_option("--xi0", xi0)->required();
    c_eigen->add_option("--n", degree)->capture_default_str();
    c_eigen->add_flag("--doubled", doubled, "scale the row onto [0,1]");
    auto* c_weyl = c_np->add_subcommand("weyl", "Willmore energy and decay coefficient");
    c_weyl->add_option("--xi0", xi0)->required();
    c_weyl->add_flag("--no-fit", no_fit, "skip the empirical stream fit");
    auto* c_solve = c_np->add_subcommand("solve-c", "invert the target decay coefficient");
    c_solve->add_option("--target", target)->required();
    auto* c_oracle = c_np->add_subcommand("oracle", "Nystrom discretization cross-check");
    c_oracle->add_option("--xi0", xi0);
    c_oracle->add_flag("--sphere", sphere, "use the round sphere");
    c_oracle->add_option("--mesh", mesh)->capture_default_str();
    c_oracle->add_option("--k", topk)->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "run the invariant battery");
    (void)c_verify;
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    for (auto* sub : c_np->get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_enum) return run_enumerate(g, family_spec, count);
        if (*c_decay) return run_decay(g, family_spec, jlo, jhi);
        if (*c_tau) return run_tau(g, family_spec, p, rows);
        if (*c_gamma) return run_gamma_probe(g, plist);
        if (*c_liminf) return run_liminf(g, family_spec, windows_arg);
        if (*c_eigen) return run_np_eigen(g, xi0, degree, doubled);
        if (*c_weyl) return run_np_weyl(g, xi0, !no_fit);
        if (*c_solve) return run_np_solve(g, target);
        if (*c_oracle) return run_np_oracle(g, xi0, sphere, mesh, topk);
        if (*c_verify) return run_verify(g);
    } catch (const oddpart::Error& e) {
        std::cerr << e.what() << '\n';  // what() leads with the error name
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
