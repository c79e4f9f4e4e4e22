// Command-line front end: geometry, solve, verify, sweep, compat and
// counterexample subcommands emitting JSON documents (stdout) and CSV grids.
//
// Exit codes: 0 success / all checks pass, 1 failed verification, 2 bad
// usage or unparseable input, 3 numeric errors (quadrature depth, divergent
// parameters, ...) with the partial document still emitted.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "serrin/compat.hpp"
#include "serrin/curvature.hpp"
#include "serrin/geometry.hpp"
#include "serrin/kernels.hpp"
#include "serrin/radial.hpp"
#include "serrin/report_json.hpp"
#include "serrin/verify.hpp"

namespace {

using nlohmann::json;
using namespace serrin;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Values resolved from flags first, then the optional --config JSON file.
struct ParamBag {
    json cfg = json::object();

    double num(const CLI::Option* opt, double bound, const std::string& key,
               std::optional<double> fallback = {}) const {
        if (opt != nullptr && opt->count() > 0) return bound;
        if (cfg.contains(key) && cfg[key].is_number()) return cfg[key].get<double>();
        if (!std::isnan(bound)) return bound;
        if (fallback) return *fallback;
        throw UsageError("missing required parameter --" + key);
    }
    int integer(const CLI::Option* opt, int bound, const std::string& key) const {
        if (opt != nullptr && opt->count() > 0) return bound;
        if (cfg.contains(key) && cfg[key].is_number_integer()) return cfg[key].get<int>();
        if (bound != std::numeric_limits<int>::min()) return bound;
        throw UsageError("missing required parameter --" + key);
    }
    std::string str(const CLI::Option* opt, const std::string& bound, const std::string& key,
                    std::optional<std::string> fallback = {}) const {
        if (opt != nullptr && opt->count() > 0) return bound;
        if (cfg.contains(key) && cfg[key].is_string()) return cfg[key].get<std::string>();
        if (!bound.empty()) return bound;
        if (fallback) return *fallback;
        throw UsageError("missing required parameter --" + key);
    }
};

SingularityMode parse_mode(const std::string& mode) {
    if (mode == "origin") return SingularityMode::OriginCentered;
    if (mode == "infinity") return SingularityMode::InfinityCentered;
    throw UsageError("mode must be 'origin' or 'infinity'");
}

void emit(const JsonWriter& w) { std::cout << w.str() << "\n"; }

void write_config(JsonWriter& w, const ManifoldConfig& cfg) {
    w.key("n").value(cfg.n);
    w.key("gamma").value(cfg.gamma);
    w.key("alpha").value(cfg.alpha);
    w.key("mode").value(cfg.mode == SingularityMode::OriginCentered ? "origin" : "infinity");
}

void write_samples(JsonWriter& w, const RadialProfile& p, double lo, double hi, int count) {
    w.key("samples").begin_array();
    for (int i = 0; i < count; ++i) {
        const double r = lo + (hi - lo) * i / (count - 1);
        w.begin_object();
        w.key("r").value(r);
        w.key("value").value(p.value(r));
        w.key("deriv").value(p.deriv(r));
        w.key("deriv2").value(p.deriv2(r));
        w.end_object();
    }
    w.end_array();
}

// Reports produced by run_suite mark per-check numeric failures with an
// "error: " detail; those escalate the exit code to 3.
int reports_exit_code(const std::vector<IdentityReport>& reports) {
    int code = 0;
    for (const IdentityReport& r : reports) {
        if (r.detail.rfind("error: ", 0) == 0) return 3;
        if (!r.pass) code = 1;
    }
    return code;
}

int cmd_geometry(const ManifoldConfig& cfg, double R) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("geometry");
    write_config(w, cfg);
    w.key("radius").value(R);
    const double rho = euclidean_ball_radius(cfg, R);
    w.key("euclidean_radius").value(rho);

    int code = 0;
    if (cfg.mode == SingularityMode::OriginCentered) {
        w.key("weighted_volume").value(weighted_ball_volume(cfg, R));
        w.key("weighted_perimeter").value(weighted_ball_perimeter(cfg, R));
    } else {
        // No closed form is claimed for this mode; the volume comes from
        // the radial quadrature, the perimeter is not reported.
        w.key("weighted_volume")
            .value(integrate_radial(cfg, DomainSpec::ball(R), [](double) { return 1.0; }));
        w.key("weighted_perimeter").null();
    }

    w.key("distance_samples").begin_array();
    for (double fraction : {0.25, 0.5, 0.75, 1.0}) {
        const double norm = rho * fraction;
        w.begin_object();
        w.key("euclidean_norm").value(norm);
        w.key("g_distance").value(geodesic_distance_from_norm(cfg, norm));
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w);
    return code;
}

int cmd_solve_ball(const ManifoldConfig& cfg, double R, int samples) {
    auto [profile, data] = ball_solution(cfg, R);
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("solve_ball");
    write_config(w, cfg);
    w.key("radius").value(R);
    w.key("c").value(data.c);
    w.key("torsional_rigidity").value(data.torsional_rigidity);
    write_samples(w, profile, 0.0, R, samples);
    w.end_object();
    emit(w);
    return 0;
}

int cmd_solve_annulus(int n, double beta_c, double alpha, double a, double b, int samples) {
    RadialProfile profile = annulus_solve(n, beta_c, a, b);
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("solve_annulus");
    w.key("n").value(n);
    w.key("beta_c").value(beta_c);
    w.key("alpha").value(alpha);
    w.key("a").value(a);
    w.key("b").value(b);
    w.key("deriv_a").value(profile.deriv(a));
    w.key("deriv_b").value(profile.deriv(b));
    write_samples(w, profile, a, b, samples);
    w.end_object();
    emit(w);
    return 0;
}

int cmd_verify(const ManifoldConfig& cfg, double R, const std::vector<std::string>& suite,
               const QuadratureSettings& quad) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("verify");
    write_config(w, cfg);
    w.key("radius").value(R);

    int code = 0;
    bool all_pass = true;
    try {
        const AdmissibilityResult adm = admissibility(cfg.n, cfg.alpha, cfg.gamma);
        const bool gate = rigidity_admissible(cfg);
        w.key("admissibility").begin_object();
        w.key("gamma1").value(adm.gamma1);
        w.key("gamma2").value(adm.gamma2);
        w.key("condition_value").value(adm.condition_value);
        w.key("admissible").value(gate);
        w.end_object();
        if (!gate) all_pass = false;

        auto [profile, data] = ball_solution(cfg, R);
        SuiteOptions opt;
        opt.checks = suite;
        opt.quad = quad;
        opt.boundary_slope = data.c;
        const std::vector<IdentityReport> reports =
            run_suite(cfg, DomainSpec::ball(R), profile, opt);

        w.key("reports").begin_array();
        for (const IdentityReport& r : reports) write_report(w, r);
        w.end_array();

        code = reports_exit_code(reports);
        for (const IdentityReport& r : reports) all_pass = all_pass && r.pass;
        if (code == 0 && !all_pass) code = 1;
    } catch (const std::domain_error& e) {
        w.key("error").value(e.what());
        code = 3;
        all_pass = false;
    }
    w.key("all_pass").value(all_pass);
    w.end_object();
    emit(w);
    return code;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, bool serial) {
    std::ifstream in(spec_path);
    if (!in) throw UsageError("cannot open sweep spec: " + spec_path);
    json doc = json::parse(in);

    auto axis = [&](const char* name) {
        if (!doc.contains(name)) throw UsageError(std::string("sweep spec missing '") + name + "'");
        const json& a = doc[name];
        return GridAxis{a.at("lo").get<double>(), a.at("hi").get<double>(),
                        a.at("step").get<double>()};
    };
    SweepSpec spec{doc.at("n").get<int>(), sweep_quantity_from_name(doc.at("quantity").get<std::string>()),
                   axis("alpha"), axis("gamma")};
    spec.validate();

    const std::vector<SweepCell> cells = sweep_grid(spec, !serial);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << sweep_csv(spec, cells);
    return 0;
}

int cmd_compat(double rho, const std::vector<double>& scan, std::optional<double> beta) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("compat");
    w.key("rho").value(rho);
    if (beta) {
        const CompatParams p(rho, *beta);
        w.key("beta").value(*beta);
        w.key("F").value(F_value(p));
        const Sign3 s = F_sign(p);
        w.key("sign").value(s == Sign3::Negative ? "Negative"
                            : s == Sign3::Zero   ? "Zero"
                                                 : "Positive");
    }
    if (!beta || !scan.empty()) {
        const double lo = scan.empty() ? -5.0 : scan[0];
        const double hi = scan.empty() ? 5.0 : scan[1];
        w.key("scan_lo").value(lo);
        w.key("scan_hi").value(hi);
        w.key("roots").begin_array();
        for (double r : find_roots(rho, lo, hi)) w.value(r);
        w.end_array();
    }
    w.end_object();
    emit(w);
    return 0;
}

int cmd_counterexample(int n, double a, double b, double gamma) {
    const CounterexamplePackage pkg = counterexample(n, a, b);
    const ManifoldConfig cfg(n, gamma, pkg.alpha);
    const DomainSpec dom = DomainSpec::annulus(a, b);

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(kSchemaVersion);
    w.key("kind").value("counterexample");
    write_config(w, cfg);
    w.key("a").value(a);
    w.key("b").value(b);
    w.key("c").value(pkg.c);
    write_samples(w, pkg.profile, a, b, 17);

    SuiteOptions opt;
    opt.checks = {"pde", "flux_magnitude", "energy", "differential_identity"};
    opt.boundary_slope = pkg.c;
    std::vector<IdentityReport> reports = run_suite(cfg, dom, pkg.profile, opt);

    // The point of the counterexample: no admissible beta makes the
    // P-function constant.  Reported as a lower bound on max P - min P.
    const IdentityReport pf = verify_p_function(cfg, dom, pkg.profile, 1.0);
    IdentityReport noncon;
    noncon.name = "p_function_nonconstant";
    noncon.lhs = pf.lhs;
    noncon.rhs = 1e-2;
    noncon.abs_err = std::max(0.0, noncon.rhs - noncon.lhs);
    noncon.rel_err = noncon.abs_err;
    noncon.tol = 0.0;
    noncon.pass = noncon.lhs >= noncon.rhs;
    noncon.detail = pf.detail;
    reports.push_back(std::move(noncon));

    w.key("reports").begin_array();
    for (const IdentityReport& r : reports) write_report(w, r);
    w.end_array();

    bool all_pass = true;
    for (const IdentityReport& r : reports) all_pass = all_pass && r.pass;
    w.key("all_pass").value(all_pass);
    w.end_object();
    emit(w);
    return reports_exit_code(reports);
}

json load_config(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
        else continue;
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open config file: " + path);
        return json::parse(in);
    }
    return json::object();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted torsion problems on conformally flat manifolds: geometry, radial solutions, identity verification, compatibility analysis"};
    app.require_subcommand(1);

    const double dnan = std::numeric_limits<double>::quiet_NaN();
    const int imiss = std::numeric_limits<int>::min();

    ParamBag bag;
    std::string config_path;

    // geometry
    auto* geo = app.add_subcommand("geometry", "ball correspondence, weighted volume and perimeter");
    int geo_n = imiss;
    double geo_gamma = dnan, geo_alpha = dnan, geo_R = dnan;
    std::string geo_mode = "origin";
    auto* geo_n_o = geo->add_option("--n", geo_n, "dimension");
    auto* geo_g_o = geo->add_option("--gamma", geo_gamma, "conformal exponent");
    auto* geo_a_o = geo->add_option("--alpha", geo_alpha, "weight exponent");
    auto* geo_r_o = geo->add_option("--radius", geo_R, "g-ball radius");
    auto* geo_m_o = geo->add_option("--mode", geo_mode, "origin|infinity");
    geo->add_option("--config", config_path, "JSON config file (flags win)");

    // solve
    auto* solve = app.add_subcommand("solve", "closed-form radial solutions");
    solve->require_subcommand(1);
    auto* sball = solve->add_subcommand("ball", "torsion solution on a g-ball");
    int sb_n = imiss, sb_samples = 17;
    double sb_gamma = dnan, sb_alpha = dnan, sb_R = dnan;
    std::string sb_mode = "origin";
    auto* sb_n_o = sball->add_option("--n", sb_n, "dimension");
    auto* sb_g_o = sball->add_option("--gamma", sb_gamma, "conformal exponent");
    auto* sb_a_o = sball->add_option("--alpha", sb_alpha, "weight exponent");
    auto* sb_r_o = sball->add_option("--radius", sb_R, "g-ball radius");
    auto* sb_m_o = sball->add_option("--mode", sb_mode, "origin|infinity");
    sball->add_option("--samples", sb_samples, "profile sample count");
    sball->add_option("--config", config_path, "JSON config file (flags win)");

    auto* sann = solve->add_subcommand("annulus", "radial torsion solution on an annulus");
    int sa_n = imiss, sa_samples = 17;
    double sa_a = dnan, sa_b = dnan, sa_alpha = dnan, sa_betac = dnan;
    auto* sa_n_o = sann->add_option("--n", sa_n, "dimension");
    auto* sa_a_o = sann->add_option("--a", sa_a, "inner g-radius");
    auto* sa_b_o = sann->add_option("--b", sa_b, "outer g-radius");
    auto* sa_al_o = sann->add_option("--alpha", sa_alpha, "weight exponent (beta_c = n+alpha-1)");
    auto* sa_bc_o = sann->add_option("--beta-c", sa_betac, "reduced exponent directly");
    sann->add_option("--samples", sa_samples, "profile sample count");
    sann->add_option("--config", config_path, "JSON config file (flags win)");

    // verify
    auto* ver = app.add_subcommand("verify", "identity suite for the ball solution");
    int v_n = imiss, v_maxdepth = 40;
    double v_gamma = dnan, v_alpha = dnan, v_R = dnan, v_reltol = 1e-10;
    std::string v_mode = "origin";
    std::vector<std::string> v_suite;
    auto* v_n_o = ver->add_option("--n", v_n, "dimension");
    auto* v_g_o = ver->add_option("--gamma", v_gamma, "conformal exponent");
    auto* v_a_o = ver->add_option("--alpha", v_alpha, "weight exponent");
    auto* v_r_o = ver->add_option("--radius", v_R, "g-ball radius");
    auto* v_m_o = ver->add_option("--mode", v_mode, "origin|infinity");
    ver->add_option("--suite", v_suite, "subset of checks to run")->delimiter(',');
    ver->add_option("--max-depth", v_maxdepth, "quadrature bisection depth");
    ver->add_option("--rel-tol", v_reltol, "quadrature relative tolerance");
    ver->add_option("--config", config_path, "JSON config file (flags win)");

    // sweep
    auto* swp = app.add_subcommand("sweep", "parameter grid to CSV");
    std::string sw_spec, sw_out;
    bool sw_serial = false;
    swp->add_option("--spec", sw_spec, "sweep spec JSON file")->required();
    swp->add_option("--out", sw_out, "output CSV path")->required();
    swp->add_flag("--serial", sw_serial, "force the serial reference kernel");

    // compat
    auto* cmp = app.add_subcommand("compat", "compatibility function F_rho and its roots");
    double c_rho = dnan, c_beta = dnan;
    std::vector<double> c_scan;
    auto* c_rho_o = cmp->add_option("--rho", c_rho, "radius ratio b/a > 1");
    auto* c_beta_o = cmp->add_option("--beta", c_beta, "evaluate F at one exponent");
    cmp->add_option("--scan", c_scan, "scan interval lo hi")->expected(2);
    cmp->add_option("--config", config_path, "JSON config file (flags win)");

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "annulus counterexample package");
    int x_n = imiss;
    double x_a = dnan, x_b = dnan, x_gamma = 0.0;
    auto* x_n_o = cex->add_option("--n", x_n, "dimension");
    auto* x_a_o = cex->add_option("--a", x_a, "inner g-radius");
    auto* x_b_o = cex->add_option("--b", x_b, "outer g-radius");
    auto* x_g_o = cex->add_option("--gamma", x_gamma, "conformal exponent (default 0)");
    cex->add_option("--config", config_path, "JSON config file (flags win)");

    try {
        bag.cfg = load_config(argc, argv);
        app.parse(argc, argv);

        if (geo->parsed()) {
            const ManifoldConfig cfg(bag.integer(geo_n_o, geo_n, "n"),
                                     bag.num(geo_g_o, geo_gamma, "gamma"),
                                     bag.num(geo_a_o, geo_alpha, "alpha"),
                                     parse_mode(bag.str(geo_m_o, geo_mode, "mode", "origin")));
            return cmd_geometry(cfg, bag.num(geo_r_o, geo_R, "radius"));
        }
        if (sball->parsed()) {
            const ManifoldConfig cfg(bag.integer(sb_n_o, sb_n, "n"),
                                     bag.num(sb_g_o, sb_gamma, "gamma"),
                                     bag.num(sb_a_o, sb_alpha, "alpha"),
                                     parse_mode(bag.str(sb_m_o, sb_mode, "mode", "origin")));
            return cmd_solve_ball(cfg, bag.num(sb_r_o, sb_R, "radius"), sb_samples);
        }
        if (sann->parsed()) {
            const int n = bag.integer(sa_n_o, sa_n, "n");
            double beta_c, alpha;
            if (sa_bc_o->count() > 0 && sa_al_o->count() > 0)
                throw UsageError("give either --alpha or --beta-c, not both");
            if (sa_bc_o->count() > 0 || (bag.cfg.contains("beta-c") && sa_al_o->count() == 0)) {
                beta_c = bag.num(sa_bc_o, sa_betac, "beta-c");
                alpha = beta_c - n + 1;
            } else {
                alpha = bag.num(sa_al_o, sa_alpha, "alpha");
                beta_c = n + alpha - 1;
            }
            return cmd_solve_annulus(n, beta_c, alpha, bag.num(sa_a_o, sa_a, "a"),
                                     bag.num(sa_b_o, sa_b, "b"), sa_samples);
        }
        if (ver->parsed()) {
            const ManifoldConfig cfg(bag.integer(v_n_o, v_n, "n"),
                                     bag.num(v_g_o, v_gamma, "gamma"),
                                     bag.num(v_a_o, v_alpha, "alpha"),
                                     parse_mode(bag.str(v_m_o, v_mode, "mode", "origin")));
            QuadratureSettings quad;
            quad.max_depth = v_maxdepth;
            quad.rel_tol = v_reltol;
            return cmd_verify(cfg, bag.num(v_r_o, v_R, "radius"), v_suite, quad);
        }
        if (swp->parsed()) return cmd_sweep(sw_spec, sw_out, sw_serial);
        if (cmp->parsed()) {
            std::optional<double> beta;
            if (c_beta_o->count() > 0) beta = c_beta;
            else if (bag.cfg.contains("beta")) beta = bag.cfg["beta"].get<double>();
            return cmd_compat(bag.num(c_rho_o, c_rho, "rho"), c_scan, beta);
        }
        if (cex->parsed())
            return cmd_counterexample(bag.integer(x_n_o, x_n, "n"), bag.num(x_a_o, x_a, "a"),
                                      bag.num(x_b_o, x_b, "b"),
                                      bag.num(x_g_o, x_gamma, "gamma", 0.0));
        throw UsageError("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MaxDepthExceeded& e) {
        std::cerr << "numeric error: " << e.what()
                  << " (best estimate " << format_double(e.best_estimate) << ")\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
}
