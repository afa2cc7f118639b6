#include "jlx/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jlx/bounds.hpp"
#include "jlx/exponents.hpp"
#include "jlx/numfmt.hpp"
#include "jlx/tables.hpp"

namespace jlx::cli {

namespace {

using json = nlohmann::ordered_json;
using exponents::ProblemParams;
using numfmt::sig17;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

const char* regime_name(exponents::Regime r) {
    return r == exponents::Regime::TwoRoots ? "TwoRoots" : "SingleRoot";
}

const char* stability_name(exponents::Stability s) {
    switch (s) {
        case exponents::Stability::Stable: return "Stable";
        case exponents::Stability::Unstable: return "Unstable";
        case exponents::Stability::Boundary: return "Boundary";
    }
    return "?";
}

void require_integer(double v, const std::string& flag, bool allow_real) {
    if (!allow_real && v != std::floor(v))
        throw CLI::ValidationError(flag + ": integer required (pass --allow-real-n for real values)");
}

json report_json(double n, double s, const exponents::ExponentReport& rep) {
    json j;
    j["n"] = n;
    j["s"] = s;
    j["a"] = rep.a_ns;
    j["k1"] = rep.k1;
    j["k2"] = rep.k2;
    j["p1"] = rep.p1;
    j["p2"] = rep.p2 ? json(*rep.p2) : json(nullptr);
    j["p2_infinite"] = !rep.p2.has_value();
    j["p_sobolev"] = rep.p_sobolev;
    j["hardy"] = rep.hardy;
    j["regime"] = regime_name(rep.regime);
    return j;
}

json threshold_json(const bounds::ThresholdReport& r) {
    json j;
    j["eps"] = r.eps;
    j["domain_term"] = r.domain_term;
    j["poly_term"] = r.poly_term;
    j["nbar"] = r.nbar;
    j["direction"] = r.direction == bounds::ThresholdDirection::UpperA ? "UpperA" : "LowerA";
    return j;
}

struct SweepFlags {
    double s = 0, n_min = 0, n_max = 0, step = 1;
    bool csv = false;
    std::string out_path;
};

void print_sweep_text(std::ostream& os, const tables::SweepResult& res) {
    for (const auto& r : res.records) {
        os << "n=" << sig17(r.n) << " s=" << sig17(r.s) << " a=" << sig17(r.a_ns)
           << " k1=" << sig17(r.k1) << " k2=" << sig17(r.k2) << " p1=" << sig17(r.p1)
           << " p2=" << (r.p2 ? sig17(*r.p2) : "infinite") << " p_sobolev=" << sig17(r.p_sobolev)
           << " hardy=" << sig17(r.hardy) << '\n';
    }
    if (res.skipped > 0) os << "# skipped " << res.skipped << " grid points with n <= 2s\n";
}

json sweep_json(const tables::SweepResult& res) {
    json arr = json::array();
    for (const auto& r : res.records) {
        json j;
        j["n"] = r.n;
        j["s"] = r.s;
        j["a"] = r.a_ns;
        j["k1"] = r.k1;
        j["k2"] = r.k2;
        j["p1"] = r.p1;
        j["p2"] = r.p2 ? json(*r.p2) : json(nullptr);
        j["p2_infinite"] = !r.p2.has_value();
        j["p_sobolev"] = r.p_sobolev;
        j["hardy"] = r.hardy;
        arr.push_back(std::move(j));
    }
    json top;
    top["records"] = std::move(arr);
    top["skipped"] = res.skipped;
    return top;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Root structure, critical exponents and stability classification "
                 "for the Gamma-quotient equation of the fractional Lane-Emden problem"};
    app.require_subcommand(1);
    bool as_json = false;
    bool allow_real_n = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_flag("--allow-real-n", allow_real_n, "accept non-integer dimension flags");

    double n = 0, s = 0, p = 0, a = 0;
    std::optional<double> eps1, eps2;
    SweepFlags sw;

    auto* c_exponents = app.add_subcommand("exponents", "exponent pair, regime and Hardy constant");
    c_exponents->add_option("--n", n, "dimension")->required();
    c_exponents->add_option("--s", s, "fractional order")->required();

    auto* c_root = app.add_subcommand("root", "the positive root a_{n,s}");
    c_root->add_option("--n", n, "dimension")->required();
    c_root->add_option("--s", s, "fractional order")->required();

    auto* c_critdim = app.add_subcommand("critical-dim", "largest n with k1 <= 0");
    c_critdim->add_option("--s", s, "fractional order")->required();

    auto* c_classify = app.add_subcommand("classify", "stability of the singular solution at p");
    c_classify->add_option("--n", n, "dimension")->required();
    c_classify->add_option("--s", s, "fractional order")->required();
    c_classify->add_option("--p", p, "nonlinearity exponent")->required();

    auto* c_verify = app.add_subcommand("verify", "plug p1/p2 back into the equation");
    c_verify->add_option("--n", n, "dimension")->required();
    c_verify->add_option("--s", s, "fractional order")->required();

    auto* c_bounds = app.add_subcommand("bounds", "rational bounds enclosing f(a)");
    c_bounds->add_option("--n", n, "dimension")->required();
    c_bounds->add_option("--s", s, "fractional order")->required();
    c_bounds->add_option("--a", a, "evaluation point")->required();

    auto* c_thresholds = app.add_subcommand("thresholds", "certified dimensions locating a_{n,s}");
    c_thresholds->add_option("--s", s, "fractional order")->required();
    c_thresholds->add_option("--eps1", eps1, "upper margin: a < 1 + eps1");
    c_thresholds->add_option("--eps2", eps2, "lower margin: a > 1 - eps2");

    auto* c_table1 = app.add_subcommand("table1", "verify the 30 location claims");
    auto* c_table2 = app.add_subcommand("table2", "critical-dimension estimates per s interval");

    auto* c_sweep = app.add_subcommand("sweep", "exponent dataset over an n grid");
    c_sweep->add_option("--s", sw.s, "fractional order")->required();
    c_sweep->add_option("--n-min", sw.n_min, "grid start")->required();
    c_sweep->add_option("--n-max", sw.n_max, "grid end")->required();
    c_sweep->add_option("--step", sw.step, "grid step");
    c_sweep->add_flag("--csv", sw.csv, "emit CSV");
    c_sweep->add_option("--out", sw.out_path, "write output to a file instead of stdout");

    // let --json / --allow-real-n appear after the subcommand name
    for (CLI::App* sub : {c_exponents, c_root, c_critdim, c_classify, c_verify, c_bounds,
                          c_thresholds, c_table1, c_table2, c_sweep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (c_exponents->parsed() || c_root->parsed() || c_classify->parsed() ||
            c_verify->parsed() || c_bounds->parsed()) {
            require_integer(n, "--n", allow_real_n);
        }
        if (c_sweep->parsed()) {
            require_integer(sw.n_min, "--n-min", allow_real_n);
            require_integer(sw.n_max, "--n-max", allow_real_n);
            require_integer(sw.step, "--step", allow_real_n);
        }

        if (c_exponents->parsed()) {
            const auto rep = exponents::exponent_report(ProblemParams(n, s));
            if (as_json) {
                out << report_json(n, s, rep).dump(2) << '\n';
            } else {
                out << "a = " << sig17(rep.a_ns) << '\n'
                    << "k1 = " << sig17(rep.k1) << '\n'
                    << "k2 = " << sig17(rep.k2) << '\n'
                    << "p1 = " << sig17(rep.p1) << '\n'
                    << "p2 = " << (rep.p2 ? sig17(*rep.p2) : "infinite") << '\n'
                    << "p_sobolev = " << sig17(rep.p_sobolev) << '\n'
                    << "hardy = " << sig17(rep.hardy) << '\n'
                    << "regime = " << regime_name(rep.regime) << '\n';
            }
            return kExitOk;
        }

        if (c_root->parsed()) {
            const ProblemParams params(n, s);
            const double root = exponents::solve_a(params);
            const double residual = exponents::f_eval(params, root);
            if (as_json) {
                json j;
                j["n"] = n;
                j["s"] = s;
                j["a"] = root;
                j["f_residual"] = residual;
                out << j.dump(2) << '\n';
            } else {
                out << sig17(root) << '\n';
            }
            return kExitOk;
        }

        if (c_critdim->parsed()) {
            const int n0 = exponents::critical_dimension(s);
            if (as_json) {
                json j;
                j["s"] = s;
                j["n0"] = n0;
                out << j.dump(2) << '\n';
            } else {
                out << n0 << '\n';
            }
            return kExitOk;
        }

        if (c_classify->parsed()) {
            const auto verdict = exponents::stability_gap(ProblemParams(n, s), p);
            if (as_json) {
                json j;
                j["n"] = n;
                j["s"] = s;
                j["p"] = p;
                j["state"] = stability_name(verdict.state);
                j["log_margin"] = verdict.log_margin;
                out << j.dump(2) << '\n';
            } else {
                out << stability_name(verdict.state) << " log_margin=" << sig17(verdict.log_margin)
                    << '\n';
            }
            return kExitOk;
        }

        if (c_verify->parsed()) {
            const ProblemParams params(n, s);
            const auto rep = exponents::exponent_report(params);
            const double r1 = std::abs(exponents::stability_gap(params, rep.p1).log_margin);
            std::optional<double> r2;
            if (rep.p2) r2 = std::abs(exponents::stability_gap(params, *rep.p2).log_margin);
            const double worst = std::max(r1, r2.value_or(0.0));
            const bool pass = worst <= 1e-8;
            if (as_json) {
                json j;
                j["n"] = n;
                j["s"] = s;
                j["p1"] = rep.p1;
                j["residual_p1"] = r1;
                j["p2"] = rep.p2 ? json(*rep.p2) : json(nullptr);
                j["p2_infinite"] = !rep.p2.has_value();
                j["residual_p2"] = r2 ? json(*r2) : json(nullptr);
                j["max_residual"] = worst;
                j["pass"] = pass;
                out << j.dump(2) << '\n';
            } else {
                out << "p1 = " << sig17(rep.p1) << "  |log residual| = " << sig17(r1) << '\n';
                if (rep.p2)
                    out << "p2 = " << sig17(*rep.p2) << "  |log residual| = " << sig17(*r2) << '\n';
                else
                    out << "p2 = infinite\n";
                out << (pass ? "PASS" : "FAIL") << " (tolerance 1e-8)\n";
            }
            return pass ? kExitOk : kExitNumerical;
        }

        if (c_bounds->parsed()) {
            const ProblemParams params(n, s);
            const auto v1 = bounds::bound_v1(params, a);
            const auto v2 = bounds::bound_v2(params, a);
            if (as_json) {
                json j;
                j["n"] = n;
                j["s"] = s;
                j["a"] = a;
                j["f"] = v1.f_value;
                j["v1"] = {{"lower", v1.lower}, {"upper", v1.upper}};
                j["v2"] = {{"lower", v2.lower}, {"upper", v2.upper}};
                out << j.dump(2) << '\n';
            } else {
                out << "f = " << sig17(v1.f_value) << '\n'
                    << "v1: [" << sig17(v1.lower) << ", " << sig17(v1.upper) << "]\n"
                    << "v2: [" << sig17(v2.lower) << ", " << sig17(v2.upper) << "]\n";
            }
            return kExitOk;
        }

        if (c_thresholds->parsed()) {
            if (!eps1 && !eps2)
                throw CLI::ValidationError("thresholds: give --eps1 and/or --eps2");
            std::optional<bounds::ThresholdReport> up, low;
            if (eps1) up = bounds::threshold_upper(s, *eps1);
            if (eps2) low = bounds::threshold_lower(s, *eps2);
            if (as_json) {
                json j;
                j["s"] = s;
                j["upper"] = up ? threshold_json(*up) : json(nullptr);
                j["lower"] = low ? threshold_json(*low) : json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                if (up)
                    out << "a < " << sig17(1.0 + up->eps) << " for integer n > "
                        << sig17(up->nbar) << "  (domain " << sig17(up->domain_term)
                        << ", poly " << sig17(up->poly_term) << ")\n";
                if (low)
                    out << "a > " << sig17(1.0 - low->eps) << " for integer n > "
                        << sig17(low->nbar) << "  (domain " << sig17(low->domain_term)
                        << ", poly " << sig17(low->poly_term) << ")\n";
            }
            return kExitOk;
        }

        if (c_table1->parsed()) {
            const auto rows = tables::table1_check();
            bool all = true;
            json arr = json::array();
            for (const auto& row : rows) {
                for (const auto& c : row.claims) {
                    all = all && c.verified;
                    if (as_json) {
                        json j;
                        j["s_lo"] = row.s_lo;
                        j["s_hi"] = row.s_hi;
                        j["claim"] = std::string("a") + c.claim.direction +
                                     sig17(c.claim.a_star);
                        j["n_star"] = c.claim.n_star;
                        j["verified"] = c.verified;
                        j["worst_margin"] = c.worst_margin;
                        j["bound_route_implied"] = c.bound_route_implied;
                        j["bound_nbar"] = c.bound_nbar;
                        arr.push_back(std::move(j));
                    } else {
                        out << "s in (" << row.s_lo << ", " << row.s_hi << "]: a "
                            << c.claim.direction << ' ' << c.claim.a_star << " for n >= "
                            << c.claim.n_star << ": " << (c.verified ? "verified" : "FAILED")
                            << "  margin " << sig17(c.worst_margin) << " at n=" << c.worst_n
                            << " s=" << c.worst_s << "  (bound route nbar="
                            << sig17(c.bound_nbar)
                            << (c.bound_route_implied ? ", implies claim" : ", lazier than claim")
                            << ")\n";
                    }
                }
            }
            if (as_json)
                out << arr.dump(2) << '\n';
            else
                out << (all ? "all claims verified" : "SOME CLAIMS FAILED") << '\n';
            return kExitOk;
        }

        if (c_table2->parsed()) {
            const auto rows = tables::table2_compute();
            json arr = json::array();
            for (const auto& r : rows) {
                if (as_json) {
                    json j;
                    j["s_lo"] = r.s_lo;
                    j["s_hi"] = r.s_hi;
                    j["n1_bound"] = r.n1_bound;
                    j["n0_bound"] = r.n0_bound;
                    j["computed_poly_term"] = r.computed_poly_term;
                    j["computed_n0"] = r.computed_n0;
                    j["poly_ok"] = r.poly_ok;
                    j["n0_ok"] = r.n0_ok;
                    arr.push_back(std::move(j));
                } else {
                    out << "s in (" << r.s_lo << ", " << r.s_hi << "]: poly_term "
                        << sig17(r.computed_poly_term) << (r.poly_ok ? " < " : " !< ")
                        << r.n1_bound << "; n0 " << r.computed_n0 << (r.n0_ok ? " <= " : " !<= ")
                        << r.n0_bound << '\n';
                }
            }
            if (as_json) out << arr.dump(2) << '\n';
            return kExitOk;
        }

        if (c_sweep->parsed()) {
            const auto res = tables::sweep(sw.s, sw.n_min, sw.n_max, sw.step);
            std::ostringstream buf;
            if (sw.csv)
                tables::write_sweep_csv(buf, res);
            else if (as_json)
                buf << sweep_json(res).dump(2) << '\n';
            else
                print_sweep_text(buf, res);
            if (!sw.out_path.empty()) {
                std::ofstream file(sw.out_path);
                if (!file) throw CLI::ValidationError("sweep: cannot open " + sw.out_path);
                file << buf.str();
            } else {
                out << buf.str();
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace jlx::cli
