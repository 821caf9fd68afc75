#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qcd/elliptic.hpp"
#include "qcd/errors.hpp"
#include "qcd/metrics.hpp"
#include "qcd/modulus.hpp"
#include "qcd/shift.hpp"
#include "qcd/verify.hpp"
#include "svg.hpp"

namespace qcd::cli {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// flat JSON object, keys emitted in insertion order
struct JsonObject {
    std::vector<std::pair<std::string, std::string>> fields;
    void add(const std::string& key, double v) { fields.emplace_back(key, fmt17(v)); }
    void add_int(const std::string& key, long v) {
        fields.emplace_back(key, std::to_string(v));
    }
    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) s += ',';
            s += '"' + fields[i].first + "\":" + fields[i].second;
        }
        return s + "}\n";
    }
    // CSV rendering: header row + one value row, CRLF line endings
    std::string csv() const {
        std::string h, v;
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) {
                h += ',';
                v += ',';
            }
            h += fields[i].first;
            v += fields[i].second;
        }
        return h + "\r\n" + v + "\r\n";
    }
};

void deliver(const RunConfig& cfg, const std::string& payload,
             std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.output_path);
    f << payload;
}

void emit(const RunConfig& cfg, const JsonObject& obj, std::ostream& out) {
    deliver(cfg, cfg.output_format == OutputFormat::json ? obj.str() : obj.csv(),
            out);
}

complex parse_complex(const std::string& text, const std::string& flag) {
    double re = 0, im = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2)
        throw CLI::ValidationError(
            flag, "expected a complex literal re,im (e.g. 0.3,-0.2), got '" +
                      text + "'");
    return {re, im};
}

// --- verification suites -------------------------------------------------

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void check(bool ok, const std::string& label, double detail) {
        out << (ok ? "ok   " : "FAIL ") << label << "  [" << fmt17(detail)
            << "]\n";
        all_ok = all_ok && ok;
    }
};

void suite_modulus(Reporter& rep) {
    bool bounds = true;
    double prev = 1.0;
    bool increasing = true;
    for (int i = 0; i < 1000; ++i) {
        const double R = std::exp((i + 1) * std::log(1000.0) / 1000.0);
        const double p = grotzsch_phi(R);
        bounds = bounds && R < p && p < 4.0 * R;
        increasing = increasing && p > prev;
        prev = p;
    }
    rep.check(bounds, "growth bounds R < phi(R) < 4R on 1000 log-spaced R", 0);
    rep.check(increasing, "phi strictly increasing on the sample grid", 0);

    const double d10 = 4.0 * 10 - grotzsch_phi(10);
    const double d100 = 4.0 * 100 - grotzsch_phi(100);
    const double d1000 = 4.0 * 1000 - grotzsch_phi(1000);
    rep.check(std::abs(d1000) < 0.01 && d10 > d100 && d100 > d1000,
              "asymptote phi(R) - 4R -> 0 with monotone deficit", d1000);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = 0.02 + 0.96 * unif(rng);
        const double lhs = grotzsch_phi(0.5 * (a + 1.0 / a));
        const double rhs = std::sqrt(grotzsch_phi(1.0 / (a * a)));
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    rep.check(worst < 1e-10, "half-argument relation on 100 random alpha", worst);

    double dual = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double lam = 1.0 + 9.0 * unif(rng);
        dual = std::max(dual,
                        std::abs(quad_module_from_crossratio(lam).m *
                                     quad_module_from_crossratio(lam / (lam - 1)).m -
                                 1.0));
    }
    rep.check(dual < 1e-10, "quadrilateral module duality m(l) m(l/(l-1)) = 1",
              dual);
}

void suite_shift(Reporter& rep, double tol) {
    const double x = 0.25;
    const auto f = build_shift(x, tol);

    rep.check(std::abs(evaluate_shift(f, 0.0) + x) < 1e-8,
              "centre displacement f(0) = -x",
              std::abs(evaluate_shift(f, 0.0) + x));

    double berr = 0.0;
    for (int j = 0; j < 360; ++j) {
        const complex z = std::polar(1.0, 2.0 * pi * j / 360.0);
        berr = std::max(berr, std::abs(evaluate_shift(f, z) - z));
    }
    rep.check(berr < 1e-6, "boundary fixed pointwise (360 samples)", berr);

    double cerr = 0.0, bierr = 0.0;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const complex z =
            std::polar(0.05 + 0.9 * unif(rng), 2.0 * pi * unif(rng));
        cerr = std::max(cerr, std::abs(evaluate_shift(f, std::conj(z)) -
                                       std::conj(evaluate_shift(f, z))));
        const complex r = std::sqrt(z);
        bierr = std::max(bierr, std::abs(evaluate_shift_from_root(f, r) -
                                         evaluate_shift_from_root(f, -r)));
    }
    rep.check(cerr < 1e-6, "conjugation symmetry on 200 samples", cerr);
    rep.check(bierr < 1e-10, "square-root branch independence", bierr);

    const double Rmap = f.outer_radius();
    const double Rmod = std::sqrt(grotzsch_phi(1.0 / x));
    rep.check(std::abs(Rmap - Rmod) < 1e-9,
              "annulus radius agrees with sqrt(phi(1/x))",
              std::abs(Rmap - Rmod));

    const double K = f.dilatation();
    const double kt = (K - 1.0) / (K + 1.0);
    double dev = 0.0;
    int used = 0;
    for (int i = 0; used < 50 && i < 200; ++i) {
        const complex z =
            std::polar(0.15 + 0.75 * unif(rng), 2.0 * pi * unif(rng));
        const double dx = std::clamp(z.real(), -x, 0.0) - z.real();
        if (std::hypot(dx, z.imag()) < 1e-3 || std::abs(z) > 0.9) continue;
        const auto b = beltrami_of_shift(f, z);
        dev = std::max(dev, std::abs(std::abs(b.mu) - kt));
        ++used;
    }
    rep.check(dev < 1e-3, "constant Beltrami modulus (K-1)/(K+1)", dev);
    rep.check(K > (1.0 + x / 2) * (1.0 + x / 2),
              "dilatation exceeds (1 + x/2)^2", K);
}

void suite_metrics(Reporter& rep, double tol) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto rand_pt = [&](double rmax) {
        return std::polar(rmax * std::sqrt(unif(rng)), 2.0 * pi * unif(rng));
    };

    double sym = 0.0, moeb = 0.0;
    for (int i = 0; i < 20; ++i) {
        const complex z1 = rand_pt(0.9), z2 = rand_pt(0.9);
        if (z1 == z2) continue;
        sym = std::max(sym, std::abs(kra_distance(z1, z2) - kra_distance(z2, z1)));
        const complex a = rand_pt(0.8);
        const double th = 2.0 * pi * unif(rng);
        auto moebius = [&](complex z) {
            return std::polar(1.0, th) * (z - a) / (1.0 - std::conj(a) * z);
        };
        moeb = std::max(moeb, std::abs(kra_distance(moebius(z1), moebius(z2)) -
                                       kra_distance(z1, z2)));
    }
    rep.check(sym == 0.0, "kra distance symmetry (exact)", sym);
    rep.check(moeb < 1e-12, "kra distance Moebius invariance", moeb);

    bool tri = true;
    for (int i = 0; i < 300; ++i) {
        const complex a = rand_pt(0.95), b = rand_pt(0.95), c = rand_pt(0.95);
        if (a == b || b == c || a == c) continue;
        tri = tri && kra_distance(a, c) <=
                         kra_distance(a, b) + kra_distance(b, c) + 1e-12;
    }
    rep.check(tri, "kra triangle inequality on 300 random triples", 0);

    double eq9 = 0.0;
    for (double x : {0.1, 0.25, 0.5}) {
        const double lhs = std::log(shift_dilatation(x));
        const double rhs =
            2.0 * hyperbolic_distance(0.0, 1.0 / grotzsch_phi(1.0 / x));
        eq9 = std::max(eq9, std::abs(lhs - rhs));
    }
    rep.check(eq9 < 1e-10, "log K = 2 d_hyp(0, 1/phi(1/x))", eq9);

    double rt = 0.0;
    for (double x : {0.1, 0.25, 0.5, 0.7}) {
        rt = std::max(rt, std::abs(gehring_h(shift_dilatation(x), tol) -
                                   hyperbolic_distance(0.0, x)));
    }
    rep.check(rt < 1e-8, "gehring displacement round trip", rt);
}

// --- subcommand bodies ----------------------------------------------------

int cmd_map(const RunConfig& cfg, double x, const std::string& svg_path,
            std::ostream& out) {
    const auto f = build_shift(x, cfg.tolerance);
    const int n = cfg.grid_n;
    std::string payload;
    if (cfg.output_format == OutputFormat::csv) {
        payload.reserve(static_cast<size_t>(n) * n * 40);
        payload += "re_in,im_in,re_out,im_out\r\n";
        for (int i = 0; i < n; ++i) {
            const double r = (i + 0.5) / n;
            for (int j = 0; j < n; ++j) {
                const complex z = std::polar(r, 2.0 * pi * j / n);
                const complex w = evaluate_shift(f, z);
                payload += fmt17(z.real()) + ',' + fmt17(z.imag()) + ',' +
                           fmt17(w.real()) + ',' + fmt17(w.imag()) + "\r\n";
            }
        }
    } else {
        payload += "{\"x\":" + fmt17(x) + ",\"grid_n\":" + std::to_string(n) +
                   ",\"points\":[";
        bool first = true;
        for (int i = 0; i < n; ++i) {
            const double r = (i + 0.5) / n;
            for (int j = 0; j < n; ++j) {
                const complex z = std::polar(r, 2.0 * pi * j / n);
                const complex w = evaluate_shift(f, z);
                if (!first) payload += ',';
                first = false;
                payload += '[' + fmt17(z.real()) + ',' + fmt17(z.imag()) + ',' +
                           fmt17(w.real()) + ',' + fmt17(w.imag()) + ']';
            }
        }
        payload += "]}\n";
    }
    deliver(cfg, payload, out);
    if (!svg_path.empty()) {
        std::ofstream sf(svg_path, std::ios::binary);
        if (!sf)
            throw std::runtime_error("cannot open svg output file " + svg_path);
        write_polar_grid_svg(sf,
                             [&](complex z) { return evaluate_shift(f, z); });
    }
    return 0;
}

int cmd_beltrami(const RunConfig& cfg, double x, int samples,
                 std::ostream& out) {
    const auto f = build_shift(x, cfg.tolerance);
    const double K = f.dilatation();
    const double kt = (K - 1.0) / (K + 1.0);

    // deterministic golden-angle spiral, clear of the critical segment
    std::vector<BeltramiSample> rows;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; rows.size() < static_cast<size_t>(samples) &&
                    i < 20 * samples + 100;
         ++i) {
        const double r = 0.12 + 0.78 * (i % 97) / 96.0;
        const complex z = std::polar(r, golden * i);
        const double dx = std::clamp(z.real(), -x, 0.0) - z.real();
        if (std::hypot(dx, z.imag()) < 20.0 * cfg.fd_step) continue;
        if (std::abs(z) > 1.0 - 20.0 * cfg.fd_step) continue;
        rows.push_back(beltrami_of_shift(f, z, cfg.fd_step));
    }

    if (cfg.output_format == OutputFormat::csv) {
        std::string payload = "z_re,z_im,mu_re,mu_im,q_re,q_im,abs_mu\r\n";
        for (const auto& b : rows)
            payload += fmt17(b.z.real()) + ',' + fmt17(b.z.imag()) + ',' +
                       fmt17(b.mu.real()) + ',' + fmt17(b.mu.imag()) + ',' +
                       fmt17(b.q.real()) + ',' + fmt17(b.q.imag()) + ',' +
                       fmt17(std::abs(b.mu)) + "\r\n";
        deliver(cfg, payload, out);
        return 0;
    }
    double mu_min = 1.0, mu_max = 0.0, form_dev = 0.0;
    for (const auto& b : rows) {
        mu_min = std::min(mu_min, std::abs(b.mu));
        mu_max = std::max(mu_max, std::abs(b.mu));
        const complex form = b.mu * b.q / std::abs(b.q);
        form_dev = std::max(form_dev, std::abs(form - kt));
    }
    JsonObject obj;
    obj.add("x", x);
    obj.add("K", K);
    obj.add("k_teichmuller", kt);
    obj.add_int("samples", static_cast<long>(rows.size()));
    obj.add("mu_abs_min", mu_min);
    obj.add("mu_abs_max", mu_max);
    obj.add("teichmuller_form_max_dev", form_dev);
    emit(cfg, obj, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"extremal quasiconformal displacement maps of the disc"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    if (const char* env = std::getenv("QCD_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) cfg.tolerance = v;
    }
    std::string format = "json";
    app.add_option("--tol", cfg.tolerance, "numeric tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--fd-step", cfg.fd_step, "finite-difference step")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output_path, "write results to a file");

    double arg_r = 0, arg_x = 0, arg_k = 0;
    std::string z1_text, z2_text, svg_path, suite = "all";
    int samples = 50;

    auto* c_phi = app.add_subcommand("phi", "Groetzsch function phi(R)");
    c_phi->add_option("--R", arg_r, "argument R > 1")->required();

    auto* c_k = app.add_subcommand("k", "extremal dilatation K(x)");
    c_k->add_option("--x", arg_x, "displacement x in (0,1)")->required();

    auto* c_map = app.add_subcommand("map", "sample the extremal map on a polar grid");
    c_map->add_option("--x", arg_x, "displacement x in (0,1)")->required();
    c_map->add_option("--grid", cfg.grid_n, "grid resolution n (n^2 samples)")
        ->check(CLI::Range(2, 4096));
    c_map->add_option("--svg", svg_path, "also draw the image grid as SVG");

    auto* c_bel = app.add_subcommand("beltrami", "Beltrami field of the extremal map");
    c_bel->add_option("--x", arg_x, "displacement x in (0,1)")->required();
    c_bel->add_option("--samples", samples, "number of interior samples")
        ->check(CLI::Range(1, 100000));

    auto* c_kra = app.add_subcommand("kra", "Kra distance between two points");
    c_kra->add_option("--z1", z1_text, "first point, re,im")->required();
    c_kra->add_option("--z2", z2_text, "second point, re,im")->required();

    auto* c_geh = app.add_subcommand("gehring", "Gehring displacement h(K)");
    c_geh->add_option("--K", arg_k, "dilatation bound K > 1")->required();

    auto* c_ver = app.add_subcommand("verify", "run a verification suite");
    c_ver->add_option("--suite", suite, "all|modulus|shift|metrics")
        ->check(CLI::IsMember({"all", "modulus", "shift", "metrics"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        cfg.output_format =
            format == "csv" ? OutputFormat::csv : OutputFormat::json;

        if (c_phi->parsed()) {
            JsonObject obj;
            obj.add("R", arg_r);
            obj.add("phi", grotzsch_phi(arg_r));
            emit(cfg, obj, out);
        } else if (c_k->parsed()) {
            JsonObject obj;
            obj.add("x", arg_x);
            obj.add("phi", grotzsch_phi(1.0 / arg_x));
            obj.add("K", shift_dilatation(arg_x));
            emit(cfg, obj, out);
        } else if (c_map->parsed()) {
            return cmd_map(cfg, arg_x, svg_path, out);
        } else if (c_bel->parsed()) {
            return cmd_beltrami(cfg, arg_x, samples, out);
        } else if (c_kra->parsed()) {
            const complex z1 = parse_complex(z1_text, "--z1");
            const complex z2 = parse_complex(z2_text, "--z2");
            JsonObject obj;
            obj.add("z1_re", z1.real());
            obj.add("z1_im", z1.imag());
            obj.add("z2_re", z2.real());
            obj.add("z2_im", z2.imag());
            obj.add("rho", pseudo_hyperbolic(z1, z2));
            obj.add("kra", kra_distance(z1, z2));
            obj.add("hyperbolic", hyperbolic_distance(z1, z2));
            emit(cfg, obj, out);
        } else if (c_geh->parsed()) {
            if (!(arg_k > 1.0)) {
                err << "error: K must exceed 1\n";
                return 1;
            }
            const double h = gehring_h(arg_k, cfg.tolerance);
            // the displaced point: h = log((1+x)/(1-x)), so x = tanh(h/2)
            const double xs = std::tanh(h / 2.0);
            JsonObject obj;
            obj.add("K", arg_k);
            obj.add("h", h);
            obj.add("x_star", xs);
            emit(cfg, obj, out);
        } else if (c_ver->parsed()) {
            Reporter rep{out};
            if (suite == "all" || suite == "modulus") suite_modulus(rep);
            if (suite == "all" || suite == "shift") suite_shift(rep, cfg.tolerance);
            if (suite == "all" || suite == "metrics")
                suite_metrics(rep, cfg.tolerance);
            out << (rep.all_ok ? "verification passed\n" : "verification FAILED\n");
            return rep.all_ok ? 0 : 2;
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const convergence_error& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qcd::cli
