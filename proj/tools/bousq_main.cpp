#include "bousq/catalog.hpp"
#include "bousq/elliptic.hpp"
#include "bousq/simulate.hpp"
#include "bousq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bousq::Jet;

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "start:stop:step" (inclusive start, exclusive stop, epsilon-guarded) or a
// single value.
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    auto to_d = [&](const std::string& s) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("range", "cannot parse '" + s + "' as a number");
        }
        if (pos != s.size())
            throw CLI::ValidationError("range", "trailing junk in '" + s + "'");
        return v;
    };
    if (parts.size() == 1) return {to_d(parts[0])};
    if (parts.size() != 3)
        throw CLI::ValidationError("range", "expected 'value' or 'start:stop:step', got '" + text + "'");
    const double start = to_d(parts[0]), stop = to_d(parts[1]), step = to_d(parts[2]);
    if (!(step > 0.0)) throw CLI::ValidationError("range", "step must be positive");
    if (stop < start) throw CLI::ValidationError("range", "stop must be >= start");
    std::vector<double> out;
    for (long i = 0;; ++i) {
        const double v = start + i * step;
        if (v >= stop - 1e-12) break;
        out.push_back(v);
        if (out.size() > 10'000'000) throw CLI::ValidationError("range", "range too large");
    }
    return out;
}

// Flat JSON config: keys are long option names without the leading dashes;
// command-line flags win.  Booleans toggle flag/negated-flag pairs.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    std::ifstream in(config_path);
    if (!in) throw CLI::ValidationError("config", "cannot open " + config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("config", std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ValidationError("config", "config must be a flat JSON object");
    auto given = [&](const std::string& name) {
        const std::string flag = "--" + name;
        const std::string neg = "--no-" + name;
        for (const auto& a : args)
            if (a == flag || a == neg || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> out = args;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "config" || given(key)) continue;
        const auto& v = it.value();
        if (v.is_boolean()) {
            out.push_back((v.get<bool>() ? "--" : "--no-") + key);
        } else if (v.is_number_float()) {
            out.push_back("--" + key);
            out.push_back(fmt_g(v.get<double>()));
        } else if (v.is_number_integer()) {
            out.push_back("--" + key);
            out.push_back(std::to_string(v.get<long long>()));
        } else if (v.is_string()) {
            out.push_back("--" + key);
            out.push_back(v.get<std::string>());
        } else {
            throw CLI::ValidationError("config", "unsupported value type for key '" + key + "'");
        }
    }
    return out;
}

bool use_color() {
    if (std::getenv("BOUSQ_NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout)) != 0;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

// ---------------------------------------------------------------------------

struct EvalOpts {
    std::string solution = "kink";
    std::string xr = "-10:10:0.5";
    std::string tr = "0";
    double c = 2.0, k = 0.25, lambda = 1.0, mu = 1.0, c1 = 1.0, c2 = 0.0;
    std::string out;
};

int run_eval(const EvalOpts& o) {
    bousq::Field u;
    const auto named = bousq::named_solution_ids();
    if (std::find(named.begin(), named.end(), o.solution) != named.end()) {
        u = bousq::named_solution(o.solution, {{"c", o.c}, {"k", o.k}}).u;
    } else if (o.solution == "gg_u1" || o.solution == "gg_u2" || o.solution == "gg_u3") {
        const int index = o.solution[4] - '0';
        u = bousq::gg_solution({index, {o.lambda, o.mu}, o.c, o.c1, o.c2});
    } else {
        std::cerr << "error: unknown solution '" << o.solution << "'\n";
        return 1;
    }
    const auto xs = parse_range(o.xr);
    const auto ts = parse_range(o.tr);
    std::ofstream file;
    std::ostream& os = open_out(file, o.out);
    os << "x,t,u\n";
    for (double t : ts)
        for (double x : xs) {
            double v;
            try {
                auto [xj, tj] = bousq::jet_seed(x, t, 0, 0);
                v = u(xj, tj).value();
            } catch (const bousq::JetDomainError&) {
                v = std::numeric_limits<double>::quiet_NaN();
            }
            os << fmt_g(x) << ',' << fmt_g(t) << ',' << fmt_g(v) << '\n';
        }
    return 0;
}

struct VerifyOpts {
    std::string out = "report.json";
    std::string grid = "default";
};

int run_verify(const VerifyOpts& o) {
    const auto start = std::chrono::steady_clock::now();
    bousq::GridSpec grid;
    if (o.grid == "double") grid = grid.refined(2);
    else if (o.grid != "default")
        throw CLI::ValidationError("grid", "expected 'default' or 'double'");
    const bousq::VerificationReport report = bousq::run_registry(grid);

    std::string stem = o.out;
    if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json") stem.resize(stem.size() - 5);
    write_file(o.out, bousq::report_json(report));
    write_file(stem + ".csv", bousq::report_csv(report));

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    nlohmann::ordered_json meta;
    meta["tool_version"] = bousq::kToolVersion;
    meta["generated_at"] = iso8601_now();
    meta["elapsed_ms"] = elapsed;
    write_file(stem + ".meta.json", meta.dump(2) + "\n");

    const bool color = use_color();
    int npass = 0, nfail = 0;
    for (const auto& r : report.claims) {
        const char* col = "";
        const char* rst = "";
        if (color) {
            col = r.status == "PASS" ? "\033[32m" : "\033[31m";
            rst = "\033[0m";
        }
        std::printf("%-32s %s%-12s%s sup_rel=%.3e %s\n", r.id.c_str(), col, r.status.c_str(), rst,
                    r.sup_residual, r.variant.c_str());
        (r.status == "PASS" ? npass : nfail) += 1;
    }
    std::printf("%d claims: %d PASS, %d other; report: %s\n",
                static_cast<int>(report.claims.size()), npass, nfail, o.out.c_str());
    return bousq::all_derived_pass(report) ? 0 : 2;
}

struct SimOpts {
    int N = 1024;
    double L = 200.0, dt = 0.05, tend = 20.0;
    double kcut = -1.0;  // sentinel: 1.0 for the unstable sign, Nyquist otherwise
    bool dealias = true, nonlinear = true, fail_on_blowup = false;
    int sign = 1;
    double blowup_factor = 1e3;
    int stride = 1;
    std::string ic = "soliton";
    double k = 0.25, x0 = -1.0, amp = 0.01, noise_amp = 1e-8;
    int mode_j = 1;
    unsigned long long seed = 12345;
    std::string frames, diag, summary;
};

int run_simulate(const SimOpts& o) {
    bousq::Grid1D grid{o.N, o.L};
    bousq::Spectral sp(grid);
    bousq::SimConfig cfg;
    cfg.dt = o.dt;
    cfg.t_end = o.tend;
    cfg.dealias = o.dealias;
    cfg.nonlinear = o.nonlinear;
    cfg.fourth_order_sign = o.sign >= 0 ? 1 : -1;
    cfg.blowup_factor = o.blowup_factor;
    cfg.stride = std::max(1, o.stride);
    if (o.kcut >= 0.0) {
        cfg.k_cut = o.kcut;
    } else {
        cfg.k_cut = cfg.fourth_order_sign > 0 ? 1.0 : std::numeric_limits<double>::infinity();
    }

    const auto xs = sp.nodes();
    std::vector<double> u0(grid.N, 0.0), ut0(grid.N, 0.0);
    const double x0 = o.x0 >= 0.0 ? o.x0 : 0.25 * o.L;
    if (o.ic == "soliton") {
        const double v = std::sqrt(1.0 + 4.0 * o.k * o.k);
        for (int n = 0; n < grid.N; ++n) {
            const double s = 1.0 / std::cosh(o.k * (xs[n] - x0));
            u0[n] = 2.0 * o.k * o.k * s * s;
        }
        ut0 = bousq::traveling_ut0(sp, u0, v);
    } else if (o.ic == "cosine") {
        for (int n = 0; n < grid.N; ++n)
            u0[n] = o.amp * std::cos(2.0 * M_PI * o.mode_j * xs[n] / o.L);
    } else if (o.ic == "noise") {
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> dist(-o.noise_amp, o.noise_amp);
        for (int n = 0; n < grid.N; ++n) u0[n] = dist(rng);
    } else if (o.ic != "zero") {
        throw CLI::ValidationError("ic", "expected soliton|cosine|noise|zero");
    }

    const bousq::RunResult res = bousq::run_simulation(sp, u0, ut0, cfg);

    if (!o.frames.empty()) {
        std::string out = "t,x,u\n";
        for (const auto& fr : res.frames)
            for (int n = 0; n < grid.N; ++n)
                out += fmt_g(fr.t) + "," + fmt_g(xs[n]) + "," + fmt_g(fr.u[n]) + "\n";
        write_file(o.frames, out);
    }
    if (!o.diag.empty()) {
        std::string out = "t,mass,sup_norm,tail_energy\n";
        for (const auto& d : res.diagnostics)
            out += fmt_g(d.t) + "," + fmt_g(d.mass) + "," + fmt_g(d.sup_norm) + "," +
                   fmt_g(d.tail_energy) + "\n";
        write_file(o.diag, out);
    }
    if (!o.summary.empty()) {
        nlohmann::ordered_json j;
        j["status"] = bousq::to_string(res.status);
        j["final_t"] = res.final_t;
        j["grid"] = {{"N", grid.N}, {"L", grid.L}};
        nlohmann::ordered_json c;
        c["dt"] = cfg.dt;
        c["t_end"] = cfg.t_end;
        if (std::isfinite(cfg.k_cut)) c["k_cut"] = cfg.k_cut;
        else c["k_cut"] = "inf";
        c["dealias"] = cfg.dealias;
        c["sign"] = cfg.fourth_order_sign;
        c["nonlinear"] = cfg.nonlinear;
        c["blowup_factor"] = cfg.blowup_factor;
        c["stride"] = cfg.stride;
        c["ic"] = o.ic;
        c["k"] = o.k;
        c["x0"] = x0;
        c["amp"] = o.amp;
        c["mode_j"] = o.mode_j;
        c["noise_amp"] = o.noise_amp;
        c["seed"] = o.seed;
        j["config"] = std::move(c);
        write_file(o.summary, j.dump(2) + "\n");
    }

    std::printf("status=%s final_t=%.17g frames=%d\n", bousq::to_string(res.status).c_str(),
                res.final_t, static_cast<int>(res.frames.size()));
    if (res.status == bousq::RunStatus::Blowup && o.fail_on_blowup) return 3;
    return 0;
}

struct EllipticOpts {
    std::string zr = "0:10:0.1";
    double m = 0.5;
    std::string out;
};

int run_elliptic(const EllipticOpts& o) {
    const auto zs = parse_range(o.zr);
    std::ofstream file;
    std::ostream& os = open_out(file, o.out);
    os << "z,m,sn,cn,dn\n";
    for (double z : zs) {
        const auto tr = bousq::jacobi_eval(z, o.m);
        os << fmt_g(z) << ',' << fmt_g(o.m) << ',' << fmt_g(tr.sn) << ',' << fmt_g(tr.cn) << ','
           << fmt_g(tr.dn) << '\n';
    }
    return 0;
}

int run_catalog() {
    const auto claims = bousq::builtin_claims();
    std::printf("CLAIMS (%d)\n", static_cast<int>(claims.size()));
    std::printf("%-32s %-8s %-10s %-8s %s\n", "id", "binding", "paper_ref", "derived", "tol");
    for (const auto& c : claims) {
        const char* binding = c.binding == bousq::Claim::Binding::Pde
                                  ? "pde"
                                  : (c.binding == bousq::Claim::Binding::Ode ? "ode" : "surface");
        std::printf("%-32s %-8s %-10s %-8s %.0e", c.id.c_str(), binding, c.paper_ref.c_str(),
                    c.derived ? "yes" : "no", c.tolerance);
        if (!c.variant.empty()) std::printf("  [%s]", c.variant.c_str());
        std::printf("\n");
    }
    const auto entries = bousq::catalog_entries();
    std::printf("\nSOLUTIONS (%d)\n", static_cast<int>(entries.size()));
    std::printf("%-20s %-8s %-10s %s\n", "id", "kind", "paper_ref", "description");
    for (const auto& e : entries)
        std::printf("%-20s %-8s %-10s %s\n", e.id.c_str(), e.kind.c_str(), e.paper_ref.c_str(),
                    e.description.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for Boussinesq-type traveling waves"};
    app.require_subcommand(1);

    EvalOpts eo;
    VerifyOpts vo;
    SimOpts so;
    EllipticOpts elo;
    std::string config_dummy;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_dummy, "flat JSON config; explicit flags win");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a closed-form solution on a grid");
    eval->add_option("--solution", eo.solution, "named solution id or gg_u1|gg_u2|gg_u3");
    eval->add_option("--x", eo.xr, "x value or start:stop:step");
    eval->add_option("--t", eo.tr, "t value or start:stop:step");
    eval->add_option("--c", eo.c, "equation parameter c");
    eval->add_option("--k", eo.k, "assigned_soliton wavenumber");
    eval->add_option("--lambda", eo.lambda, "frame lambda (gg forms)");
    eval->add_option("--mu", eo.mu, "frame mu (gg forms)");
    eval->add_option("--c1", eo.c1, "kernel constant c1 (gg forms)");
    eval->add_option("--c2", eo.c2, "kernel constant c2 (gg forms)");
    eval->add_option("--out", eo.out, "output CSV path (default stdout)");
    add_config(eval);

    CLI::App* verify = app.add_subcommand("verify", "run the claim registry");
    verify->add_option("--out", vo.out, "report path (.json); .csv and .meta.json go beside it");
    verify->add_option("--grid", vo.grid, "default|double");
    add_config(verify);

    CLI::App* sim = app.add_subcommand("simulate", "pseudospectral time integration");
    sim->add_option("--N", so.N, "grid points (power of two >= 16)");
    sim->add_option("--L", so.L, "domain length");
    sim->add_option("--dt", so.dt, "time step");
    sim->add_option("--tend", so.tend, "end time");
    sim->add_option("--kcut", so.kcut, "spectral cutoff; default 1.0 for sign=+1, else Nyquist");
    sim->add_flag("--dealias,!--no-dealias", so.dealias, "2/3-rule dealiasing (default on)");
    sim->add_option("--sign", so.sign, "fourth-derivative sign s (+1 assigned, -1 stable)");
    sim->add_flag("--nonlinear,!--no-nonlinear", so.nonlinear, "quadratic term (default on)");
    sim->add_option("--blowup-factor", so.blowup_factor, "blowup threshold over initial sup");
    sim->add_option("--stride", so.stride, "steps between recorded frames");
    sim->add_option("--ic", so.ic, "soliton|cosine|noise|zero");
    sim->add_option("--k", so.k, "soliton wavenumber");
    sim->add_option("--x0", so.x0, "soliton center (default L/4)");
    sim->add_option("--amp", so.amp, "cosine amplitude");
    sim->add_option("--mode-j", so.mode_j, "cosine mode index");
    sim->add_option("--noise-amp", so.noise_amp, "noise amplitude");
    sim->add_option("--seed", so.seed, "noise RNG seed");
    sim->add_option("--frames", so.frames, "frames CSV path");
    sim->add_option("--diag", so.diag, "diagnostics CSV path");
    sim->add_option("--summary", so.summary, "summary JSON path");
    sim->add_flag("--fail-on-blowup,!--no-fail-on-blowup", so.fail_on_blowup,
                  "exit 3 when the run ends in BLOWUP");
    add_config(sim);

    CLI::App* ell = app.add_subcommand("elliptic", "tabulate sn/cn/dn");
    ell->add_option("--z", elo.zr, "z value or start:stop:step");
    ell->add_option("--m", elo.m, "elliptic parameter m in [0,1]");
    ell->add_option("--out", elo.out, "output CSV path (default stdout)");
    add_config(ell);

    CLI::App* cat = app.add_subcommand("catalog", "list claims and solutions");
    add_config(cat);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config(args);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval->parsed()) return run_eval(eo);
        if (verify->parsed()) return run_verify(vo);
        if (sim->parsed()) return run_simulate(so);
        if (ell->parsed()) return run_elliptic(elo);
        if (cat->parsed()) return run_catalog();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
