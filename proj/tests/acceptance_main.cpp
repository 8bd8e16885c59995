// Acceptance gate: one line per criterion, tolerances pinned in code.
// Exit status is nonzero when any criterion fails.

#include "bousq/catalog.hpp"
#include "bousq/elliptic.hpp"
#include "bousq/equations.hpp"
#include "bousq/jet.hpp"
#include "bousq/simulate.hpp"
#include "bousq/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace {

using bousq::Jet;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

// mass histories captured from the completed simulation runs (criteria 7/8),
// examined again by criterion 10
std::vector<double> g_mass_a, g_mass_b;

void report(int id, bool pass, const std::string& detail, double secs) {
    std::printf("criterion %-2d %s  %s  (%.2fs)\n", id, pass ? "PASS" : "FAIL", detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <typename Fn>
void run_criterion(int id, double max_secs, Fn&& fn) {
    const auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (pass && max_secs > 0.0 && secs > max_secs) {
        pass = false;
        detail += " [over time budget]";
    }
    report(id, pass, detail, secs);
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

std::pair<double, double> sweep_range(const bousq::Ansatz& an) {
    using bousq::JacobiKind;
    if (an.kind == JacobiKind::Sn) {
        if (an.m >= 1.0) return {0.1, 8.0};
        const double K = bousq::complete_K(an.m);
        return {0.1 * K, 1.9 * K};
    }
    if (an.kind == JacobiKind::Cn) {
        if (an.m >= 1.0) return {-5.0, 5.0};
        const double K = bousq::complete_K(an.m);
        return {-0.9 * K, 0.9 * K};
    }
    return {-5.0, 5.0};
}

// sup over the sweep interval of |h'''' + b h'' + F(h)| / max participating term
double identity_sup(const bousq::Ansatz& an, double b, int n) {
    const auto [z0, z1] = sweep_range(an);
    const auto prof = bousq::direct_profile(an);
    const auto F = bousq::direct_coefficients(an, b).F();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = z0 + (z1 - z0) * (i + 0.5) / n;
        const Jet H = prof(Jet::seed_x(z));
        const double h4 = bousq::extract_partial(H, 4, 0);
        const double h2 = bousq::extract_partial(H, 2, 0);
        const double hv = H.value();
        const double resid = h4 + b * h2 + F(hv);
        double scale = std::max(std::abs(h4), std::abs(b * h2));
        for (const auto& [co, ex] : F.terms) scale = std::max(scale, std::abs(co * std::pow(hv, ex)));
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(resid) / scale);
    }
    return worst;
}

double slope_of(const std::vector<double>& t, const std::vector<double>& y) {
    const double n = static_cast<double>(t.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

const std::map<std::string, std::string>& expected_status() {
    static const std::map<std::string, std::string> m = {
        {"derived.constant_assigned", "PASS"},
        {"derived.invariant_surface_kink", "PASS"},
        {"derived.invariant_surface_soliton", "PASS"},
        {"derived.soliton_assigned_ode", "PASS"},
        {"derived.soliton_assigned_pde", "PASS"},
        {"derived.zero_assigned", "PASS"},
        {"direct.cn_m07_inverted", "PASS"},
        {"direct.dn_m05_inverted", "PASS"},
        {"direct.sn24_inverted", "PASS"},
        {"direct.sn24_paper_variant", "FAIL"},
        {"paper.antikink", "FAIL"},
        {"paper.compacton_cos2", "FAIL"},
        {"paper.compacton_sin2", "FAIL"},
        {"paper.compacton_sin2_c1", "PASS"},
        {"paper.gg_u1", "FAIL"},
        {"paper.gg_u2", "PASS"},
        {"paper.gg_u3", "PASS"},
        {"paper.gg_u3_pde", "PASS"},
        {"paper.kink", "PASS"},
        {"paper.soliton_sech2", "FAIL"},
        {"paper.soliton_sech2_c1", "PASS"},
    };
    return m;
}

// --- criterion bodies -------------------------------------------------------

bool crit1_elliptic(std::string& d) {
    std::mt19937 rng(20260822);
    std::uniform_real_distribution<double> zd(-50.0, 50.0), md(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double z = zd(rng), m = md(rng);
        const auto tr = bousq::jacobi_eval(z, m);
        worst = std::max(worst, std::abs(tr.sn * tr.sn + tr.cn * tr.cn - 1.0));
        worst = std::max(worst, std::abs(tr.dn * tr.dn + m * tr.sn * tr.sn - 1.0));
    }
    double lim = 0.0;
    for (double z : {-3.7, -0.4, 0.9, 2.6}) {
        const auto t0 = bousq::jacobi_eval(z, 0.0);
        lim = std::max({lim, std::abs(t0.sn - std::sin(z)), std::abs(t0.cn - std::cos(z)),
                        std::abs(t0.dn - 1.0)});
        const auto t1 = bousq::jacobi_eval(z, 1.0);
        lim = std::max({lim, std::abs(t1.sn - std::tanh(z)),
                        std::abs(t1.cn - 1.0 / std::cosh(z)),
                        std::abs(t1.dn - 1.0 / std::cosh(z))});
    }
    bool k_ok = std::abs(bousq::complete_K(0.0) - M_PI / 2.0) < 1e-15;
    double prev = 0.0;
    for (double m : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95}) {
        const double K = bousq::complete_K(m);
        k_ok = k_ok && K > prev;
        prev = K;
    }
    const double K6 = bousq::complete_K(0.6);
    const auto a = bousq::jacobi_eval(0.83, 0.6);
    const auto b = bousq::jacobi_eval(0.83 + 4.0 * K6, 0.6);
    const double per = std::max(
        {std::abs(a.sn - b.sn), std::abs(a.cn - b.cn), std::abs(a.dn - b.dn)});
    d = fmt("sn/cn/dn identities over 1e4 draws: worst=%.2e limits=%.2e period=%.2e", worst, lim,
            per);
    return worst < 1e-12 && lim < 1e-13 && per < 1e-10 && k_ok;
}

bool crit2_soliton(std::string& d) {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> xd(-6.0, 6.0), td(0.0, 4.0);
    double worst = 0.0;
    for (double k : {0.2, 0.25, 0.4}) {
        const double v = std::sqrt(1.0 + 4.0 * k * k);
        bousq::Field u = [k, v](const Jet& x, const Jet& t) {
            Jet s = sech(k * (x - v * t));
            return (2.0 * k * k) * s * s;
        };
        for (int rep = 0; rep < 100; ++rep) {
            const auto terms =
                bousq::pde_residual_terms(bousq::PdeForm::assigned(), u, xd(rng), td(rng));
            double sum = 0.0, scale = 0.0;
            for (const auto& [name, val] : terms) {
                sum += val;
                scale = std::max(scale, std::abs(val));
            }
            if (scale > 0.0) worst = std::max(worst, std::abs(sum) / scale);
        }
    }
    // a detuned speed must not slip through
    const double kd = 0.25, vd = std::sqrt(1.25) * 1.05;
    bousq::Field ud = [kd, vd](const Jet& x, const Jet& t) {
        Jet s = sech(kd * (x - vd * t));
        return (2.0 * kd * kd) * s * s;
    };
    const auto terms = bousq::pde_residual_terms(bousq::PdeForm::assigned(), ud, 0.7, 0.9);
    double sum = 0.0, scale = 0.0;
    for (const auto& [name, val] : terms) {
        sum += val;
        scale = std::max(scale, std::abs(val));
    }
    const bool control = std::abs(sum) > 1e-4 * scale;
    d = fmt("sech^2 residual worst=%.2e, detuned control %s", worst,
            control ? "rejected" : "NOT rejected");
    return worst < 1e-9 && control;
}

bool crit3_reduction(std::string& d) {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> par(0.3, 2.0), cpar(0.2, 3.0), xd(-2.0, 2.0);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const double lambda = par(rng), mu = par(rng), c = cpar(rng);
        const double A = 0.5 + par(rng), w = 1.0 + 2.0 * par(rng);
        const bousq::WaveFrame frame{lambda, mu};
        const bousq::NonlinearitySpec sq{{{1.0, 2.0}}};
        const bousq::PdeForm form = bousq::PdeForm::generalized(c, sq);
        bousq::Profile h = [A, w](const Jet& z) { return A * exp(-(z * z) / w); };
        bousq::Field u = [&frame, &h](const Jet& x, const Jet& t) {
            return h(frame.mu * x - frame.lambda * t);
        };
        const double x0 = xd(rng), t0 = xd(rng);
        const double z0 = mu * x0 - lambda * t0;
        const auto ode = bousq::reduce(form, frame);
        const double pde = bousq::pde_residual(form, u, x0, t0);
        const Jet functional = bousq::ode_functional_jet(ode, h, Jet::seed_x(z0));
        const double ode_d2 = bousq::extract_partial(functional, 2, 0);
        double scale = 1.0;
        for (const auto& [name, val] : bousq::pde_residual_terms(form, u, x0, t0))
            scale = std::max(scale, std::abs(val));
        worst = std::max(worst, std::abs(pde - ode_d2) / scale);
    }
    d = fmt("pde residual vs d^2/dz^2 of reduced functional, 50 draws: worst=%.2e", worst);
    return worst < 1e-9;
}

bool crit4_families(std::string& d) {
    using bousq::JacobiKind;
    int count = 0;
    double worst = 0.0;
    for (JacobiKind kind : {JacobiKind::Sn, JacobiKind::Cn, JacobiKind::Dn})
        for (double m : {0.0, 0.3, 0.7, 1.0}) {
            if (kind == JacobiKind::Dn && m == 0.0) continue;
            for (double beta : {1.0, 2.0, 3.0})
                for (double alpha : {1.0, 0.25}) {
                    const bousq::Ansatz an{kind, m, alpha, beta};
                    worst = std::max(worst, identity_sup(an, 0.8, 200));
                    ++count;
                }
        }
    d = fmt("%d ansatz configurations, 200 points each: worst=%.2e", count, worst);
    return count == 66 && worst < 1e-8;
}

bool crit5_gg(std::string& d) {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> ad(-2.0, 2.0), fd(0.5, 2.0), cd(0.5, 3.0);

    // the cubic coefficient locks exactly onto 2 alpha a4
    bool ratio_exact = true;
    for (int i = 0; i < 200; ++i) {
        const double alpha = ad(rng);
        const auto det = bousq::gg_determine(alpha, {fd(rng), fd(rng)}, cd(rng));
        if (det.a[3] != 2.0 * alpha * det.a[4]) ratio_exact = false;
    }
    const auto pinned = bousq::gg_determine(0.0, {2.0, 1.0}, 4.0);
    const bool b_ok = std::abs(pinned.B - (-2.25)) < 1e-14;

    // both evaluation paths of the expansion agree on every branch
    std::uniform_real_distribution<double> coef(-1.5, 1.5), dd(0.2, 1.2), zd(0.3, 1.2),
        c2d(0.1, 0.4);
    double worst = 0.0;
    int nhyp = 0, ntrig = 0, attempts = 0;
    auto gap_at = [&](const bousq::GGProfileParams& p, double z) -> double {
        const Jet zs = Jet::seed_x(z);
        const Jet hs = bousq::gg_h_sum(p)(zs);
        const Jet hc = bousq::gg_h_closed(p)(zs);
        const double s0 = std::max({1.0, std::abs(hs.value()), std::abs(hc.value())});
        if (s0 > 1e6) return -1.0;  // pole proximity; draw again
        const double d0 = std::abs(hs.value() - hc.value()) / s0;
        const double p1 = bousq::extract_partial(hs, 1, 0), p2 = bousq::extract_partial(hc, 1, 0);
        const double s1 = std::max({1.0, std::abs(p1), std::abs(p2)});
        if (s1 > 1e6) return -1.0;
        return std::max(d0, std::abs(p1 - p2) / s1);
    };
    while ((nhyp < 50 || ntrig < 50) && attempts < 1000) {
        ++attempts;
        const bool want_hyp = nhyp <= ntrig;
        bousq::GGProfileParams p;
        for (auto& v : p.a) v = coef(rng);
        p.alphaG = coef(rng);
        p.betaG = p.alphaG * p.alphaG / 4.0 + (want_hyp ? -dd(rng) : dd(rng));
        p.c1 = 1.0;
        p.c2 = c2d(rng);
        if (bousq::gg_branch(p.alphaG, p.betaG) !=
            (want_hyp ? bousq::GGBranch::Hyperbolic : bousq::GGBranch::Trigonometric))
            continue;
        const double g = gap_at(p, zd(rng));
        if (g < 0.0) continue;
        worst = std::max(worst, g);
        (want_hyp ? nhyp : ntrig) += 1;
    }
    bousq::GGProfileParams pr{{0.3, -0.7, 0.2, 0.9, -0.5}, 1.0, 0.25, 1.0, 0.7};
    bool rational_ok = bousq::gg_branch(pr.alphaG, pr.betaG) == bousq::GGBranch::Rational;
    for (double z : {-2.0, 0.3, 1.4}) {
        const double g = gap_at(pr, z);
        rational_ok = rational_ok && g >= 0.0 && g < 1e-12;
    }
    d = fmt("a3=2*alpha*a4 %s; dual-path worst=%.2e (%d hyp, %d trig, rational pinned %s)",
            ratio_exact ? "exact" : "BROKEN", worst, nhyp, ntrig, rational_ok ? "ok" : "bad");
    return ratio_exact && b_ok && nhyp >= 50 && ntrig >= 50 && worst < 1e-10 && rational_ok;
}

bool crit6_registry(std::string& d) {
    const auto rep = bousq::run_registry();
    const auto& want = expected_status();
    int mismatches = 0;
    for (const auto& r : rep.claims) {
        const auto it = want.find(r.id);
        if (it == want.end() || r.status != it->second) ++mismatches;
    }
    const bool table_ok = rep.claims.size() == want.size() && rep.claims.size() >= 12 &&
                          mismatches == 0 && bousq::all_derived_pass(rep);
    const bool deterministic = bousq::report_json(rep) == bousq::report_json(bousq::run_registry());

    // a perturbed exact solution must fail, with first-order residual scaling
    const auto s = bousq::named_solution("assigned_soliton", {{"k", 0.25}});
    auto perturbed = [&s](double eps) {
        bousq::Claim c;
        c.id = "control.perturbed";
        c.paper_ref = "derived";
        c.tolerance = 1e-8;
        c.binding = bousq::Claim::Binding::Pde;
        c.form = s.form;
        c.u = [base = s.u, eps](const Jet& x, const Jet& t) {
            return base(x, t) + eps * sin(2.0 * x);
        };
        return bousq::run_claim(c, bousq::GridSpec{});
    };
    const auto r3 = perturbed(1e-3);
    const auto r4 = perturbed(1e-4);
    const double ratio = r4.sup_residual > 0.0 ? r3.sup_residual / r4.sup_residual : 0.0;
    const bool control = r3.status == "FAIL" && r4.status == "FAIL" && ratio > 10.0 / 3.0 &&
                         ratio < 30.0;
    d = fmt("%zu claims, %d verdict mismatches (transcribed failures are recorded findings); "
            "json %s; perturbation ratio %.1f",
            rep.claims.size(), mismatches, deterministic ? "deterministic" : "UNSTABLE", ratio);
    return table_ok && deterministic && control;
}

bool crit7_dispersion(std::string& d) {
    bousq::Spectral sp({64, 4.0 * M_PI});
    const double om_true = std::sqrt(3.0) / 4.0;
    const auto x = sp.nodes();
    std::vector<double> u0(64), v0(64, 0.0);
    for (int n = 0; n < 64; ++n) u0[n] = 0.01 * std::cos(0.5 * x[n]);
    bousq::SimConfig cfg;
    cfg.dt = 0.0725;
    cfg.t_end = 145.0;  // ~10 periods
    cfg.nonlinear = false;
    cfg.k_cut = 0.5;
    cfg.stride = 1;
    const auto r = bousq::run_simulation(sp, u0, v0, cfg);
    if (r.status != bousq::RunStatus::Completed) {
        d = "run did not complete";
        return false;
    }
    for (const auto& diag : r.diagnostics) g_mass_a.push_back(diag.mass);
    std::vector<double> ts, ss;
    for (const auto& fr : r.frames) {
        ts.push_back(fr.t);
        ss.push_back(sp.forward(fr.u)[1].real());
    }
    std::vector<double> cross;
    for (size_t i = 1; i < ts.size(); ++i)
        if ((ss[i - 1] < 0.0) != (ss[i] < 0.0) && ss[i] != ss[i - 1])
            cross.push_back(ts[i - 1] - ss[i - 1] * (ts[i] - ts[i - 1]) / (ss[i] - ss[i - 1]));
    if (cross.size() < 6) {
        d = fmt("only %zu zero crossings", cross.size());
        return false;
    }
    const double spacing = (cross.back() - cross.front()) / (cross.size() - 1);
    const double om = M_PI / spacing;
    const double rel = std::abs(om - om_true) / om_true;
    d = fmt("measured omega=%.8f vs sqrt(3)/4=%.8f, rel err %.2e (%zu crossings)", om, om_true,
            rel, cross.size());
    return rel < 0.01;
}

bool crit8_transport(std::string& d) {
    bousq::Spectral sp({1024, 200.0});
    const double k = 0.25, v = std::sqrt(1.25), x0 = 50.0;
    const auto xs = sp.nodes();
    std::vector<double> u0(1024);
    for (int n = 0; n < 1024; ++n) {
        const double s = 1.0 / std::cosh(k * (xs[n] - x0));
        u0[n] = 2.0 * k * k * s * s;
    }
    const auto ut0 = bousq::traveling_ut0(sp, u0, v);
    bousq::SimConfig cfg;
    cfg.dt = 0.05;
    cfg.t_end = 20.0;
    cfg.k_cut = 1.0;
    cfg.stride = 8;
    const auto r = bousq::run_simulation(sp, u0, ut0, cfg);
    if (r.status != bousq::RunStatus::Completed) {
        d = "run did not complete";
        return false;
    }
    for (const auto& diag : r.diagnostics) g_mass_b.push_back(diag.mass);

    const double x_true = x0 + v * 20.0;
    const auto& uf = r.frames.back().u;
    double sup = 0.0;
    int npk = 0;
    for (int n = 0; n < 1024; ++n) {
        const double s = 1.0 / std::cosh(k * (xs[n] - x_true));
        sup = std::max(sup, std::abs(uf[n] - 2.0 * k * k * s * s));
        if (uf[n] > uf[npk]) npk = n;
    }
    const double dx = 200.0 / 1024.0;
    const double ym = uf[npk - 1], y0 = uf[npk], yp = uf[npk + 1];
    const double delta = 0.5 * (ym - yp) / (ym - 2.0 * y0 + yp);
    const double x_peak = xs[npk] + delta * dx;
    d = fmt("final profile sup err=%.2e (cap %.2e); peak at %.4f vs %.4f (cap half cell %.3f)",
            sup, 0.05 * 0.125, x_peak, x_true, 0.5 * dx);
    return sup < 0.05 * 0.125 && std::abs(x_peak - x_true) < 0.5 * dx;
}

bool crit9_growth(std::string& d) {
    bousq::Spectral sp({16, 7.0 * M_PI});
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> nd(-1e-8, 1e-8);
    std::vector<double> u0(16), v0(16, 0.0);
    for (auto& u : u0) u = nd(rng);
    if (std::abs(sp.forward(u0)[7]) < 1e-12) {
        d = "seed produced an empty mode 7";
        return false;
    }
    bousq::SimConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 2.0;
    cfg.stride = 1;
    cfg.blowup_factor = 1e6;
    const auto r = bousq::run_simulation(sp, u0, v0, cfg);
    if (r.status != bousq::RunStatus::Completed) {
        d = "run did not complete";
        return false;
    }
    std::vector<double> ts, ys;
    for (const auto& fr : r.frames) {
        if (fr.t < 1.2 - 1e-9 || fr.t > 2.0 + 1e-9) continue;
        ts.push_back(fr.t);
        ys.push_back(std::log(std::abs(sp.forward(fr.u)[7])));
    }
    if (ts.size() < 20) {
        d = "too few frames in the fit window";
        return false;
    }
    const double sigma_true = std::sqrt(12.0);
    const double sigma = slope_of(ts, ys);
    const double rel = std::abs(sigma - sigma_true) / sigma_true;
    d = fmt("mode-7 growth slope %.5f vs sqrt(12)=%.5f, rel err %.2e", sigma, sigma_true, rel);
    return rel < 0.05;
}

bool crit10_mass(std::string& d) {
    if (g_mass_a.size() < 3 || g_mass_b.size() < 3) {
        d = "no completed runs captured";
        return false;
    }
    double worst = 0.0;
    for (const auto* hist : {&g_mass_a, &g_mass_b})
        for (size_t i = 2; i < hist->size(); ++i)
            worst = std::max(worst, std::abs((*hist)[i] - 2.0 * (*hist)[i - 1] + (*hist)[i - 2]));
    d = fmt("max mass second difference %.2e over %zu+%zu samples", worst, g_mass_a.size(),
            g_mass_b.size());
    return worst < 1e-8;
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    run_criterion(1, 2.0, crit1_elliptic);
    run_criterion(2, 0.0, crit2_soliton);
    run_criterion(3, 0.0, crit3_reduction);
    run_criterion(4, 30.0, crit4_families);
    run_criterion(5, 0.0, crit5_gg);
    run_criterion(6, 0.0, crit6_registry);
    run_criterion(7, 0.0, crit7_dispersion);
    run_criterion(8, 0.0, crit8_transport);
    run_criterion(9, 0.0, crit9_growth);
    run_criterion(10, 0.0, crit10_mass);
    const double total = std::chrono::duration<double>(Clock::now() - t0).count();
    report(11, total < 180.0, fmt("total elapsed %.1fs, budget 180s", total), total);
    if (g_failures > 0) {
        std::printf("%d criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
