#include "bousq/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace bousq {

GridSpec GridSpec::refined(int factor) const {
    GridSpec g = *this;
    g.nx = (nx - 1) * factor + 1;
    g.nt = (nt - 1) * factor + 1;
    g.nz = (nz - 1) * factor + 1;
    return g;
}

namespace {

double lin(double a, double b, int i, int n) {
    return n <= 1 ? a : a + (b - a) * i / (n - 1);
}

void fold_terms(TermBreakdown& sup, const TermBreakdown& terms) {
    if (sup.empty()) {
        for (const auto& [name, v] : terms) sup.emplace_back(name, std::abs(v));
        return;
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        sup[i].second = std::max(sup[i].second, std::abs(terms[i].second));
}

TermBreakdown surface_terms(const Claim& c, double x, double t) {
    auto [xj, tj] = jet_seed(x, t, kJetNX, kJetNT);
    const Jet U = c.u(xj, tj);
    TermBreakdown terms;
    terms.emplace_back("l*u_x", c.frame.lambda * extract_partial(U, 1, 0));
    terms.emplace_back("m*u_t", c.frame.mu * extract_partial(U, 0, 1));
    return terms;
}

}  // namespace

ClaimResult run_claim(const Claim& claim, const GridSpec& grid) {
    ClaimResult res;
    res.id = claim.id;
    res.paper_ref = claim.paper_ref;
    res.variant = claim.variant;
    res.derived = claim.derived;

    TermBreakdown sup_terms;
    double sup_abs = 0.0, sum_sq = 0.0;
    long valid = 0, errors = 0;

    auto feed = [&](const TermBreakdown& terms) {
        double r = 0.0;
        for (const auto& [name, v] : terms) {
            (void)name;
            r += v;
        }
        fold_terms(sup_terms, terms);
        sup_abs = std::max(sup_abs, std::abs(r));
        sum_sq += r * r;
        ++valid;
    };

    if (claim.binding == Claim::Binding::Ode) {
        const double z0 = claim.has_interval ? claim.iz0 : grid.z0;
        const double z1 = claim.has_interval ? claim.iz1 : grid.z1;
        ReducedOde ode = reduce(claim.form, claim.frame, claim.A, claim.B);
        for (int i = 0; i < grid.nz; ++i) {
            const double z = lin(z0, z1, i, grid.nz);
            if (claim.exclude_ode && claim.exclude_ode(z)) continue;
            try {
                feed(ode_residual_terms(ode, claim.h, z));
            } catch (const JetDomainError&) {
                ++errors;
            }
        }
    } else {
        for (int i = 0; i < grid.nx; ++i)
            for (int j = 0; j < grid.nt; ++j) {
                const double x = lin(grid.x0, grid.x1, i, grid.nx);
                const double t = lin(grid.t0, grid.t1, j, grid.nt);
                if (claim.exclude_pde && claim.exclude_pde(x, t)) continue;
                try {
                    if (claim.binding == Claim::Binding::Surface)
                        feed(surface_terms(claim, x, t));
                    else
                        feed(pde_residual_terms(claim.form, claim.u, x, t));
                } catch (const JetDomainError&) {
                    ++errors;
                }
            }
    }

    res.breakdown = sup_terms;
    double normalizer = 0.0;
    for (const auto& [name, v] : sup_terms) {
        (void)name;
        normalizer = std::max(normalizer, v);
    }
    if (normalizer > 0.0) {
        res.sup_residual = sup_abs / normalizer;
        res.l2_residual = valid > 0 ? std::sqrt(sum_sq / valid) / normalizer : 0.0;
    } else {
        // Identically-zero terms: the claim holds trivially; anything else
        // with no scale to compare against is infinitely wrong.
        res.sup_residual = sup_abs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        res.l2_residual = res.sup_residual;
    }

    const long attempted = valid + errors;
    if (attempted == 0 || errors > 0.01 * attempted) {
        res.status = "DOMAIN_ERROR";
    } else {
        res.status = res.sup_residual < claim.tolerance ? "PASS" : "FAIL";
    }
    return res;
}

namespace {

NonlinearitySpec f_square() { return NonlinearitySpec{{{1.0, 2.0}}}; }

Claim base_claim(std::string id, std::string ref, bool derived) {
    Claim c;
    c.id = std::move(id);
    c.paper_ref = std::move(ref);
    c.derived = derived;
    c.tolerance = derived ? 1e-8 : 1e-6;
    return c;
}

Claim named_pde_claim(const std::string& claim_id, const std::string& solution_id, double c,
                      bool derived) {
    NamedSolution s = named_solution(solution_id, {{"c", c}});
    Claim cl = base_claim(claim_id, s.paper_ref, derived);
    cl.binding = Claim::Binding::Pde;
    cl.form = s.form;
    cl.frame = s.frame;
    cl.u = s.u;
    cl.exclude_pde = s.exclude;
    return cl;
}

Claim direct_ode_claim(const std::string& claim_id, const Ansatz& ansatz, const WaveFrame& frame,
                       double c, Alpha5Variant variant, bool derived, double z0, double z1) {
    Claim cl = base_claim(claim_id, "eq24", derived);
    cl.binding = Claim::Binding::Ode;
    cl.frame = frame;
    cl.form = PdeForm::generalized(c, direct_f(ansatz, frame, c, variant));
    cl.h = direct_profile(ansatz);
    cl.variant = std::string("alpha5=") + to_string(variant);
    cl.has_interval = true;
    cl.iz0 = z0;
    cl.iz1 = z1;
    return cl;
}

Claim gg_ode_claim(const std::string& claim_id, const std::string& ref, const GGSolutionSpec& spec) {
    Claim cl = base_claim(claim_id, ref, false);
    cl.binding = Claim::Binding::Ode;
    cl.frame = spec.frame;
    cl.form = PdeForm::generalized(spec.c, f_square());
    cl.A = 0.0;
    cl.B = gg_determine(0.0, spec.frame, spec.c).B;
    cl.h = gg_solution_profile(spec);
    return cl;
}

}  // namespace

std::vector<Claim> builtin_claims() {
    std::vector<Claim> claims;

    {
        Claim c = base_claim("derived.zero_assigned", "derived", true);
        c.binding = Claim::Binding::Pde;
        c.form = PdeForm::assigned();
        c.u = [](const Jet& x, const Jet& t) { return 0.0 * (x + t); };
        claims.push_back(std::move(c));
    }
    {
        Claim c = base_claim("derived.constant_assigned", "derived", true);
        c.binding = Claim::Binding::Pde;
        c.form = PdeForm::assigned();
        c.u = [](const Jet& x, const Jet& t) { return 0.0 * (x + t) + 0.7; };
        claims.push_back(std::move(c));
    }
    {
        NamedSolution s = named_solution("assigned_soliton", {{"k", 0.25}});
        Claim c = base_claim("derived.soliton_assigned_pde", s.paper_ref, true);
        c.binding = Claim::Binding::Pde;
        c.form = s.form;
        c.frame = s.frame;
        c.u = s.u;
        claims.push_back(std::move(c));

        Claim o = base_claim("derived.soliton_assigned_ode", s.paper_ref, true);
        o.binding = Claim::Binding::Ode;
        o.form = s.form;
        o.frame = s.frame;
        o.h = s.h;
        claims.push_back(std::move(o));

        Claim iv = base_claim("derived.invariant_surface_soliton", s.paper_ref, true);
        iv.binding = Claim::Binding::Surface;
        iv.frame = s.frame;
        iv.u = s.u;
        claims.push_back(std::move(iv));
    }
    {
        NamedSolution s = named_solution("kink");
        Claim iv = base_claim("derived.invariant_surface_kink", "eq28", true);
        iv.binding = Claim::Binding::Surface;
        iv.frame = s.frame;
        iv.u = s.u;
        claims.push_back(std::move(iv));
    }

    // Representative direct-method families.  The sn case at mu = 2 separates
    // the two fifth-coefficient conventions; the derived one must vanish.
    {
        const Ansatz sn24{JacobiKind::Sn, 0.3, 1.0, 2.0};
        const WaveFrame fr{1.0, 2.0};
        claims.push_back(direct_ode_claim("direct.sn24_inverted", sn24, fr, 0.7,
                                          Alpha5Variant::Inverted, true, 0.35, 3.0));
        claims.push_back(direct_ode_claim("direct.sn24_paper_variant", sn24, fr, 0.7,
                                          Alpha5Variant::Paper, false, 0.35, 3.0));
    }
    claims.push_back(direct_ode_claim("direct.cn_m07_inverted", {JacobiKind::Cn, 0.7, 1.0, 2.0},
                                      {0.8, 1.0}, 0.6, Alpha5Variant::Inverted, true, -1.8, 1.8));
    claims.push_back(direct_ode_claim("direct.dn_m05_inverted", {JacobiKind::Dn, 0.5, 0.8, 1.0},
                                      {1.2, 1.0}, 0.5, Alpha5Variant::Inverted, true, -10.0, 10.0));

    // Transcribed named solutions, at the generic c they were stated for and,
    // where the printed coefficients only close at c = 1, at that value too.
    claims.push_back(named_pde_claim("paper.compacton_sin2", "compacton_sin2", 2.0, false));
    claims.push_back(named_pde_claim("paper.compacton_sin2_c1", "compacton_sin2", 1.0, false));
    claims.push_back(named_pde_claim("paper.kink", "kink", 2.0, false));
    claims.push_back(named_pde_claim("paper.antikink", "antikink", 2.0, false));
    claims.push_back(named_pde_claim("paper.compacton_cos2", "compacton_cos2", 2.0, false));
    claims.push_back(named_pde_claim("paper.soliton_sech2", "soliton_sech2", 2.0, false));
    claims.push_back(named_pde_claim("paper.soliton_sech2_c1", "soliton_sech2", 1.0, false));

    // Transcribed G'/G solutions, bound to the reduced functional with the
    // integration constant the determination fixes.
    claims.push_back(gg_ode_claim("paper.gg_u1", "eq51", {1, {1.0, 1.0}, 0.5, 2.0, 1.0}));
    claims.push_back(gg_ode_claim("paper.gg_u2", "eq52", {2, {1.0, 1.0}, 2.0, 1.0, 0.0}));
    claims.push_back(gg_ode_claim("paper.gg_u3", "eq53", {3, {2.0, 1.0}, 4.0, 1.0, 15.0}));
    {
        const GGSolutionSpec spec{3, {1.0, 1.0}, 1.0, 1.0, 0.0};
        Claim c = base_claim("paper.gg_u3_pde", "eq53", false);
        c.binding = Claim::Binding::Pde;
        c.form = PdeForm::generalized(1.0, f_square());
        c.frame = spec.frame;
        c.u = gg_solution(spec);
        c.exclude_pde = [](double x, double t) { return std::abs(x - t) < 1.0; };
        claims.push_back(std::move(c));
    }

    std::sort(claims.begin(), claims.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return claims;
}

VerificationReport run_registry(const GridSpec& grid) {
    VerificationReport report;
    report.grid = grid;
    for (const Claim& c : builtin_claims()) report.claims.push_back(run_claim(c, grid));
    std::sort(report.claims.begin(), report.claims.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    return report;
}

bool all_derived_pass(const VerificationReport& report) {
    for (const auto& r : report.claims)
        if (r.derived && r.status != "PASS") return false;
    return true;
}

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["grid"] = {{"x0", report.grid.x0}, {"x1", report.grid.x1}, {"nx", report.grid.nx},
                 {"t0", report.grid.t0}, {"t1", report.grid.t1}, {"nt", report.grid.nt},
                 {"z0", report.grid.z0}, {"z1", report.grid.z1}, {"nz", report.grid.nz}};
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& r : report.claims) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["paper_ref"] = r.paper_ref;
        if (!r.variant.empty()) c["variant"] = r.variant;
        c["status"] = r.status;
        c["sup_residual"] = r.sup_residual;
        c["l2_residual"] = r.l2_residual;
        nlohmann::ordered_json b;
        for (const auto& [name, v] : r.breakdown) b[name] = v;
        c["breakdown"] = std::move(b);
        j["claims"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
    std::string out = "id,status,sup_residual,l2_residual\n";
    char buf[128];
    for (const auto& r : report.claims) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", r.sup_residual, r.l2_residual);
        out += r.id + "," + r.status + "," + buf + "\n";
    }
    return out;
}

}  // namespace bousq
