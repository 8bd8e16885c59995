#include "bousq/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace bousq {

namespace {

// Scalar power with the same domain contract as the jet primitive: integer
// exponents work for any base, fractional ones require base > 0.
double spow(double base, double e) {
    double ip = 0.0;
    if (std::modf(e, &ip) == 0.0) return std::pow(base, e);
    if (!(base > 0.0))
        throw std::domain_error("fractional power of non-positive base in coefficient table");
    return std::pow(base, e);
}

}  // namespace

std::string to_string(JacobiKind k) {
    switch (k) {
        case JacobiKind::Sn: return "sn";
        case JacobiKind::Cn: return "cn";
        case JacobiKind::Dn: return "dn";
    }
    return "?";
}

JacobiKind jacobi_kind_from_id(const std::string& id) {
    if (id == "sn") return JacobiKind::Sn;
    if (id == "cn") return JacobiKind::Cn;
    if (id == "dn") return JacobiKind::Dn;
    throw std::invalid_argument("unknown jacobi kind: " + id);
}

JacobiOdeParams jacobi_ode_params(JacobiKind kind, double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::domain_error("jacobi_ode_params: m outside [0, 1]");
    switch (kind) {
        case JacobiKind::Sn: return {1.0, -(1.0 + m), m};
        case JacobiKind::Cn: return {1.0 - m, 2.0 * m - 1.0, -m};
        case JacobiKind::Dn:
            if (m == 0.0)
                throw std::domain_error("jacobi_ode_params: dn-family is singular at m = 0");
            return {m - 1.0, 2.0 - m, -1.0};
    }
    throw std::invalid_argument("jacobi_ode_params: bad kind");
}

NonlinearitySpec CoefficientSet::F() const {
    NonlinearitySpec f;
    for (int i = 0; i < 5; ++i)
        if (base[i] != 0.0) f.terms.emplace_back(base[i], exponents[i]);
    return f;
}

CoefficientSet direct_coefficients(const Ansatz& ansatz, double b) {
    if (ansatz.beta == 0.0) throw std::invalid_argument("direct_coefficients: beta must be nonzero");
    const auto [r, p, q] = jacobi_ode_params(ansatz.kind, ansatz.m);
    const double be = ansatz.beta;
    const double al = ansatz.alpha;
    CoefficientSet set;
    set.ansatz = ansatz;
    set.b = b;
    set.exponents = {1.0 + 4.0 / be, 1.0 + 2.0 / be, 1.0 - 4.0 / be, 1.0 - 2.0 / be, 1.0};
    set.base[0] = -spow(al, -4.0 / be) * be * (be + 1) * (be + 2) * (be + 3) * q * q;
    set.base[1] = -spow(al, -2.0 / be) * be * (be + 1) * q * ((2 * be * be + 4 * be + 4) * p + b);
    set.base[2] = -spow(al, 4.0 / be) * be * (be - 1) * (be - 2) * (be - 3) * r * r;
    set.base[3] = -spow(al, 2.0 / be) * be * (be - 1) * r * ((2 * be * be - 4 * be + 4) * p + b);
    set.base[4] = -(std::pow(be, 4) * p * p + (2 * std::pow(be, 4) + 10 * be * be) * q * r +
                    b * be * be * p);
    return set;
}

std::string to_string(Alpha5Variant v) {
    return v == Alpha5Variant::Paper ? "paper" : "inverted";
}

NonlinearitySpec direct_f(const Ansatz& ansatz, const WaveFrame& frame, double c,
                          Alpha5Variant variant) {
    const double l2 = frame.lambda * frame.lambda;
    const double m2 = frame.mu * frame.mu;
    if (l2 == 0.0 || m2 == 0.0) throw std::invalid_argument("direct_f: degenerate frame");
    const double b = (m2 * c - l2) / (m2 * l2);
    const CoefficientSet set = direct_coefficients(ansatz, b);
    NonlinearitySpec f;
    for (int i = 0; i < 4; ++i)
        if (set.base[i] != 0.0) f.terms.emplace_back(-m2 * l2 * set.base[i], set.exponents[i]);
    const double extra = variant == Alpha5Variant::Paper ? m2 * (l2 - m2) : (l2 - m2) / m2;
    const double c5 = -m2 * l2 * set.base[4] + extra;
    if (c5 != 0.0) f.terms.emplace_back(c5, 1.0);
    return f;
}

Profile direct_profile(const Ansatz& ansatz) {
    return [ansatz](const Jet& z) {
        const JacobiJetTriple T = jacobi_jet(z, ansatz.m);
        const Jet* H = &T.sn;
        if (ansatz.kind == JacobiKind::Cn) H = &T.cn;
        if (ansatz.kind == JacobiKind::Dn) H = &T.dn;
        return ansatz.alpha * pow(*H, ansatz.beta);
    };
}

Field direct_solution(const Ansatz& ansatz, const WaveFrame& frame) {
    Profile h = direct_profile(ansatz);
    return [h = std::move(h), frame](const Jet& x, const Jet& t) {
        return h(frame.mu * x - frame.lambda * t);
    };
}

// ---------------------------------------------------------------------------

namespace {

NonlinearitySpec poly_f(std::initializer_list<std::pair<double, double>> terms) {
    NonlinearitySpec f;
    for (const auto& t : terms)
        if (t.first != 0.0) f.terms.push_back(t);
    return f;
}

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> named_solution_ids() {
    return {"compacton_sin2", "kink", "antikink", "compacton_cos2", "soliton_sech2",
            "assigned_soliton"};
}

NamedSolution named_solution(const std::string& id,
                             const std::map<std::string, double>& params) {
    NamedSolution s;
    s.id = id;
    const double kappa = std::sqrt(5.0 / 48.0);  // sin^2/cos^2 compacton wavenumber

    if (id == "compacton_sin2" || id == "compacton_cos2") {
        const bool sin2 = id == "compacton_sin2";
        const double c = param_or(params, "c", 2.0);
        s.frame = {kappa, kappa};
        // Support half-width in x-t: theta = kappa (x-t) spans one sin^2 period
        // [-pi, pi] for the sin^2 branch and [-pi/2, pi/2] for cos^2.
        const double W = sin2 ? M_PI / kappa : 0.5 * M_PI / kappa;
        const double g = (5.0 / 288.0) * (12.0 * c * c - 17.0);
        const double sgn = sin2 ? -1.0 : 1.0;
        s.form = PdeForm::generalized(c, poly_f({{sgn * 2.0 * g, 1.0}, {-sgn * g, 0.0}}));
        s.u = [kappa, W, sin2](const Jet& x, const Jet& t) {
            const double sv = x.value() - t.value();
            if (std::abs(sv) > W) return 0.0 * (x + t);
            const Jet th = kappa * (x - t);
            const Jet w = sin2 ? sin(th) : cos(th);
            return w * w;
        };
        s.h = [sin2](const Jet& z) {
            if (std::abs(z.value()) > (sin2 ? M_PI : 0.5 * M_PI)) return 0.0 * z;
            const Jet w = sin2 ? sin(z) : cos(z);
            return w * w;
        };
        s.exclude = [W](double x, double t) {
            return std::abs(std::abs(x - t) - W) < 0.35;  // skip the support edge
        };
        s.description = sin2 ? "compact sin^2 pulse on |x-t| <= pi*sqrt(48/5)"
                             : "compact cos^2 bump on |x-t| <= pi*sqrt(12/5)";
        s.paper_ref = sin2 ? "eq26" : "eq34";
        s.params = {{"c", c}};
        return s;
    }

    if (id == "kink") {
        const double c = param_or(params, "c", 2.0);
        s.frame = {0.5, 1.0};
        s.form = PdeForm::generalized(
            c, poly_f({{1536.0, 5.0}, {32.0 * c - 168.0, 3.0}, {15.0 / 4.0 - 2.0 * c, 1.0}}));
        s.u = [](const Jet& x, const Jet& t) { return 0.25 * tanh(x - 0.5 * t); };
        s.h = [](const Jet& z) { return 0.25 * tanh(z); };
        s.description = "kink u = tanh(x - t/2)/4";
        s.paper_ref = "eq28";
        s.params = {{"c", c}};
        return s;
    }

    if (id == "antikink") {
        const double c = param_or(params, "c", 2.0);
        s.frame = {0.5, 1.0};
        s.form = PdeForm::generalized(
            c, poly_f({{90.0, 7.0 / 3.0},
                       {3.0 * (4.0 * c * c - 69.0), 5.0 / 3.0},
                       {1.5 * (4.0 * c * c - 21.0), 1.0 / 3.0},
                       {-0.75 * (24.0 * c * c - 197.0), -1.0 / 3.0}}));
        s.u = [](const Jet& x, const Jet& t) {
            const Jet th = tanh(x - 0.5 * t);
            return th * th * th;
        };
        s.h = [](const Jet& z) {
            const Jet th = tanh(z);
            return th * th * th;
        };
        // Fractional powers of h need h > 0 strictly.
        s.exclude = [](double x, double t) { return x - 0.5 * t < 0.05; };
        s.description = "antikink-type profile u = tanh^3(x - t/2)";
        s.paper_ref = "eq30";
        s.params = {{"c", c}};
        return s;
    }

    if (id == "soliton_sech2") {
        const double c = param_or(params, "c", 2.0);
        s.frame = {1.0, 1.0};
        s.form = PdeForm::generalized(c, poly_f({{120.0, 3.0},
                                                 {-6.0 * (c * c + 19.0), 2.0},
                                                 {4.0 * (c * c + 3.0), 1.0}}));
        s.u = [](const Jet& x, const Jet& t) {
            const Jet w = sech(x - t);
            return w * w;
        };
        s.h = [](const Jet& z) {
            const Jet w = sech(z);
            return w * w;
        };
        s.description = "solitary pulse u = sech^2(x - t)";
        s.paper_ref = "eq38";
        s.params = {{"c", c}};
        return s;
    }

    if (id == "assigned_soliton") {
        const double k = param_or(params, "k", 0.25);
        if (!(k > 0.0)) throw std::invalid_argument("assigned_soliton: k must be positive");
        const double v = std::sqrt(1.0 + 4.0 * k * k);
        s.frame = {k * v, k};
        s.form = PdeForm::assigned();
        s.u = [k, v](const Jet& x, const Jet& t) {
            const Jet w = sech(k * (x - v * t));
            return 2.0 * k * k * (w * w);
        };
        s.h = [k](const Jet& z) {
            const Jet w = sech(z);
            return 2.0 * k * k * (w * w);
        };
        s.description = "sech^2 solitary wave of the assigned equation, speed sqrt(1+4k^2)";
        s.paper_ref = "derived";
        s.params = {{"k", k}, {"v", v}};
        return s;
    }

    throw std::invalid_argument("unknown named solution id: " + id);
}

// ---------------------------------------------------------------------------

GGDetermination gg_determine(double alphaG, const WaveFrame& frame, double c) {
    const double l2 = frame.lambda * frame.lambda;
    const double m2 = frame.mu * frame.mu;
    if (l2 == 0.0 || m2 == 0.0) throw std::invalid_argument("gg_determine: degenerate frame");
    const double a2g = alphaG * alphaG;
    GGDetermination d;
    d.alphaG = alphaG;
    d.a[0] = (3.0 * (5915.0 * a2g * a2g * l2 * l2 + 910.0 * c * a2g * l2 + 23.0 * c * c) * m2 * m2 -
              (169.0 + 6.0 * (455.0 * a2g * l2 + 23.0 * c)) * m2 * l2 + 238.0 * l2 * l2) /
             (338.0 * l2 * m2);
    d.a[1] = (420.0 / 13.0) * alphaG * ((13.0 * a2g * l2 + c) * m2 - l2);
    d.a[2] = (420.0 / 13.0) * ((39.0 * a2g * l2 + c) * m2 - l2);
    d.a[4] = 840.0 * l2 * m2;
    d.a[3] = 2.0 * alphaG * d.a[4];  // the a3 = 2 alpha a4 ratio holds exactly
    d.betaG = (13.0 * a2g * m2 * l2 - l2 + c * m2) / (52.0 * l2 * m2);
    const double q1 = -133.0 * l2 * l2 - (72.0 * c - 169.0) * m2 * l2 + 36.0 * c * c * m2 * m2;
    const double q2 = 205.0 * l2 * l2 - (72.0 * c + 169.0) * m2 * l2 + 36.0 * c * c * m2 * m2;
    d.B = q1 * q2 / (114244.0 * l2 * l2 * m2);
    return d;
}

std::string to_string(GGBranch b) {
    switch (b) {
        case GGBranch::Hyperbolic: return "hyperbolic";
        case GGBranch::Trigonometric: return "trigonometric";
        case GGBranch::Rational: return "rational";
    }
    return "?";
}

GGBranch gg_branch(double alphaG, double betaG) {
    const double disc = alphaG * alphaG - 4.0 * betaG;
    const double scale = std::max({alphaG * alphaG, 4.0 * std::abs(betaG), 1.0});
    if (std::abs(disc) <= 1e-12 * scale) return GGBranch::Rational;
    return disc > 0.0 ? GGBranch::Hyperbolic : GGBranch::Trigonometric;
}

namespace {

Jet gg_kernel(const GGProfileParams& p, GGBranch br, const Jet& z) {
    const double disc = p.alphaG * p.alphaG - 4.0 * p.betaG;
    switch (br) {
        case GGBranch::Hyperbolic: {
            const Jet w = 0.5 * std::sqrt(disc) * z;
            return (p.c2 * cosh(w) + p.c1 * sinh(w)) / (p.c1 * cosh(w) + p.c2 * sinh(w));
        }
        case GGBranch::Trigonometric: {
            const Jet v = 0.5 * std::sqrt(-disc) * z;
            return (p.c1 * cos(v) - p.c2 * sin(v)) / (p.c2 * cos(v) + p.c1 * sin(v));
        }
        case GGBranch::Rational:
            return Jet(p.c1) / (p.c1 * z + p.c2);
    }
    throw std::logic_error("gg_kernel: bad branch");
}

}  // namespace

Profile gg_phi(const GGProfileParams& p) {
    const GGBranch br = gg_branch(p.alphaG, p.betaG);
    return [p, br](const Jet& z) {
        const double disc = p.alphaG * p.alphaG - 4.0 * p.betaG;
        const Jet k = gg_kernel(p, br, z);
        switch (br) {
            case GGBranch::Hyperbolic: return -0.5 * p.alphaG + 0.5 * std::sqrt(disc) * k;
            case GGBranch::Trigonometric: return -0.5 * p.alphaG + 0.5 * std::sqrt(-disc) * k;
            case GGBranch::Rational: return -0.5 * p.alphaG + k;
        }
        throw std::logic_error("gg_phi: bad branch");
    };
}

Profile gg_h_sum(const GGProfileParams& p) {
    Profile phi = gg_phi(p);
    return [p, phi = std::move(phi)](const Jet& z) {
        const Jet f = phi(z);
        return Jet(p.a[0]) + f * (p.a[1] + f * (p.a[2] + f * (p.a[3] + f * p.a[4])));
    };
}

Profile gg_h_closed(const GGProfileParams& p) {
    const GGBranch br = gg_branch(p.alphaG, p.betaG);
    const double al = p.alphaG;
    const auto& a = p.a;
    const double cst =
        a[0] + (-0.5 * al) * (a[1] + (-0.5 * al) * (a[2] + (-0.5 * al) * (a[3] + (-0.5 * al) * a[4])));
    const double P1 = (4.0 * a[1] - 4.0 * a[2] * al + 3.0 * a[3] * al * al - 2.0 * a[4] * al * al * al) / 8.0;
    const double P2 = (2.0 * a[2] - 3.0 * a[3] * al + 3.0 * a[4] * al * al) / 8.0;
    const double P3 = (a[3] - 2.0 * a[4] * al) / 8.0;
    const double P4 = a[4] / 16.0;
    return [p, br, cst, P1, P2, P3, P4](const Jet& z) {
        const double disc = p.alphaG * p.alphaG - 4.0 * p.betaG;
        const Jet K = gg_kernel(p, br, z);
        const Jet K2 = K * K;
        switch (br) {
            case GGBranch::Hyperbolic: {
                const double S = std::sqrt(disc);
                return Jet(cst) + P1 * S * K + P2 * disc * K2 + P3 * S * S * S * (K2 * K) +
                       P4 * disc * disc * (K2 * K2);
            }
            case GGBranch::Trigonometric: {
                const double D = std::sqrt(-disc);
                return Jet(cst) + P1 * D * K + P2 * (-disc) * K2 + P3 * D * D * D * (K2 * K) +
                       P4 * disc * disc * (K2 * K2);
            }
            case GGBranch::Rational:
                return Jet(cst) + 2.0 * P1 * K + 4.0 * P2 * K2 + 8.0 * P3 * (K2 * K) +
                       16.0 * P4 * (K2 * K2);
        }
        throw std::logic_error("gg_h_closed: bad branch");
    };
}

// ---------------------------------------------------------------------------

namespace {

double gg_const_block(double c, double l2, double m2) {
    return 69.0 * c * c * m2 / (338.0 * l2) - 69.0 * c / 169.0 + 119.0 * l2 / (169.0 * m2) - 0.5;
}

}  // namespace

Profile gg_solution_profile(const GGSolutionSpec& spec) {
    const double l2 = spec.frame.lambda * spec.frame.lambda;
    const double m2 = spec.frame.mu * spec.frame.mu;
    if (l2 == 0.0 || m2 == 0.0) throw std::invalid_argument("gg_solution: degenerate frame");
    const double c = spec.c;
    const double gap = 1.0 / m2 - c / l2;  // sign selects the branch
    const double scale = std::max({1.0 / m2, std::abs(c) / l2, 1.0});
    const bool degenerate = std::abs(gap) <= 1e-12 * scale;
    const double cc = (c * m2 - l2) * (c * m2 - l2) / (l2 * m2);
    const double cb = gg_const_block(c, l2, m2);
    const double c1 = spec.c1, c2 = spec.c2;

    int index = spec.index;
    if (index != 1 && index != 2 && index != 3)
        throw std::invalid_argument("gg_solution: index must be 1, 2 or 3");
    if ((index == 1 || index == 2) && degenerate) index = 3;  // route to the rational form
    if (index == 1 && gap < 0.0)
        throw std::domain_error("gg_solution: form 1 requires c mu^2 < lambda^2");
    if (index == 2 && gap > 0.0)
        throw std::domain_error("gg_solution: form 2 requires c mu^2 > lambda^2");

    if (index == 1) {
        const double w1 = 0.5 * std::sqrt(gap / 13.0);
        return [w1, cc, cb, c1, c2](const Jet& z) {
            const Jet w = w1 * z;
            const Jet F = (c2 * cosh(w) + c1 * sinh(w)) / (c1 * cosh(w) + c2 * sinh(w));
            const Jet F2 = F * F;
            return (215040.0 / 169.0) * cc * (F2 * F2) - (6720.0 / 169.0) * cc * F2 + Jet(cb);
        };
    }
    if (index == 2) {
        const double w2 = 0.5 * std::sqrt(-gap / 13.0);
        return [w2, cc, cb, c1, c2](const Jet& z) {
            const Jet v = w2 * z;
            const Jet F = -(c2 * cos(v) + c1 * sin(v)) / (c2 * sin(v) - c1 * cos(v));
            const Jet F2 = F * F;
            return (105.0 / 338.0) * cc * (F2 * F2) + (105.0 / 169.0) * cc * F2 + Jet(cb);
        };
    }
    const double q2 = (420.0 / 13.0) * (c * m2 - l2);
    return [l2, m2, q2, cb, c1, c2](const Jet& z) {
        const Jet den = c1 * z + c2;
        const Jet den2 = den * den;
        return 840.0 * l2 * m2 * (c1 * c1) * (c1 * c1) / (den2 * den2) + q2 * (c1 * c1) / den2 +
               Jet(cb);
    };
}

Field gg_solution(const GGSolutionSpec& spec) {
    Profile h = gg_solution_profile(spec);
    const WaveFrame frame = spec.frame;
    return [h = std::move(h), frame](const Jet& x, const Jet& t) {
        return h(frame.mu * x - frame.lambda * t);
    };
}

// ---------------------------------------------------------------------------

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    for (const auto& id : named_solution_ids()) {
        NamedSolution s = named_solution(id);
        out.push_back({s.id, "named", s.paper_ref, s.description});
    }
    out.push_back({"gg_u1", "gg", "eq51", "hyperbolic G'/G solution (c mu^2 < lambda^2)"});
    out.push_back({"gg_u2", "gg", "eq52", "trigonometric G'/G solution (c mu^2 > lambda^2)"});
    out.push_back({"gg_u3", "gg", "eq53", "rational G'/G solution (c mu^2 = lambda^2)"});
    out.push_back({"direct_sn", "family", "eq24", "power ansatz on sn, derived nonlinearity"});
    out.push_back({"direct_cn", "family", "eq24", "power ansatz on cn, derived nonlinearity"});
    out.push_back({"direct_dn", "family", "eq24", "power ansatz on dn, derived nonlinearity"});
    return out;
}

}  // namespace bousq
