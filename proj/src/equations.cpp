#include "bousq/equations.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bousq {

Jet NonlinearitySpec::operator()(const Jet& u) const {
    Jet r;
    for (const auto& [coeff, expo] : terms) r += coeff * pow(u, expo);
    // Preserve the argument's declared orders even for the empty sum.
    if (terms.empty()) r = 0.0 * u;
    return r;
}

double NonlinearitySpec::operator()(double u) const {
    double r = 0.0;
    for (const auto& [coeff, expo] : terms) {
        if (expo == 0.0) {
            r += coeff;
        } else {
            r += coeff * std::pow(u, expo);
        }
    }
    return r;
}

std::string NonlinearitySpec::describe() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, expo] : terms) {
        if (!first) os << " + ";
        os << coeff << "*h^" << expo;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string to_string(PdeKind k) {
    switch (k) {
        case PdeKind::Assigned: return "assigned";
        case PdeKind::Classical: return "classical";
        case PdeKind::Corrected: return "corrected";
        case PdeKind::Generalized: return "generalized";
    }
    return "?";
}

PdeForm PdeForm::assigned() { return {PdeKind::Assigned, 1.0, {}}; }

PdeForm PdeForm::classical(double c) { return {PdeKind::Classical, c, {}}; }

PdeForm PdeForm::corrected() { return {PdeKind::Corrected, 1.0, {}}; }

PdeForm PdeForm::generalized(double c, NonlinearitySpec f) {
    return {PdeKind::Generalized, c, std::move(f)};
}

PdeForm pde_from_id(const std::string& id, double c, NonlinearitySpec f) {
    if (id == "assigned") return PdeForm::assigned();
    if (id == "classical") return PdeForm::classical(c);
    if (id == "corrected") return PdeForm::corrected();
    if (id == "generalized") return PdeForm::generalized(c, std::move(f));
    throw std::invalid_argument("unknown equation id: " + id);
}

ReducedOde reduce(const PdeForm& form, const WaveFrame& frame, double A, double B) {
    if (form.kind == PdeKind::Classical || form.kind == PdeKind::Corrected)
        throw std::invalid_argument("reduce: only the assigned and generalized forms reduce here");
    if (frame.lambda == 0.0 || frame.mu == 0.0)
        throw std::invalid_argument("reduce: degenerate frame (lambda or mu is zero)");
    ReducedOde ode{form, frame, A, B, 0.0};
    if (form.kind == PdeKind::Generalized) {
        const double l2 = frame.lambda * frame.lambda;
        const double m2 = frame.mu * frame.mu;
        ode.b = (m2 * form.c - l2) / (m2 * l2);
    }
    return ode;
}

namespace {

Jet field_jet(const Field& u, double x, double t) {
    auto [xj, tj] = jet_seed(x, t, kJetNX, kJetNT);
    return u(xj, tj);
}

}  // namespace

TermBreakdown pde_residual_terms(const PdeForm& form, const Field& u, double x, double t) {
    const Jet U = field_jet(u, x, t);
    TermBreakdown terms;
    switch (form.kind) {
        case PdeKind::Assigned: {
            terms.emplace_back("u_tt", extract_partial(U, 0, 2));
            terms.emplace_back("-u_xx", -extract_partial(U, 2, 0));
            terms.emplace_back("-u_xxxx", -extract_partial(U, 4, 0));
            terms.emplace_back("-3(u^2)_xx", -3.0 * extract_partial(U * U, 2, 0));
            break;
        }
        case PdeKind::Classical:
        case PdeKind::Corrected: {
            const double c = form.kind == PdeKind::Corrected ? 1.0 : form.c;
            terms.emplace_back("u_tt", extract_partial(U, 0, 2));
            terms.emplace_back("-c*u_xx", -c * extract_partial(U, 2, 0));
            terms.emplace_back("-u_xxxx", -extract_partial(U, 4, 0));
            terms.emplace_back("-(u^2)_xx", -extract_partial(U * U, 2, 0));
            break;
        }
        case PdeKind::Generalized: {
            terms.emplace_back("u_tt", extract_partial(U, 0, 2));
            terms.emplace_back("-u_xxtt", -extract_partial(U, 2, 2));
            terms.emplace_back("u_xxxxtt", extract_partial(U, 4, 2));
            terms.emplace_back("c*u_xxxx", form.c * extract_partial(U, 4, 0));
            terms.emplace_back("-u_xx", -extract_partial(U, 2, 0));
            terms.emplace_back("-(f(u))_xx", -extract_partial(form.f(U), 2, 0));
            break;
        }
    }
    return terms;
}

double pde_residual(const PdeForm& form, const Field& u, double x, double t) {
    double r = 0.0;
    for (const auto& [name, v] : pde_residual_terms(form, u, x, t)) {
        (void)name;
        r += v;
    }
    return r;
}

TermBreakdown ode_residual_terms(const ReducedOde& ode, const Profile& h, double z) {
    const Jet zj = Jet::seed_x(z);
    const Jet H = h(zj);
    const double l2 = ode.frame.lambda * ode.frame.lambda;
    const double m2 = ode.frame.mu * ode.frame.mu;
    TermBreakdown terms;
    if (ode.form.kind == PdeKind::Generalized) {
        terms.emplace_back("l2*m4*h''''", l2 * m2 * m2 * extract_partial(H, 4, 0));
        terms.emplace_back("m2*(m2c-l2)*h''", m2 * (m2 * ode.form.c - l2) * extract_partial(H, 2, 0));
        terms.emplace_back("(l2-m2)*h", (l2 - m2) * H.value());
        terms.emplace_back("-m2*f(h)", -m2 * ode.form.f(H).value());
    } else {
        terms.emplace_back("(l2-m2)*h", (l2 - m2) * H.value());
        terms.emplace_back("-m4*h''", -m2 * m2 * extract_partial(H, 2, 0));
        terms.emplace_back("-3*m2*h^2", -3.0 * m2 * H.value() * H.value());
    }
    terms.emplace_back("A*z+B", ode.A * z + ode.B);
    return terms;
}

double ode_residual(const ReducedOde& ode, const Profile& h, double z) {
    double r = 0.0;
    for (const auto& [name, v] : ode_residual_terms(ode, h, z)) {
        (void)name;
        r += v;
    }
    return r;
}

Jet ode_functional_jet(const ReducedOde& ode, const Profile& h, const Jet& z) {
    const Jet H = h(z);
    const double l2 = ode.frame.lambda * ode.frame.lambda;
    const double m2 = ode.frame.mu * ode.frame.mu;
    const Jet h2 = H.dx().dx();
    Jet r;
    if (ode.form.kind == PdeKind::Generalized) {
        const Jet h4 = h2.dx().dx();
        r = l2 * m2 * m2 * h4 + m2 * (m2 * ode.form.c - l2) * h2 + (l2 - m2) * H -
            m2 * ode.form.f(H);
    } else {
        r = (l2 - m2) * H - m2 * m2 * h2 - 3.0 * m2 * (H * H);
    }
    return r + ode.A * z + Jet(ode.B);
}

double invariant_surface_check(const Field& u, const WaveFrame& frame, double x, double t) {
    const Jet U = field_jet(u, x, t);
    return frame.lambda * extract_partial(U, 1, 0) + frame.mu * extract_partial(U, 0, 1);
}

}  // namespace bousq
