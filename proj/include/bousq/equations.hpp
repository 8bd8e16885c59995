#pragma once

#include "bousq/jet.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bousq {

// Nonlinearity f(u) = sum_i coeff_i * u^exponent_i.  Exponent 0 is the
// constant term (u^0 == 1 even at u = 0); fractional exponents restrict the
// evaluable domain to u > 0 and surface as JetDomainError at evaluation.
struct NonlinearitySpec {
    std::vector<std::pair<double, double>> terms;  // (coefficient, exponent)

    Jet operator()(const Jet& u) const;
    double operator()(double u) const;
    bool empty() const { return terms.empty(); }
    std::string describe() const;
};

enum class PdeKind { Assigned, Classical, Corrected, Generalized };

std::string to_string(PdeKind k);

// The four model equations, all written as residual(u) = 0:
//   Assigned:     u_tt - u_xx - u_xxxx - 3(u^2)_xx
//   Classical:    u_tt - c u_xx - u_xxxx - (u^2)_xx
//   Corrected:    u_tt -   u_xx - u_xxxx - (u^2)_xx
//   Generalized:  u_tt - u_xxtt + u_xxxxtt + c u_xxxx - u_xx - (f(u))_xx
struct PdeForm {
    PdeKind kind = PdeKind::Assigned;
    double c = 1.0;
    NonlinearitySpec f;

    static PdeForm assigned();
    static PdeForm classical(double c);
    static PdeForm corrected();
    static PdeForm generalized(double c, NonlinearitySpec f);
};

// id in {"assigned", "classical", "corrected", "generalized"}.
PdeForm pde_from_id(const std::string& id, double c = 1.0, NonlinearitySpec f = {});

// Traveling frame z = mu x - lambda t.
struct WaveFrame {
    double lambda = 1.0;
    double mu = 1.0;
};

// Twice-integrated traveling-wave functional, E[h](z) = 0 along solutions:
//   Generalized: l^2 m^4 h'''' + m^2 (m^2 c - l^2) h'' + (l^2 - m^2) h
//                - m^2 f(h) + A z + B          (l = lambda, m = mu)
//   Assigned:    (l^2 - m^2) h - m^4 h'' - 3 m^2 h^2 + A z + B
// The Classical/Corrected forms are not reduced here.
struct ReducedOde {
    PdeForm form;
    WaveFrame frame;
    double A = 0.0;
    double B = 0.0;
    double b = 0.0;  // (mu^2 c - lambda^2)/(mu^2 lambda^2), Generalized only
};

ReducedOde reduce(const PdeForm& form, const WaveFrame& frame, double A = 0.0,
                  double B = 0.0);

using TermBreakdown = std::vector<std::pair<std::string, double>>;

// Residual of the PDE at one point, split into the additive terms above.
TermBreakdown pde_residual_terms(const PdeForm& form, const Field& u, double x, double t);
double pde_residual(const PdeForm& form, const Field& u, double x, double t);

// Residual of the reduced functional at one point of the profile.
TermBreakdown ode_residual_terms(const ReducedOde& ode, const Profile& h, double z);
double ode_residual(const ReducedOde& ode, const Profile& h, double z);

// The full functional as a jet of z (order 2 in the declared sense), so its
// second z-derivative can be compared against the PDE residual.
Jet ode_functional_jet(const ReducedOde& ode, const Profile& h, const Jet& z);

// lambda u_x + mu u_t: zero on any wave of the frame's speed.
double invariant_surface_check(const Field& u, const WaveFrame& frame, double x, double t);

}  // namespace bousq
