#pragma once

#include "bousq/elliptic.hpp"
#include "bousq/equations.hpp"
#include "bousq/jet.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bousq {

enum class JacobiKind { Sn, Cn, Dn };

std::string to_string(JacobiKind k);
JacobiKind jacobi_kind_from_id(const std::string& id);

// First-integral parameters of the base function H: (H')^2 = r + p H^2 + q H^4.
struct JacobiOdeParams {
    double r, p, q;
};

JacobiOdeParams jacobi_ode_params(JacobiKind kind, double m);

// Power ansatz h(z) = alpha * H(z|m)^beta.
struct Ansatz {
    JacobiKind kind = JacobiKind::Sn;
    double m = 0.0;
    double alpha = 1.0;  // amplitude; > 0 required when 2/beta is non-integer
    double beta = 2.0;   // power; nonzero
};

// Coefficients of F(h) = sum_i base[i] * h^exponents[i] with exponents
// {1+4/b, 1+2/b, 1-4/b, 1-2/b, 1} (b = beta), chosen so that along the ansatz
//     h'''' + b h'' + F(h) = 0
// identically in z, where b is the reduced equation's second-order
// coefficient.  Derived from the quartic first integral of H, not tabulated.
struct CoefficientSet {
    std::array<double, 5> base{};
    std::array<double, 5> exponents{};
    double b = 0.0;
    Ansatz ansatz;

    NonlinearitySpec F() const;
};

CoefficientSet direct_coefficients(const Ansatz& ansatz, double b);

// The nonlinearity f(h) that makes h = alpha H^beta an exact traveling-wave
// profile of the generalized equation in the given frame.  The first four
// coefficients are -mu^2 lambda^2 * base[i]; the coefficient of h carries an
// extra additive piece for which two conventions circulate:
//   paper:    -mu^2 lambda^2 c5 + mu^2 (lambda^2 - mu^2)
//   inverted: -mu^2 lambda^2 c5 + (lambda^2 - mu^2)/mu^2
// They coincide whenever mu^2 = 1 or lambda^2 = mu^2.
enum class Alpha5Variant { Paper, Inverted };

std::string to_string(Alpha5Variant v);

NonlinearitySpec direct_f(const Ansatz& ansatz, const WaveFrame& frame, double c,
                          Alpha5Variant variant);

// h(z) and u(x,t) = h(mu x - lambda t) along the ansatz.
Profile direct_profile(const Ansatz& ansatz);
Field direct_solution(const Ansatz& ansatz, const WaveFrame& frame);

// ---------------------------------------------------------------------------
// Named closed-form solutions (transcribed claim bindings).

struct NamedSolution {
    std::string id;
    std::string description;
    std::string paper_ref;  // citation tag carried as data into reports
    WaveFrame frame;
    PdeForm form;           // the equation the source claims it solves
    Field u;
    Profile h;                                       // profile in z, where defined
    std::function<bool(double, double)> exclude;     // (x,t) points to skip, may be null
    std::map<std::string, double> params;
};

// id in {compacton_sin2, kink, antikink, compacton_cos2, soliton_sech2,
// assigned_soliton}; params may override {"c": ...} and, for assigned_soliton,
// {"k": ...}.
NamedSolution named_solution(const std::string& id,
                             const std::map<std::string, double>& params = {});

std::vector<std::string> named_solution_ids();

// ---------------------------------------------------------------------------
// G'/G expansion machinery for the generalized equation with f(u) = u^2.

struct GGDetermination {
    std::array<double, 5> a{};  // a0..a4
    double alphaG = 0.0;
    double betaG = 0.0;
    double B = 0.0;             // integration constant of the reduced functional
};

// Degree-4 balanced expansion h = sum a_i phi^i with phi = G'/G and
// G'' + alphaG G' + betaG G = 0; alphaG is free, everything else determined.
GGDetermination gg_determine(double alphaG, const WaveFrame& frame, double c);

enum class GGBranch { Hyperbolic, Trigonometric, Rational };

std::string to_string(GGBranch b);
GGBranch gg_branch(double alphaG, double betaG);

struct GGProfileParams {
    std::array<double, 5> a{};
    double alphaG = 0.0;
    double betaG = 0.0;
    double c1 = 1.0;
    double c2 = 0.0;
};

// phi = G'/G for the classified branch.
Profile gg_phi(const GGProfileParams& p);

// h(z) two ways: the power sum  sum a_i phi^i, and the branch closed form
// grouped in kernel powers.  They agree to roundoff; both are kept public so
// the agreement stays testable.
Profile gg_h_sum(const GGProfileParams& p);
Profile gg_h_closed(const GGProfileParams& p);

// ---------------------------------------------------------------------------
// The three printed traveling-wave solutions built from the expansion
// (transcribed claim bindings, not re-derived).

struct GGSolutionSpec {
    int index = 1;  // 1 = hyperbolic, 2 = trigonometric, 3 = rational
    WaveFrame frame;
    double c = 1.0;
    double c1 = 1.0;
    double c2 = 0.0;
};

// Degenerate discriminants route 1/2 to the rational form 3; a branch
// condition of the wrong sign throws std::domain_error.
Profile gg_solution_profile(const GGSolutionSpec& spec);
Field gg_solution(const GGSolutionSpec& spec);

// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::string kind;  // "named" | "gg" | "family"
    std::string paper_ref;
    std::string description;
};

std::vector<CatalogEntry> catalog_entries();

}  // namespace bousq
