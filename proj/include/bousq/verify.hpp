#pragma once

#include "bousq/catalog.hpp"
#include "bousq/equations.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bousq {

inline constexpr const char* kToolVersion = "bousq 1.0.0";

// Evaluation grids: a rectangle for PDE-bound claims, an interval for
// ODE-bound ones.  Claims may override the interval.
struct GridSpec {
    double x0 = -10.0, x1 = 10.0;
    int nx = 41;
    double t0 = 0.0, t1 = 5.0;
    int nt = 41;
    double z0 = -10.0, z1 = 10.0;
    int nz = 201;

    GridSpec refined(int factor) const;
};

// One verifiable statement: a field or profile, the equation it is claimed to
// satisfy, and evaluation bounds.  `derived` claims carry truths this library
// constructed and must PASS; transcribed claims are allowed to FAIL, which is
// a recorded finding rather than an error.
struct Claim {
    std::string id;
    std::string paper_ref;
    std::string variant;   // optional discriminator, e.g. the alpha5 rule used
    bool derived = false;
    double tolerance = 1e-6;

    enum class Binding { Pde, Ode, Surface } binding = Binding::Pde;

    PdeForm form;          // Pde and Ode
    WaveFrame frame;       // Ode and Surface
    double A = 0.0, B = 0.0;

    Field u;               // Pde and Surface
    Profile h;             // Ode

    std::function<bool(double, double)> exclude_pde;  // optional skips
    std::function<bool(double)> exclude_ode;
    bool has_interval = false;
    double iz0 = 0.0, iz1 = 0.0;
};

struct ClaimResult {
    std::string id;
    std::string paper_ref;
    std::string variant;
    std::string status;      // "PASS" | "FAIL" | "DOMAIN_ERROR"
    bool derived = false;
    double sup_residual = 0.0;  // sup |residual| / max term magnitude
    double l2_residual = 0.0;   // rms counterpart
    TermBreakdown breakdown;    // per-term sup magnitudes (unnormalized)
};

struct VerificationReport {
    GridSpec grid;
    std::vector<ClaimResult> claims;  // sorted by id
};

ClaimResult run_claim(const Claim& claim, const GridSpec& grid);

// The built-in registry: derived truths, both fifth-coefficient variants of a
// representative direct-method family, and the transcribed solution claims.
std::vector<Claim> builtin_claims();

VerificationReport run_registry(const GridSpec& grid = {});

bool all_derived_pass(const VerificationReport& report);

// Deterministic payloads: identical inputs give byte-identical strings.
// Timestamps never appear here (the CLI writes them to a separate meta file).
std::string report_json(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

}  // namespace bousq
