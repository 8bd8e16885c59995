#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace bousq {

// Periodic pseudospectral discretization of
//     u_tt = u_xx + s u_xxxx + 3 (u^2)_xx,   s = +1 or -1,
// first-order in time as (u, v = u_t) on Fourier modes.  s = +1 (the assigned
// equation) is linearly ill-posed: modes with |k| > 1 grow like
// exp(t sqrt(k^4 - k^2)), which is a feature under study, not a bug; kCut
// caps the growing band and the blowup detector ends runs that escape.
struct Grid1D {
    int N = 256;       // power of two, >= 16
    double L = 2.0 * 3.14159265358979323846;
};

struct SimConfig {
    double dt = 1e-2;
    double t_end = 1.0;
    double k_cut = std::numeric_limits<double>::infinity();  // keep |k| <= k_cut
    bool dealias = true;          // 2/3-rule on the quadratic term
    int fourth_order_sign = +1;   // s
    bool nonlinear = true;
    double blowup_factor = 1e3;   // threshold = factor * sup|u0|
    int stride = 1;               // steps between recorded frames
};

enum class RunStatus { Completed, Blowup };

std::string to_string(RunStatus s);

struct FrameRecord {
    double t;
    std::vector<double> u;
};

struct DiagnosticsRecord {
    double t, mass, sup_norm, tail_energy;
};

struct RunResult {
    RunStatus status = RunStatus::Completed;
    double final_t = 0.0;
    std::vector<FrameRecord> frames;
    std::vector<DiagnosticsRecord> diagnostics;
    std::vector<std::complex<double>> u_hat;  // final normalized spectrum
};

// Spectral workspace bound to one grid; owns the FFTW plans (deterministic
// FFTW_ESTIMATE planning, single-threaded).
class Spectral {
public:
    explicit Spectral(const Grid1D& grid);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;

    const Grid1D& grid() const { return grid_; }
    int modes() const { return grid_.N / 2 + 1; }
    double wavenumber(int j) const;       // k_j = 2 pi j / L, j = 0..N/2
    std::vector<double> nodes() const;    // x_n = n L / N

    // Normalized DFT: u_hat[0] is the mean of u.
    std::vector<std::complex<double>> forward(const std::vector<double>& u);
    std::vector<double> inverse(const std::vector<std::complex<double>>& u_hat);

    // Right-hand side of the first-order system.
    void rhs(const std::vector<std::complex<double>>& u_hat,
             const std::vector<std::complex<double>>& v_hat,
             std::vector<std::complex<double>>& du_hat,
             std::vector<std::complex<double>>& dv_hat, const SimConfig& cfg);

private:
    Grid1D grid_;
    void* plan_fwd_ = nullptr;
    void* plan_bwd_ = nullptr;
    double* real_buf_ = nullptr;
    void* cplx_buf_ = nullptr;

    std::vector<std::complex<double>> square_dealiased(
        const std::vector<std::complex<double>>& u_hat, bool dealias);
};

// Traveling initial velocity u_t = -v u_x, computed spectrally.
std::vector<double> traveling_ut0(Spectral& sp, const std::vector<double>& u0, double v);

RunResult run_simulation(Spectral& sp, const std::vector<double>& u0,
                         const std::vector<double>& ut0, const SimConfig& cfg);

// Linear dispersion (|k| < 1, s = +1): omega = k sqrt(1 - k^2); growth rate
// for |k| > 1: sigma = sqrt(k^4 - k^2).
double linear_omega(double k, int sign);
double linear_growth_rate(double k, int sign);

}  // namespace bousq
