#include "bousq/simulate.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace bousq {

std::string to_string(RunStatus s) { return s == RunStatus::Completed ? "COMPLETED" : "BLOWUP"; }

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Spectral::Spectral(const Grid1D& grid) : grid_(grid) {
    if (!power_of_two(grid.N) || grid.N < 16)
        throw std::invalid_argument("simulate: N must be a power of two >= 16");
    if (!(grid.L > 0.0)) throw std::invalid_argument("simulate: L must be positive");
    real_buf_ = fftw_alloc_real(grid.N);
    cplx_buf_ = fftw_alloc_complex(grid.N / 2 + 1);
    plan_fwd_ = fftw_plan_dft_r2c_1d(grid.N, real_buf_,
                                     static_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_c2r_1d(grid.N, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                     FFTW_ESTIMATE);
}

Spectral::~Spectral() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(real_buf_);
    fftw_free(cplx_buf_);
}

double Spectral::wavenumber(int j) const { return 2.0 * M_PI * j / grid_.L; }

std::vector<double> Spectral::nodes() const {
    std::vector<double> x(grid_.N);
    for (int n = 0; n < grid_.N; ++n) x[n] = grid_.L * n / grid_.N;
    return x;
}

std::vector<std::complex<double>> Spectral::forward(const std::vector<double>& u) {
    if (static_cast<int>(u.size()) != grid_.N)
        throw std::invalid_argument("simulate: field size does not match the grid");
    std::memcpy(real_buf_, u.data(), grid_.N * sizeof(double));
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::vector<std::complex<double>> out(modes());
    const auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (int j = 0; j < modes(); ++j)
        out[j] = std::complex<double>(c[j][0], c[j][1]) / static_cast<double>(grid_.N);
    return out;
}

std::vector<double> Spectral::inverse(const std::vector<std::complex<double>>& u_hat) {
    if (static_cast<int>(u_hat.size()) != modes())
        throw std::invalid_argument("simulate: spectrum size does not match the grid");
    auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (int j = 0; j < modes(); ++j) {
        c[j][0] = u_hat[j].real();
        c[j][1] = u_hat[j].imag();
    }
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    return std::vector<double>(real_buf_, real_buf_ + grid_.N);
}

std::vector<std::complex<double>> Spectral::square_dealiased(
    const std::vector<std::complex<double>>& u_hat, bool dealias) {
    std::vector<std::complex<double>> tmp = u_hat;
    const int cut = grid_.N / 3;  // 2/3 rule: keep |j| <= N/3
    if (dealias)
        for (int j = cut + 1; j < modes(); ++j) tmp[j] = 0.0;
    std::vector<double> phys = inverse(tmp);
    for (double& v : phys) v *= v;
    std::vector<std::complex<double>> sq = forward(phys);
    if (dealias)
        for (int j = cut + 1; j < modes(); ++j) sq[j] = 0.0;
    return sq;
}

void Spectral::rhs(const std::vector<std::complex<double>>& u_hat,
                   const std::vector<std::complex<double>>& v_hat,
                   std::vector<std::complex<double>>& du_hat,
                   std::vector<std::complex<double>>& dv_hat, const SimConfig& cfg) {
    du_hat = v_hat;
    dv_hat.resize(modes());
    std::vector<std::complex<double>> sq;
    if (cfg.nonlinear) sq = square_dealiased(u_hat, cfg.dealias);
    const double s = cfg.fourth_order_sign >= 0 ? 1.0 : -1.0;
    for (int j = 0; j < modes(); ++j) {
        const double k = wavenumber(j);
        const double k2 = k * k;
        dv_hat[j] = (-k2 + s * k2 * k2) * u_hat[j];
        if (cfg.nonlinear) dv_hat[j] += -3.0 * k2 * sq[j];
    }
}

std::vector<double> traveling_ut0(Spectral& sp, const std::vector<double>& u0, double v) {
    auto u_hat = sp.forward(u0);
    for (int j = 0; j < sp.modes(); ++j) {
        const double k = sp.wavenumber(j);
        u_hat[j] *= std::complex<double>(0.0, -v * k);  // -v * d/dx
    }
    // The Nyquist derivative has no real representative; drop it.
    if (sp.grid().N % 2 == 0) u_hat[sp.modes() - 1] = 0.0;
    return sp.inverse(u_hat);
}

namespace {

void apply_cut(std::vector<std::complex<double>>& a, const Spectral& sp, double k_cut) {
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        if (sp.wavenumber(j) > k_cut) a[j] = 0.0;
}

double sup_abs(const std::vector<double>& u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

RunResult run_simulation(Spectral& sp, const std::vector<double>& u0,
                         const std::vector<double>& ut0, const SimConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("simulate: t_end must be >= 0");
    if (cfg.stride < 1) throw std::invalid_argument("simulate: stride must be >= 1");
    const double k_nyq = sp.wavenumber(sp.modes() - 1);
    if (cfg.k_cut < 0.0 || (std::isfinite(cfg.k_cut) && cfg.k_cut > k_nyq + 1e-12))
        throw std::invalid_argument("simulate: k_cut must lie in [0, pi N / L]");

    auto u_hat = sp.forward(u0);
    auto v_hat = sp.forward(ut0);
    apply_cut(u_hat, sp, cfg.k_cut);
    apply_cut(v_hat, sp, cfg.k_cut);

    const double sup0 = sup_abs(sp.inverse(u_hat));
    const double threshold = cfg.blowup_factor * sup0;

    RunResult res;
    const int n_modes = sp.modes();
    std::vector<std::complex<double>> ku1(n_modes), kv1(n_modes), ku2(n_modes), kv2(n_modes),
        ku3(n_modes), kv3(n_modes), ku4(n_modes), kv4(n_modes), tu(n_modes), tv(n_modes);

    const long n_steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-12));
    const double half_cut = cfg.k_cut * 0.5;

    auto record = [&](double t) {
        std::vector<double> u = sp.inverse(u_hat);
        res.frames.push_back({t, u});
        double tail = 0.0;
        for (int j = 0; j < n_modes; ++j) {
            if (sp.wavenumber(j) > half_cut) {
                const double w = (j == 0 || j == n_modes - 1) ? 1.0 : 2.0;
                tail += w * std::norm(u_hat[j]);
            }
        }
        res.diagnostics.push_back({t, sp.grid().L * u_hat[0].real(), sup_abs(u), tail});
    };

    record(0.0);
    double t = 0.0;
    for (long step = 0; step < n_steps; ++step) {
        const double dt = cfg.dt;
        sp.rhs(u_hat, v_hat, ku1, kv1, cfg);
        for (int j = 0; j < n_modes; ++j) {
            tu[j] = u_hat[j] + 0.5 * dt * ku1[j];
            tv[j] = v_hat[j] + 0.5 * dt * kv1[j];
        }
        sp.rhs(tu, tv, ku2, kv2, cfg);
        for (int j = 0; j < n_modes; ++j) {
            tu[j] = u_hat[j] + 0.5 * dt * ku2[j];
            tv[j] = v_hat[j] + 0.5 * dt * kv2[j];
        }
        sp.rhs(tu, tv, ku3, kv3, cfg);
        for (int j = 0; j < n_modes; ++j) {
            tu[j] = u_hat[j] + dt * ku3[j];
            tv[j] = v_hat[j] + dt * kv3[j];
        }
        sp.rhs(tu, tv, ku4, kv4, cfg);
        for (int j = 0; j < n_modes; ++j) {
            u_hat[j] += dt / 6.0 * (ku1[j] + 2.0 * ku2[j] + 2.0 * ku3[j] + ku4[j]);
            v_hat[j] += dt / 6.0 * (kv1[j] + 2.0 * kv2[j] + 2.0 * kv3[j] + kv4[j]);
        }
        apply_cut(u_hat, sp, cfg.k_cut);
        apply_cut(v_hat, sp, cfg.k_cut);
        t = (step + 1) * cfg.dt;

        const double sup = sup_abs(sp.inverse(u_hat));
        const bool last = step + 1 == n_steps;
        if ((step + 1) % cfg.stride == 0 || last) record(t);
        if (threshold > 0.0 && !(sup <= threshold)) {  // also catches NaN
            res.status = RunStatus::Blowup;
            if ((step + 1) % cfg.stride != 0 && !last) record(t);
            break;
        }
    }
    res.final_t = t;
    res.u_hat = u_hat;
    return res;
}

double linear_omega(double k, int sign) {
    const double s = sign >= 0 ? 1.0 : -1.0;
    const double w2 = k * k - s * k * k * k * k;
    if (w2 < 0.0) return 0.0;
    return std::sqrt(w2);
}

double linear_growth_rate(double k, int sign) {
    const double s = sign >= 0 ? 1.0 : -1.0;
    const double g2 = s * k * k * k * k - k * k;
    if (g2 < 0.0) return 0.0;
    return std::sqrt(g2);
}

}  // namespace bousq
