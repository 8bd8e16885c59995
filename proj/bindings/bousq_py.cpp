#include "bousq/catalog.hpp"
#include "bousq/elliptic.hpp"
#include "bousq/simulate.hpp"
#include "bousq/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>

namespace py = pybind11;

namespace {

double eval_solution(const std::string& id, double x, double t,
                     const std::map<std::string, double>& params) {
    bousq::Field u;
    const auto named = bousq::named_solution_ids();
    if (std::find(named.begin(), named.end(), id) != named.end()) {
        u = bousq::named_solution(id, params).u;
    } else if (id == "gg_u1" || id == "gg_u2" || id == "gg_u3") {
        auto get = [&](const char* key, double fallback) {
            auto it = params.find(key);
            return it == params.end() ? fallback : it->second;
        };
        bousq::GGSolutionSpec spec{id[4] - '0',
                                   {get("lambda", 1.0), get("mu", 1.0)},
                                   get("c", 1.0),
                                   get("c1", 1.0),
                                   get("c2", 0.0)};
        u = bousq::gg_solution(spec);
    } else {
        throw py::value_error("unknown solution id: " + id);
    }
    try {
        auto [xj, tj] = bousq::jet_seed(x, t, 0, 0);
        return u(xj, tj).value();
    } catch (const bousq::JetDomainError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

py::dict simulate(const std::string& ic, int N, double L, double dt, double t_end, double k,
                  double k_cut, int sign, bool dealias, bool nonlinear, double amp, int mode_j,
                  double noise_amp, unsigned long long seed, double blowup_factor) {
    bousq::Grid1D grid{N, L};
    bousq::Spectral sp(grid);
    bousq::SimConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.dealias = dealias;
    cfg.nonlinear = nonlinear;
    cfg.fourth_order_sign = sign >= 0 ? 1 : -1;
    cfg.blowup_factor = blowup_factor;
    cfg.k_cut = k_cut >= 0.0
                    ? k_cut
                    : (cfg.fourth_order_sign > 0 ? 1.0 : std::numeric_limits<double>::infinity());

    const auto xs = sp.nodes();
    std::vector<double> u0(N, 0.0), ut0(N, 0.0);
    if (ic == "soliton") {
        const double v = std::sqrt(1.0 + 4.0 * k * k);
        for (int n = 0; n < N; ++n) {
            const double s = 1.0 / std::cosh(k * (xs[n] - 0.25 * L));
            u0[n] = 2.0 * k * k * s * s;
        }
        ut0 = bousq::traveling_ut0(sp, u0, v);
    } else if (ic == "cosine") {
        for (int n = 0; n < N; ++n) u0[n] = amp * std::cos(2.0 * M_PI * mode_j * xs[n] / L);
    } else if (ic == "noise") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(-noise_amp, noise_amp);
        for (int n = 0; n < N; ++n) u0[n] = dist(rng);
    } else if (ic != "zero") {
        throw py::value_error("ic must be soliton|cosine|noise|zero");
    }

    const bousq::RunResult res = bousq::run_simulation(sp, u0, ut0, cfg);

    double mass_dd = 0.0;
    const auto& d = res.diagnostics;
    for (std::size_t i = 2; i < d.size(); ++i)
        mass_dd = std::max(mass_dd, std::abs(d[i].mass - 2.0 * d[i - 1].mass + d[i - 2].mass));

    py::dict out;
    out["status"] = bousq::to_string(res.status);
    out["final_t"] = res.final_t;
    out["sup_final"] = d.empty() ? 0.0 : d.back().sup_norm;
    out["mass_second_diff_max"] = mass_dd;
    return out;
}

}  // namespace

PYBIND11_MODULE(_bousq, m) {
    m.doc() = "closed-form traveling-wave verification and pseudospectral simulation";

    m.def("complete_K", &bousq::complete_K, py::arg("m"),
          "complete elliptic integral K(m), parameter convention");

    m.def(
        "jacobi",
        [](double z, double m) {
            const auto t = bousq::jacobi_eval(z, m);
            return py::make_tuple(t.sn, t.cn, t.dn);
        },
        py::arg("z"), py::arg("m"), "Jacobi (sn, cn, dn) at real z");

    m.def("eval_solution", &eval_solution, py::arg("id"), py::arg("x"), py::arg("t"),
          py::arg("params") = std::map<std::string, double>{},
          "evaluate a catalogued solution; NaN where undefined");

    m.def(
        "verify_registry_json",
        [](bool double_grid) {
            bousq::GridSpec grid;
            if (double_grid) grid = grid.refined(2);
            return bousq::report_json(bousq::run_registry(grid));
        },
        py::arg("double_grid") = false, "run the claim registry, return the JSON report");

    m.def(
        "derived_claims_pass",
        [](bool double_grid) {
            bousq::GridSpec grid;
            if (double_grid) grid = grid.refined(2);
            return bousq::all_derived_pass(bousq::run_registry(grid));
        },
        py::arg("double_grid") = false, "true iff every derived-truth claim passes");

    m.def("simulate", &simulate, py::arg("ic") = "soliton", py::arg("N") = 256,
          py::arg("L") = 200.0, py::arg("dt") = 0.05, py::arg("t_end") = 5.0,
          py::arg("k") = 0.25, py::arg("k_cut") = -1.0, py::arg("sign") = 1,
          py::arg("dealias") = true, py::arg("nonlinear") = true, py::arg("amp") = 0.01,
          py::arg("mode_j") = 1, py::arg("noise_amp") = 1e-8, py::arg("seed") = 12345,
          py::arg("blowup_factor") = 1e3, "short pseudospectral run; returns a summary dict");
}
