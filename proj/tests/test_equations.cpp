#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bousq/equations.hpp"
#include "bousq/jet.hpp"
#include "bousq/stencil.hpp"

using bousq::Jet;
using bousq::PdeForm;
using bousq::WaveFrame;

namespace {

double max_term(const bousq::TermBreakdown& terms) {
  double m = 0.0;
  for (const auto& [name, v] : terms) m = std::max(m, std::abs(v));
  return m;
}

bousq::Field soliton_field(double k) {
  double v = std::sqrt(1.0 + 4.0 * k * k);
  return [k, v](const Jet& x, const Jet& t) {
    Jet s = sech(k * (x - v * t));
    return (2.0 * k * k) * s * s;
  };
}

}  // namespace

TEST_CASE("zero and constant fields annihilate every form") {
  bousq::Field zero = [](const Jet& x, const Jet& t) { return 0.0 * (x + t); };
  bousq::Field cnst = [](const Jet& x, const Jet& t) { return 0.7 + 0.0 * (x + t); };
  bousq::NonlinearitySpec sq{{{1.0, 2.0}}};

  for (const PdeForm& form :
       {PdeForm::assigned(), PdeForm::classical(1.7), PdeForm::corrected(),
        PdeForm::generalized(0.9, sq)}) {
    CHECK(bousq::pde_residual(form, zero, 0.3, 1.2) == 0.0);
    CHECK(bousq::pde_residual(form, cnst, -2.0, 0.4) == 0.0);
  }
}

TEST_CASE("coefficient-matched sech^2 pulse solves the assigned equation") {
  // substitute a*sech^2(k(x-vt)) and match powers of sech^2 independently:
  // the quartic balance forces a = 2k^2, the quadratic one v^2 = 1+4k^2.
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> xd(-6.0, 6.0), td(0.0, 4.0);
  for (double k : {0.2, 0.25, 0.4}) {
    auto u = soliton_field(k);
    PdeForm form = PdeForm::assigned();
    for (int rep = 0; rep < 100; ++rep) {
      double x = xd(rng), t = td(rng);
      auto terms = bousq::pde_residual_terms(form, u, x, t);
      double resid = 0.0;
      for (const auto& [name, val] : terms) resid += val;
      double scale = max_term(terms);
      if (scale == 0.0) scale = 1.0;
      CHECK(std::abs(resid) < 1e-9 * scale);
    }
  }
}

TEST_CASE("a detuned pulse does not solve the assigned equation") {
  double k = 0.25;
  double v = std::sqrt(1.0 + 4.0 * k * k) * 1.05;  // 5% off the dispersion relation
  bousq::Field u = [k, v](const Jet& x, const Jet& t) {
    Jet s = sech(k * (x - v * t));
    return (2.0 * k * k) * s * s;
  };
  auto terms = bousq::pde_residual_terms(PdeForm::assigned(), u, 0.7, 0.9);
  double resid = 0.0;
  for (const auto& [name, val] : terms) resid += val;
  CHECK(std::abs(resid) > 1e-4 * max_term(terms));
}

TEST_CASE("residual terms agree with finite differences") {
  bousq::Field u = [](const Jet& x, const Jet& t) {
    Jet s = sech(0.5 * x - 0.3 * t);
    return s * s + 0.1 * sin(0.4 * x + 0.2 * t);
  };
  auto scalar = [](double x, double t) {
    double s = 1.0 / std::cosh(0.5 * x - 0.3 * t);
    return s * s + 0.1 * std::sin(0.4 * x + 0.2 * t);
  };
  auto scalar2 = [&scalar](double x, double t) {
    double w = scalar(x, t);
    return w * w;
  };
  double x0 = 0.6, t0 = 1.1;

  double fd_resid = bousq::fd_partial(scalar, x0, t0, 0, 2)
                  - bousq::fd_partial(scalar, x0, t0, 2, 0)
                  - bousq::fd_partial(scalar, x0, t0, 4, 0)
                  - 3.0 * bousq::fd_partial(scalar2, x0, t0, 2, 0);
  double jet_resid = bousq::pde_residual(PdeForm::assigned(), u, x0, t0);
  CHECK(jet_resid == doctest::Approx(fd_resid).epsilon(1e-5).scale(1.0));
}

TEST_CASE("generalized residual is affine-linear when f is affine") {
  bousq::NonlinearitySpec affine{{{0.7, 1.0}, {-0.3, 0.0}}};
  PdeForm form = PdeForm::generalized(1.3, affine);
  bousq::Field u1 = [](const Jet& x, const Jet& t) { return sin(0.5 * x) * cos(0.3 * t); };
  bousq::Field u2 = [](const Jet& x, const Jet& t) { Jet s = sech(0.4 * x - 0.2 * t); return s * s; };
  bousq::Field sum = [&](const Jet& x, const Jet& t) { return u1(x, t) + u2(x, t); };
  bousq::Field zero = [](const Jet& x, const Jet& t) { return 0.0 * (x + t); };

  double x0 = 0.9, t0 = 0.33;
  double r = bousq::pde_residual(form, sum, x0, t0) + bousq::pde_residual(form, zero, x0, t0)
           - bousq::pde_residual(form, u1, x0, t0) - bousq::pde_residual(form, u2, x0, t0);
  CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("reduction to the wave frame reproduces the pde residual") {
  // For u(x,t) = h(mu x - lambda t) the residual of the generalized equation
  // equals d^2/dz^2 of the reduced functional; compare both pipelines.
  std::mt19937 rng(987);
  std::uniform_real_distribution<double> par(0.3, 2.0);
  std::uniform_real_distribution<double> cpar(0.2, 3.0);
  std::uniform_real_distribution<double> xd(-2.0, 2.0);

  for (int rep = 0; rep < 50; ++rep) {
    double lambda = par(rng), mu = par(rng), c = cpar(rng);
    double A = 0.5 + par(rng), w = 1.0 + 2.0 * par(rng);
    WaveFrame frame{lambda, mu};
    bousq::NonlinearitySpec sq{{{1.0, 2.0}}};
    PdeForm form = PdeForm::generalized(c, sq);
    bousq::Profile h = [A, w](const Jet& z) { return A * exp(-(z * z) / w); };
    bousq::Field u = [&frame, &h](const Jet& x, const Jet& t) {
      return h(frame.mu * x - frame.lambda * t);
    };

    double x0 = xd(rng), t0 = xd(rng);
    double z0 = mu * x0 - lambda * t0;
    auto ode = bousq::reduce(form, frame);

    double pde = bousq::pde_residual(form, u, x0, t0);
    Jet functional = bousq::ode_functional_jet(ode, h, Jet::seed_x(z0));
    double ode_d2 = bousq::extract_partial(functional, 2, 0);

    double scale = std::max(1.0, max_term(bousq::pde_residual_terms(form, u, x0, t0)));
    CHECK(pde == doctest::Approx(ode_d2).epsilon(1e-9).scale(scale));
  }
}

TEST_CASE("assigned reduction matches its pde residual the same way") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> par(0.4, 1.6);
  for (int rep = 0; rep < 20; ++rep) {
    double lambda = par(rng), mu = par(rng);
    WaveFrame frame{lambda, mu};
    PdeForm form = PdeForm::assigned();
    bousq::Profile h = [](const Jet& z) { Jet s = sech(z); return 0.8 * s * s; };
    bousq::Field u = [&frame, &h](const Jet& x, const Jet& t) {
      return h(frame.mu * x - frame.lambda * t);
    };
    double x0 = 0.7, t0 = 0.2;
    double z0 = mu * x0 - lambda * t0;
    auto ode = bousq::reduce(form, frame);
    double pde = bousq::pde_residual(form, u, x0, t0);
    Jet functional = bousq::ode_functional_jet(ode, h, Jet::seed_x(z0));
    CHECK(pde == doctest::Approx(bousq::extract_partial(functional, 2, 0))
                     .epsilon(1e-9)
                     .scale(1.0));
  }
}

TEST_CASE("ode residual responds linearly to small perturbations") {
  PdeForm form = PdeForm::assigned();
  WaveFrame frame{std::sqrt(1.25) * 0.25, 0.25};  // matched soliton frame, k = 1/4
  auto ode = bousq::reduce(form, frame);
  double k = 0.25;
  auto h_eps = [k](double eps) {
    return bousq::Profile([k, eps](const Jet& z) {
      Jet s = sech(z);
      return (2.0 * k * k) * s * s + eps * sin(z);
    });
  };
  double z0 = 0.7;
  auto base_terms = bousq::ode_residual_terms(ode, h_eps(0.0), z0);
  double r1 = std::abs(bousq::ode_residual(ode, h_eps(1e-3), z0));
  double r2 = std::abs(bousq::ode_residual(ode, h_eps(1e-4), z0));
  CHECK(max_term(base_terms) > 0.0);
  CHECK(r1 / r2 == doctest::Approx(10.0).epsilon(0.5));
}

TEST_CASE("reduced coefficient b and term labels") {
  bousq::NonlinearitySpec sq{{{1.0, 2.0}}};
  auto ode = bousq::reduce(PdeForm::generalized(2.0, sq), WaveFrame{1.0, 2.0});
  CHECK(ode.b == doctest::Approx((4.0 * 2.0 - 1.0) / (4.0 * 1.0)).epsilon(1e-15));

  bousq::Profile h = [](const Jet& z) { Jet s = sech(z); return s * s; };
  auto terms = bousq::ode_residual_terms(ode, h, 0.4);
  REQUIRE(terms.size() == 5);
  CHECK(terms[0].first == "l2*m4*h''''");
  CHECK(terms[4].first == "A*z+B");

  auto aterms = bousq::ode_residual_terms(
      bousq::reduce(PdeForm::assigned(), WaveFrame{0.5, 1.0}), h, 0.4);
  REQUIRE(aterms.size() == 4);
  CHECK(aterms[1].first == "-m4*h''");
}

TEST_CASE("invariant surface condition") {
  WaveFrame frame{std::sqrt(1.25) * 0.25, 0.25};
  bousq::Field trav = [&frame](const Jet& x, const Jet& t) {
    Jet s = sech(frame.mu * x - frame.lambda * t);
    return 0.125 * s * s;
  };
  CHECK(std::abs(bousq::invariant_surface_check(trav, frame, 1.3, 0.8)) < 1e-12);

  bousq::Field ramp = [](const Jet& x, const Jet& t) { return x + 0.0 * t; };
  CHECK(bousq::invariant_surface_check(ramp, frame, 1.3, 0.8) ==
        doctest::Approx(frame.lambda).epsilon(1e-14));

  bousq::Field nontrav = [](const Jet& x, const Jet& t) { return sin(x) * cos(0.5 * t); };
  CHECK(std::abs(bousq::invariant_surface_check(nontrav, frame, 0.9, 0.7)) > 1e-3);
}

TEST_CASE("reduction rejects unsupported forms and degenerate frames") {
  CHECK_THROWS_AS((void)bousq::reduce(PdeForm::classical(1.0), WaveFrame{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)bousq::reduce(PdeForm::corrected(), WaveFrame{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)bousq::reduce(PdeForm::assigned(), WaveFrame{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("pde_from_id round trip") {
  CHECK(bousq::pde_from_id("assigned").kind == bousq::PdeKind::Assigned);
  CHECK(bousq::pde_from_id("classical", 2.5).c == doctest::Approx(2.5));
  CHECK(bousq::pde_from_id("corrected").kind == bousq::PdeKind::Corrected);
  CHECK(bousq::pde_from_id("generalized", 1.0, bousq::NonlinearitySpec{{{1, 2}}}).kind ==
        bousq::PdeKind::Generalized);
  CHECK_THROWS_AS((void)bousq::pde_from_id("bogus"), std::invalid_argument);
}
