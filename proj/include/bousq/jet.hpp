#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace bousq {

// Fixed truncation orders of the bivariate tables.  Everything downstream
// (sixth x-derivatives under two t-derivatives) fits in a 7x3 table.
inline constexpr int kJetNX = 6;
inline constexpr int kJetNT = 2;

// Raised when an operation leaves the representable domain: division by a
// (near-)zero jet, fractional power of a non-positive base, sqrt at <= 0.
class JetDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncated bivariate Taylor expansion around a point (x0,t0):
//     f(x,t) ~ sum_{i,j} c[i][j] (x-x0)^i (t-t0)^j,  i <= nx, j <= nt.
// c[0][0] is the function value.  Arithmetic is exact through the declared
// orders; declared orders min-propagate through binary operations and only
// gate extraction (storage is always full).
class Jet {
public:
    Jet() = default;                      // zero jet, full orders
    explicit Jet(double v) { c_[0][0] = v; }

    static Jet seed_x(double x0, int nx = kJetNX, int nt = kJetNT);
    static Jet seed_t(double t0, int nx = kJetNX, int nt = kJetNT);

    double value() const { return c_[0][0]; }
    int nx() const { return nx_; }
    int nt() const { return nt_; }

    double coeff(int i, int j) const { return c_[i][j]; }
    double& coeff(int i, int j) { return c_[i][j]; }

    // Formal d/dx (coefficient shift); the top x-order is lost.
    Jet dx() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(Jet a, double s) { a.c_[0][0] += s; return a; }
    friend Jet operator+(double s, Jet a) { a.c_[0][0] += s; return a; }
    friend Jet operator-(Jet a, double s) { a.c_[0][0] -= s; return a; }
    friend Jet operator-(double s, const Jet& a) { return -a + s; }
    friend Jet operator*(Jet a, double s);
    friend Jet operator*(double s, Jet a) { return std::move(a) * s; }
    friend Jet operator/(Jet a, double s) { return std::move(a) * (1.0 / s); }
    friend Jet operator/(double s, const Jet& a) { return Jet(s) / a; }

    friend Jet sin(const Jet&);
    friend Jet cos(const Jet&);
    friend Jet tan(const Jet&);
    friend Jet sinh(const Jet&);
    friend Jet cosh(const Jet&);
    friend Jet tanh(const Jet&);
    friend Jet sech(const Jet&);
    friend Jet exp(const Jet&);
    friend Jet sqrt(const Jet&);
    friend Jet pow(const Jet&, double p);

    friend class JetOps;

private:
    std::array<std::array<double, kJetNT + 1>, kJetNX + 1> c_{};
    int nx_ = kJetNX;
    int nt_ = kJetNT;
};

// Seeds for the two independent variables expanded at (x0, t0); orders above
// the fixed table size are an error, not a silent truncation.
std::pair<Jet, Jet> jet_seed(double x0, double t0, int NX = kJetNX, int NT = kJetNT);

// d^{i+k} f / dx^i dt^k = c[i][k] * i! * k!; out-of-range orders throw.
double extract_partial(const Jet& j, int i, int k);

namespace detail {
// Total order carried by any univariate series pushed through a jet.
inline constexpr int kSeriesOrder = kJetNX + kJetNT;
using Series = std::array<double, kSeriesOrder + 1>;

// g(f) where g is given by its Taylor coefficients at f.value().
Jet compose_series(const Series& g, const Jet& f);
}  // namespace detail

using Field = std::function<Jet(const Jet& x, const Jet& t)>;
using Profile = std::function<Jet(const Jet& z)>;

}  // namespace bousq
