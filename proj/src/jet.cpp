#include "bousq/jet.hpp"

#include <cmath>
#include <cstdlib>

namespace bousq {

// Internal back door for order bookkeeping; not part of the public surface.
class JetOps {
public:
    static void set_orders(Jet& j, int nx, int nt) {
        j.nx_ = nx;
        j.nt_ = nt;
    }
};

namespace {

constexpr double kDivFloor = 1e-300;

// Convolution bounded by the table, not the declared orders: coefficients of
// seeds above their declared order are exactly zero, so the full product is
// still exact and extraction gating alone enforces the contract.
void conv_into(const Jet& a, const Jet& b, Jet& out) {
    for (int i = 0; i <= kJetNX; ++i)
        for (int j = 0; j <= kJetNT; ++j) {
            double s = 0.0;
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q)
                    s += a.coeff(p, q) * b.coeff(i - p, j - q);
            out.coeff(i, j) = s;
        }
}

int min_order(int a, int b) { return a < b ? a : b; }

}  // namespace

Jet Jet::seed_x(double x0, int nx, int nt) {
    auto [x, t] = jet_seed(x0, 0.0, nx, nt);
    (void)t;
    return x;
}

Jet Jet::seed_t(double t0, int nx, int nt) {
    auto [x, t] = jet_seed(0.0, t0, nx, nt);
    (void)x;
    return t;
}

Jet Jet::dx() const {
    if (nx_ < 1) throw std::out_of_range("jet: d/dx of an order-0 jet");
    Jet r;
    for (int i = 0; i + 1 <= kJetNX; ++i)
        for (int j = 0; j <= kJetNT; ++j)
            r.c_[i][j] = (i + 1) * c_[i + 1][j];
    r.nx_ = nx_ - 1;
    r.nt_ = nt_;
    return r;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& row : r.c_)
        for (auto& v : row) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    for (int i = 0; i <= kJetNX; ++i)
        for (int j = 0; j <= kJetNT; ++j) c_[i][j] += o.c_[i][j];
    nx_ = min_order(nx_, o.nx_);
    nt_ = min_order(nt_, o.nt_);
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (int i = 0; i <= kJetNX; ++i)
        for (int j = 0; j <= kJetNT; ++j) c_[i][j] -= o.c_[i][j];
    nx_ = min_order(nx_, o.nx_);
    nt_ = min_order(nt_, o.nt_);
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    conv_into(a, b, r);
    r.nx_ = min_order(a.nx_, b.nx_);
    r.nt_ = min_order(a.nt_, b.nt_);
    return r;
}

Jet operator*(Jet a, double s) {
    for (auto& row : a.c_)
        for (auto& v : row) v *= s;
    return a;
}

namespace detail {

Jet compose_series(const Series& g, const Jet& f) {
    Jet n = f;           // nilpotent part: n^(kSeriesOrder+1) == 0 in the table
    n.coeff(0, 0) = 0.0;
    Jet r(g[kSeriesOrder]);
    for (int k = kSeriesOrder - 1; k >= 0; --k) {
        Jet t;
        conv_into(r, n, t);
        t.coeff(0, 0) += g[k];
        r = t;
    }
    JetOps::set_orders(r, f.nx(), f.nt());
    return r;
}

}  // namespace detail

namespace {

using detail::Series;
using detail::kSeriesOrder;

Jet reciprocal(const Jet& a) {
    double v = a.value();
    if (std::abs(v) < kDivFloor) throw JetDomainError("jet: division by zero jet");
    Series g{};
    double p = 1.0 / v;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        g[k] = (k % 2 == 0) ? p : -p;
        p /= v;
    }
    return detail::compose_series(g, a);
}

}  // namespace

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet sin(const Jet& a) {
    double v = a.value();
    double s = std::sin(v), c = std::cos(v);
    Series g{};
    double fact = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) fact *= k;
        double d = 0.0;
        switch (k % 4) {
            case 0: d = s; break;
            case 1: d = c; break;
            case 2: d = -s; break;
            case 3: d = -c; break;
        }
        g[k] = d / fact;
    }
    return detail::compose_series(g, a);
}

Jet cos(const Jet& a) {
    double v = a.value();
    double s = std::sin(v), c = std::cos(v);
    Series g{};
    double fact = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) fact *= k;
        double d = 0.0;
        switch (k % 4) {
            case 0: d = c; break;
            case 1: d = -s; break;
            case 2: d = -c; break;
            case 3: d = s; break;
        }
        g[k] = d / fact;
    }
    return detail::compose_series(g, a);
}

Jet tan(const Jet& a) {
    // T' = 1 + T^2 as a coefficient recurrence around the point value.
    Series t{};
    t[0] = std::tan(a.value());
    for (int k = 0; k + 1 <= kSeriesOrder; ++k) {
        double conv = 0.0;
        for (int i = 0; i <= k; ++i) conv += t[i] * t[k - i];
        t[k + 1] = ((k == 0 ? 1.0 : 0.0) + conv) / (k + 1);
    }
    return detail::compose_series(t, a);
}

Jet sinh(const Jet& a) {
    double v = a.value();
    double s = std::sinh(v), c = std::cosh(v);
    Series g{};
    double fact = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) fact *= k;
        g[k] = ((k % 2 == 0) ? s : c) / fact;
    }
    return detail::compose_series(g, a);
}

Jet cosh(const Jet& a) {
    double v = a.value();
    double s = std::sinh(v), c = std::cosh(v);
    Series g{};
    double fact = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) fact *= k;
        g[k] = ((k % 2 == 0) ? c : s) / fact;
    }
    return detail::compose_series(g, a);
}

Jet tanh(const Jet& a) {
    // T' = 1 - T^2.
    Series t{};
    t[0] = std::tanh(a.value());
    for (int k = 0; k + 1 <= kSeriesOrder; ++k) {
        double conv = 0.0;
        for (int i = 0; i <= k; ++i) conv += t[i] * t[k - i];
        t[k + 1] = ((k == 0 ? 1.0 : 0.0) - conv) / (k + 1);
    }
    return detail::compose_series(t, a);
}

Jet sech(const Jet& a) {
    // Coupled pair: S' = -S T, T' = S^2 with T = tanh.
    Series s{}, t{};
    double v = a.value();
    s[0] = 1.0 / std::cosh(v);
    t[0] = std::tanh(v);
    for (int k = 0; k + 1 <= kSeriesOrder; ++k) {
        double st = 0.0, ss = 0.0;
        for (int i = 0; i <= k; ++i) {
            st += s[i] * t[k - i];
            ss += s[i] * s[k - i];
        }
        s[k + 1] = -st / (k + 1);
        t[k + 1] = ss / (k + 1);
    }
    return detail::compose_series(s, a);
}

Jet exp(const Jet& a) {
    double e = std::exp(a.value());
    Series g{};
    double fact = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) fact *= k;
        g[k] = e / fact;
    }
    return detail::compose_series(g, a);
}

Jet sqrt(const Jet& a) {
    if (!(a.value() > 0.0)) throw JetDomainError("jet: sqrt of non-positive jet");
    return pow(a, 0.5);
}

Jet pow(const Jet& a, double p) {
    if (p == 0.0) {
        // u^0 == 1, including at u == 0 (constant terms of nonlinearities).
        Jet r(1.0);
        r.nx_ = a.nx_;
        r.nt_ = a.nt_;
        return r;
    }
    double ip = 0.0;
    bool integral = std::modf(p, &ip) == 0.0 && std::abs(p) < 1e15;
    if (integral) {
        long long n = static_cast<long long>(ip);
        bool invert = n < 0;
        if (invert) n = -n;
        Jet base = a;
        if (invert) base = reciprocal(a);  // throws on zero value
        Jet r(1.0);
        r.nx_ = a.nx_;
        r.nt_ = a.nt_;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }
    double v = a.value();
    if (!(v > 0.0)) throw JetDomainError("jet: fractional power of non-positive jet");
    Series g{};
    double binom = 1.0;
    for (int k = 0; k <= kSeriesOrder; ++k) {
        if (k > 0) binom *= (p - (k - 1)) / k;
        g[k] = binom * std::pow(v, p - k);
    }
    return detail::compose_series(g, a);
}

std::pair<Jet, Jet> jet_seed(double x0, double t0, int NX, int NT) {
    if (NX < 0 || NT < 0 || NX > kJetNX || NT > kJetNT)
        throw std::out_of_range("jet_seed: orders outside the fixed table (0.." +
                                std::to_string(kJetNX) + ", 0.." + std::to_string(kJetNT) + ")");
    Jet x, t;
    x.coeff(0, 0) = x0;
    if (NX >= 1) x.coeff(1, 0) = 1.0;  // order-0 seed is the frozen value
    t.coeff(0, 0) = t0;
    if (NT >= 1) t.coeff(0, 1) = 1.0;
    JetOps::set_orders(x, NX, NT);
    JetOps::set_orders(t, NX, NT);
    return {x, t};
}

double extract_partial(const Jet& j, int i, int k) {
    if (i < 0 || k < 0 || i > j.nx() || k > j.nt())
        throw std::out_of_range("extract_partial: order (" + std::to_string(i) + "," +
                                std::to_string(k) + ") beyond jet orders (" +
                                std::to_string(j.nx()) + "," + std::to_string(j.nt()) + ")");
    static const double fact[] = {1, 1, 2, 6, 24, 120, 720};
    return j.coeff(i, k) * fact[i] * fact[k];
}

}  // namespace bousq
