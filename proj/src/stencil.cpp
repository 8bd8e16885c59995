#include "bousq/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace bousq {

namespace {

// Fornberg's algorithm: weights of derivatives 0..m at point z from samples on
// arbitrary nodes x[0..n].  Returns C with C[i][k] = weight of node i for the
// k-th derivative.
std::vector<std::vector<double>> fornberg(double z, const std::vector<double>& x, int m) {
    const int n = static_cast<int>(x.size()) - 1;
    std::vector<std::vector<double>> C(n + 1, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    C[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
                C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
            C[j][0] = c4 * C[j][0] / c3;
        }
        c1 = c2;
    }
    return C;
}

int half_width(int order, int accuracy) {
    return (order + 1) / 2 + (accuracy + 1) / 2 - 1;
}

}  // namespace

double default_step(int order) { return order <= 2 ? 1e-2 : 5e-2; }

StencilSpec default_stencil(int order) { return {order, default_step(order), 4}; }

std::vector<double> stencil_weights(const StencilSpec& spec) {
    if (spec.order < 0) throw std::invalid_argument("stencil: negative derivative order");
    if (!(spec.h > 0.0)) throw std::invalid_argument("stencil: step must be positive");
    if (spec.accuracy != 2 && spec.accuracy != 4)
        throw std::invalid_argument("stencil: accuracy must be 2 or 4");
    if (spec.order == 0) return {1.0};
    const int w = half_width(spec.order, spec.accuracy);
    std::vector<double> nodes(2 * w + 1);
    for (int i = -w; i <= w; ++i) nodes[i + w] = i * spec.h;
    auto C = fornberg(0.0, nodes, spec.order);
    std::vector<double> weights(2 * w + 1);
    for (int i = 0; i <= 2 * w; ++i) weights[i] = C[i][spec.order];
    return weights;
}

double fd_partial(const std::function<double(double, double)>& f, double x0, double t0,
                  int i, int k, const StencilSpec* xspec, const StencilSpec* tspec) {
    StencilSpec sx = xspec ? *xspec : default_stencil(i);
    StencilSpec st = tspec ? *tspec : default_stencil(k);
    sx.order = i;
    st.order = k;
    const auto wx = stencil_weights(sx);
    const auto wt = stencil_weights(st);
    const int cx = (static_cast<int>(wx.size()) - 1) / 2;
    const int ct = (static_cast<int>(wt.size()) - 1) / 2;
    double acc = 0.0;
    for (std::size_t a = 0; a < wx.size(); ++a) {
        if (wx[a] == 0.0 && i > 0) continue;
        double inner = 0.0;
        for (std::size_t b = 0; b < wt.size(); ++b) {
            if (wt[b] == 0.0 && k > 0) continue;
            inner += wt[b] * f(x0 + (static_cast<int>(a) - cx) * sx.h,
                               t0 + (static_cast<int>(b) - ct) * st.h);
        }
        acc += wx[a] * inner;
    }
    return acc;  // weights on dimensional nodes already carry the 1/h^d factors
}

}  // namespace bousq
