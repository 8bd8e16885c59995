#include "bousq/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bousq {

namespace {

constexpr double kEndpointTol = 1e-12;

void check_m(double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::domain_error("elliptic: parameter m = " + std::to_string(m) +
                                " outside [0, 1]");
}

// Descending Landen / AGM backward recurrence (Bulirsch-style sncndn) on the
// complementary parameter emmc = 1 - m.  Self-correcting: the loop stops at
// CA = 1e-8 but the backward pass restores near machine precision.
JacobiTriple sncndn(double uu, double emmc) {
    constexpr double CA = 1e-8;
    double sn, cn, dn;
    double emc = emmc;
    double u = uu;
    if (emc != 0.0) {
        double d = 1.0;
        const bool bo = emc < 0.0;
        if (bo) {
            d = 1.0 - emc;
            emc /= -1.0 / d;
            u *= (d = std::sqrt(d));
        }
        double a = 1.0;
        double c = 0.0;
        dn = 1.0;
        double em[13], en[13];
        int l = 12;
        for (int i = 0; i < 13; ++i) {
            l = i;
            em[i] = a;
            en[i] = (emc = std::sqrt(emc));
            c = 0.5 * (a + emc);
            if (std::abs(a - emc) <= CA * a) break;
            emc *= a;
            a = c;
        }
        u *= c;
        sn = std::sin(u);
        cn = std::cos(u);
        if (sn != 0.0) {
            a = cn / sn;
            c *= a;
            for (int i = l; i >= 0; --i) {
                const double b = em[i];
                a *= c;
                c *= dn;
                dn = (en[i] + a) / (b + a);
                a = c / b;
            }
            a = 1.0 / std::sqrt(c * c + 1.0);
            sn = (sn >= 0.0 ? a : -a);
            cn = c * sn;
        }
        if (bo) {
            a = dn;
            dn = cn;
            cn = a;
            sn /= d;
        }
    } else {
        cn = 1.0 / std::cosh(u);
        dn = cn;
        sn = std::tanh(u);
    }
    return {sn, cn, dn};
}

}  // namespace

double complete_K(double m) {
    check_m(m);
    if (m == 1.0) throw std::domain_error("elliptic: K(m) diverges at m = 1");
    double a = 1.0, b = std::sqrt(1.0 - m);
    while (std::abs(a - b) > 1e-15 * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

JacobiTriple jacobi_eval(double z, double m) {
    check_m(m);
    if (m < kEndpointTol) {
        const double s = std::sin(z), c = std::cos(z);
        return {s, c, std::sqrt(1.0 - m * s * s)};
    }
    if (m > 1.0 - kEndpointTol) {
        const double t = std::tanh(z);
        return {t, 1.0 / std::cosh(z), std::sqrt(1.0 - m * t * t)};
    }
    const double period = 4.0 * complete_K(m);
    double zr = std::fmod(z, period);
    if (zr > 0.5 * period) zr -= period;
    if (zr < -0.5 * period) zr += period;
    return sncndn(zr, 1.0 - m);
}

JacobiJetTriple jacobi_jet(const Jet& z, double m) {
    check_m(m);
    const JacobiTriple p = jacobi_eval(z.value(), m);
    constexpr int N = detail::kSeriesOrder;
    detail::Series S{}, C{}, D{};
    S[0] = p.sn;
    C[0] = p.cn;
    D[0] = p.dn;
    for (int k = 0; k < N; ++k) {
        double cd = 0.0, sd = 0.0, sc = 0.0;
        for (int i = 0; i <= k; ++i) {
            cd += C[i] * D[k - i];
            sd += S[i] * D[k - i];
            sc += S[i] * C[k - i];
        }
        S[k + 1] = cd / (k + 1);
        C[k + 1] = -sd / (k + 1);
        D[k + 1] = -m * sc / (k + 1);
    }
    return {detail::compose_series(S, z), detail::compose_series(C, z),
            detail::compose_series(D, z)};
}

}  // namespace bousq
