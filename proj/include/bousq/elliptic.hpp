#pragma once

#include "bousq/jet.hpp"

namespace bousq {

// Parameter convention throughout: m (NOT the modulus k; m = k^2), i.e.
//     u = integral_0^phi dtheta / sqrt(1 - m sin^2 theta),  sn(u|m) = sin phi.

// Complete elliptic integral K(m) via the arithmetic-geometric mean.
// Requires 0 <= m < 1; K diverges at m = 1.
double complete_K(double m);

struct JacobiTriple {
    double sn, cn, dn;
};

// sn/cn/dn at real z for m in [0,1].  Within 1e-12 of the endpoints the
// degenerate closed forms are used (the AGM descent loses all precision
// there); otherwise the argument is reduced modulo the period 4K(m) and a
// Landen-descent backward recurrence evaluates the triple.
JacobiTriple jacobi_eval(double z, double m);

struct JacobiJetTriple {
    Jet sn, cn, dn;
};

// The same triple as jets of the inner argument: Taylor coefficients at
// z.value() from the first-order system
//     sn' = cn dn,  cn' = -sn dn,  dn' = -m sn cn
// composed with the inner jet.
JacobiJetTriple jacobi_jet(const Jet& z, double m);

}  // namespace bousq
