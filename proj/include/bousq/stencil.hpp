#pragma once

#include <functional>
#include <vector>

namespace bousq {

// Central finite-difference stencil request for a single 1-D derivative.
struct StencilSpec {
    int order = 1;        // derivative order d >= 0
    double h = 1e-2;      // step, > 0
    int accuracy = 4;     // nominal order of accuracy, 2 or 4
};

// Step defaults tuned so truncation and roundoff balance for smooth O(1) data.
double default_step(int order);
StencilSpec default_stencil(int order);

// Fornberg weights for derivative `order` at 0 on nodes {-w,...,w}*h with
// w = (order+1)/2 + ceil(accuracy/2) - 1.  The stencil is exact on
// polynomials of degree <= 2w (plus one more for even orders by symmetry),
// which covers degree order+accuracy-1.
std::vector<double> stencil_weights(const StencilSpec& spec);

// Mixed partial d^{i+k} f / dx^i dt^k at (x0,t0) as the tensor product of two
// 1-D stencils applied to a plain double-valued field.
double fd_partial(const std::function<double(double, double)>& f, double x0, double t0,
                  int i, int k, const StencilSpec* xspec = nullptr,
                  const StencilSpec* tspec = nullptr);

}  // namespace bousq
