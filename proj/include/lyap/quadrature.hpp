#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lyap {

struct QuadOptions {
    double tol = 1e-10;   // absolute tolerance, scaled by (1 + |integral|)
    int max_depth = 32;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed once per n by Newton iteration on the Legendre polynomial and
// cached; accurate to machine precision.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Fixed n-point Gauss-Legendre estimate on [a, b].
double gauss_panel(const std::function<double(double)>& f, double a, double b, int n = 15);

// Adaptive Gauss-Legendre with panel bisection: a panel is accepted when the
// two-half refinement of its 15-point estimate moves by less than its share of
// the tolerance budget. Handles a > b with the usual sign flip. Throws
// QuadratureFailureError when the recursion depth limit is hit.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {});

}  // namespace lyap
