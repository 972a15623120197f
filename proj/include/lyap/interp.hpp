#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace lyap {

// Uniformly spaced interpolation axis on [lo, hi] with n >= 2 nodes.
struct UniformAxis {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    double spacing() const { return (hi - lo) / (n - 1); }
    double node(int i) const { return lo + i * spacing(); }
    bool covers(double t) const { return t >= lo && t <= hi; }
};

// Per-axis interpolation stencil: up to four node indices and weights.
struct AxisStencil {
    std::array<int, 4> idx{};
    std::array<double, 4> w{};
    int count = 0;
};

// Four-point Lagrange cubic on the interior, two-point linear where the
// stencil would leave the axis. `t` is clamped to the axis range.
AxisStencil cubic_stencil(const UniformAxis& axis, double t);
AxisStencil linear_stencil(const UniformAxis& axis, double t);

// Cubic interpolation of tabulated values along a single axis.
double interp1(const UniformAxis& axis, const std::vector<double>& values, double t);

// Tensor-product interpolation on a 2-D table stored row-major (a outer,
// b inner). Cubic per axis with the same edge fallback.
double interp2(const UniformAxis& a, const UniformAxis& b, const std::vector<double>& values,
               double ta, double tb);

}  // namespace lyap
