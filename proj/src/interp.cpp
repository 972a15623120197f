#include "lyap/interp.hpp"

#include <algorithm>

namespace lyap {

namespace {

int cell_index(const UniformAxis& axis, double t, double* theta) {
    const double d = axis.spacing();
    double s = (t - axis.lo) / d;
    int i = static_cast<int>(std::floor(s));
    i = std::clamp(i, 0, axis.n - 2);
    *theta = std::clamp(s - i, 0.0, 1.0);
    return i;
}

}  // namespace

AxisStencil linear_stencil(const UniformAxis& axis, double t) {
    double theta = 0.0;
    const int i = cell_index(axis, t, &theta);
    AxisStencil st;
    st.count = 2;
    st.idx = {i, i + 1, 0, 0};
    st.w = {1.0 - theta, theta, 0.0, 0.0};
    return st;
}

AxisStencil cubic_stencil(const UniformAxis& axis, double t) {
    double theta = 0.0;
    const int i = cell_index(axis, t, &theta);
    if (i - 1 < 0 || i + 2 > axis.n - 1) return linear_stencil(axis, t);
    AxisStencil st;
    st.count = 4;
    st.idx = {i - 1, i, i + 1, i + 2};
    // Lagrange weights for nodes at local coordinates -1, 0, 1, 2.
    const double th = theta;
    st.w = {-th * (th - 1.0) * (th - 2.0) / 6.0,
            (th + 1.0) * (th - 1.0) * (th - 2.0) / 2.0,
            -(th + 1.0) * th * (th - 2.0) / 2.0,
            (th + 1.0) * th * (th - 1.0) / 6.0};
    return st;
}

double interp1(const UniformAxis& axis, const std::vector<double>& values, double t) {
    const AxisStencil st = cubic_stencil(axis, t);
    double out = 0.0;
    for (int k = 0; k < st.count; ++k) out += st.w[k] * values[st.idx[k]];
    return out;
}

double interp2(const UniformAxis& a, const UniformAxis& b, const std::vector<double>& values,
               double ta, double tb) {
    const AxisStencil sa = cubic_stencil(a, ta);
    const AxisStencil sb = cubic_stencil(b, tb);
    double out = 0.0;
    for (int i = 0; i < sa.count; ++i) {
        double row = 0.0;
        const int base = sa.idx[i] * b.n;
        for (int j = 0; j < sb.count; ++j) row += sb.w[j] * values[base + sb.idx[j]];
        out += sa.w[i] * row;
    }
    return out;
}

}  // namespace lyap
