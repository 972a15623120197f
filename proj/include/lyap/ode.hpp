#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "lyap/errors.hpp"

namespace lyap {

struct OdeOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double min_step = 1e-14;
    long max_steps = 2000000;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
};

// Adaptive Dormand-Prince 5(4) embedded pair with FSAL. Integrates y' = f(s,y)
// from s0 to s1 (either direction). The per-component error weight is
// abs_tol + rel_tol*max(|y|,|y_new|). Throws StepUnderflowError when the step
// collapses below min_step and NoConvergenceError when max_steps is exhausted.
template <std::size_t N, typename Rhs>
std::array<double, N> integrate_ode(Rhs&& f, double s0, double s1,
                                    std::array<double, N> y, const OdeOptions& opts = {},
                                    OdeStats* stats = nullptr) {
    if (s0 == s1) return y;
    using State = std::array<double, N>;

    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                     a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                     a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                     b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    // Difference between the 5th-order solution weights and the embedded
    // 4th-order weights; dotted with the stages this gives the error estimate.
    constexpr double e1 = b1 - 5179.0 / 57600.0, e3 = b3 - 7571.0 / 16695.0,
                     e4 = b4 - 393.0 / 640.0, e5 = b5 + 92097.0 / 339200.0,
                     e6 = b6 - 187.0 / 2100.0, e7 = -1.0 / 40.0;
    constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;

    const double dir = (s1 > s0) ? 1.0 : -1.0;
    const double span = std::abs(s1 - s0);
    double s = s0;
    double h = dir * std::min(0.1 * span + 1e-30, 0.1);

    State k1, k2, k3, k4, k5, k6, k7, yt, ynew;
    f(s, y, k1);
    long steps = 0;
    while (dir * (s1 - s) > 0.0) {
        if (++steps > opts.max_steps)
            throw NoConvergenceError("ODE integration exceeded the step budget");
        if (std::abs(h) < opts.min_step)
            throw StepUnderflowError("ODE step size collapsed below min_step");
        if (dir * (s + h - s1) > 0.0) h = s1 - s;

        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(s + c2 * h, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(s + c3 * h, yt, k3);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(s + c4 * h, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(s + c5 * h, yt, k5);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(s + h, yt, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] +
                      h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(s + h, ynew, k7);

        double err_sq = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double w =
                opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err_sq += (e / w) * (e / w);
        }
        const double err = std::sqrt(err_sq / static_cast<double>(N));

        if (err <= 1.0) {
            s += h;
            y = ynew;
            k1 = k7;  // FSAL
            if (stats) ++stats->accepted;
        } else if (stats) {
            ++stats->rejected;
        }
        const double factor =
            (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, factor));
    }
    return y;
}

}  // namespace lyap
