#include "lyap/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "lyap/errors.hpp"

namespace lyap {

namespace {

bool sign_change(double fa, double fb) {
    return (fa <= 0.0 && fb >= 0.0) || (fa >= 0.0 && fb <= 0.0);
}

}  // namespace

std::pair<double, double> expand_bracket(const std::function<double(double)>& fn,
                                         double guess, const RootOptions& opts) {
    double width = opts.initial_width;
    double lo = std::max(guess - width, opts.clip_lo);
    double hi = std::min(guess + width, opts.clip_hi);
    double flo = fn(lo);
    double fhi = fn(hi);
    for (int k = 0; k < opts.max_expansions; ++k) {
        if (sign_change(flo, fhi)) return {lo, hi};
        const bool lo_clipped = lo <= opts.clip_lo;
        const bool hi_clipped = hi >= opts.clip_hi;
        if (lo_clipped && hi_clipped) break;
        width *= 2.0;
        if (!lo_clipped) {
            lo = std::max(guess - width, opts.clip_lo);
            flo = fn(lo);
        }
        if (!hi_clipped) {
            hi = std::min(guess + width, opts.clip_hi);
            fhi = fn(hi);
        }
    }
    if (sign_change(flo, fhi)) return {lo, hi};
    throw NoBracketError("no sign change found while expanding bracket around " +
                         std::to_string(guess));
}

double solve_in_bracket(const std::function<double(double)>& fn,
                        const std::function<double(double)>& derivative,
                        double lo, double hi, const RootOptions& opts) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!sign_change(flo, fhi))
        throw NoBracketError("solve_in_bracket called without a sign change");

    double x = 0.5 * (lo + hi);
    double fx = fn(x);
    double prev_abs = std::abs(fx);
    double best_x = x;
    double best_abs = prev_abs;

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (fx == 0.0) return x;
        // Shrink the bracket around the current iterate.
        if (sign_change(flo, fx)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }

        double x_next;
        bool newton_ok = false;
        if (derivative) {
            const double d = derivative(x);
            if (std::isfinite(d) && d != 0.0) {
                x_next = x - fx / d;
                newton_ok = x_next > lo && x_next < hi;
            } else {
                x_next = 0.0;
            }
        } else {
            // Secant step from the bracket endpoints.
            const double denom = fhi - flo;
            if (denom != 0.0) {
                x_next = lo - flo * (hi - lo) / denom;
                newton_ok = x_next > lo && x_next < hi;
            } else {
                x_next = 0.0;
            }
        }
        if (!newton_ok) x_next = 0.5 * (lo + hi);

        x = x_next;
        fx = fn(x);
        const double ax = std::abs(fx);
        if (ax < best_abs) {
            best_abs = ax;
            best_x = x;
        }
        // Stop once under tolerance and no longer improving, or the bracket
        // has collapsed to adjacent doubles.
        const bool tight = hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                                          (std::abs(lo) + std::abs(hi) + 1.0);
        if ((best_abs <= opts.tol && ax >= prev_abs) || tight) return best_x;
        prev_abs = ax;
    }
    if (best_abs <= opts.tol) return best_x;
    throw NoConvergenceError("root iteration exhausted; best residual " +
                             std::to_string(best_abs));
}

double find_root(const std::function<double(double)>& fn,
                 const std::function<double(double)>& derivative,
                 double guess, const RootOptions& opts) {
    const double fg = fn(guess);
    if (fg == 0.0) return guess;
    auto [lo, hi] = expand_bracket(fn, guess, opts);
    return solve_in_bracket(fn, derivative, lo, hi, opts);
}

}  // namespace lyap
