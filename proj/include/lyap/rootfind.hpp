#pragma once

#include <functional>
#include <limits>
#include <utility>

namespace lyap {

struct RootOptions {
    double tol = 1e-12;            // absolute residual target |fn(x)| <= tol
    double initial_width = 1.0;    // first bracket half-width around the guess
    int max_expansions = 64;       // bracket doublings before NoBracket
    int max_iterations = 200;
    double clip_lo = -std::numeric_limits<double>::infinity();
    double clip_hi = std::numeric_limits<double>::infinity();
};

// Expands a bracket around `guess` until fn changes sign, clipped to
// [clip_lo, clip_hi]. Throws NoBracketError when the expansion limit or the
// clip interval is exhausted without a sign change.
std::pair<double, double> expand_bracket(const std::function<double(double)>& fn,
                                         double guess, const RootOptions& opts);

// Safeguarded Newton inside a sign-change bracket: Newton steps (using
// `derivative` when given, secant otherwise) are accepted only while they stay
// inside the current bracket; otherwise the step bisects. Iterates past `tol`
// while the residual keeps improving, so simple roots land near machine
// precision. Throws NoConvergenceError if the iteration budget runs out.
double solve_in_bracket(const std::function<double(double)>& fn,
                        const std::function<double(double)>& derivative,  // may be null
                        double lo, double hi, const RootOptions& opts);

// Convenience: bracket expansion followed by the safeguarded solve.
double find_root(const std::function<double(double)>& fn,
                 const std::function<double(double)>& derivative,  // may be null
                 double guess, const RootOptions& opts);

}  // namespace lyap
