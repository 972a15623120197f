#include "lyap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lyap/errors.hpp"

namespace lyap {

namespace {

GaussRule make_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::acos(-1.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-angle initial guess for the i-th positive root of P_n.
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double budget, int depth, const QuadOptions& opts) {
    if (depth > opts.max_depth)
        throw QuadratureFailureError("adaptive quadrature exceeded depth limit");
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    const double refined = left + right;
    if (std::abs(refined - whole) <= budget) return refined;
    return adapt(f, a, mid, left, 0.5 * budget, depth + 1, opts) +
           adapt(f, mid, b, right, 0.5 * budget, depth + 1, opts);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(c + h * rule.nodes[i]);
    return h * sum;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts) {
    if (a == b) return 0.0;
    const double whole = gauss_panel(f, a, b);
    const double budget = opts.tol * (1.0 + std::abs(whole));
    return adapt(f, a, b, whole, budget, 0, opts);
}

}  // namespace lyap
