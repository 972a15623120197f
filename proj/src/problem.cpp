#include "lyap/problem.hpp"

#include <cmath>

#include "lyap/errors.hpp"

namespace lyap {

BoundarySpec BoundarySpec::dirichlet() {
    return BoundarySpec{BoundaryKind::Dirichlet, nullptr, nullptr};
}

BoundarySpec BoundarySpec::neumann() {
    return robin([](double) { return 0.0; }, [](double) { return 0.0; });
}

BoundarySpec BoundarySpec::robin(std::function<double(double)> b,
                                 std::function<double(double)> b_u) {
    BoundarySpec bc;
    bc.kind = BoundaryKind::Robin;
    bc.b = std::move(b);
    bc.b_u = std::move(b_u);
    return bc;
}

ProblemSpec ProblemSpec::from_implicit(ImplicitForm form, BoundarySpec left, BoundarySpec right,
                                       double cutoff_radius, RBracket r_bracket) {
    if (!form.f || !form.f_q || !form.f_r)
        throw ConfigError("implicit form needs f, f_q and f_r evaluators");
    if (cutoff_radius <= 0.0) throw ConfigError("cutoff radius must be positive");
    // A bracket that excludes r = 0 is tolerated here; split() then requires
    // the artificial_zero_f0 fallback to be switched on explicitly.
    ProblemSpec spec;
    spec.implicit_ = std::move(form);
    spec.left_ = std::move(left);
    spec.right_ = std::move(right);
    spec.cutoff_radius_ = cutoff_radius;
    spec.r_bracket_ = r_bracket;
    return spec;
}

ProblemSpec ProblemSpec::from_solved(SolvedForm form, BoundarySpec left, BoundarySpec right,
                                     double cutoff_radius, RBracket r_bracket) {
    if (!form.F) throw ConfigError("solved form needs the F evaluator");
    if (cutoff_radius <= 0.0) throw ConfigError("cutoff radius must be positive");
    ProblemSpec spec;
    spec.solved_ = std::move(form);
    spec.left_ = std::move(left);
    spec.right_ = std::move(right);
    spec.cutoff_radius_ = cutoff_radius;
    spec.r_bracket_ = r_bracket;
    return spec;
}

RootOptions ProblemSpec::root_options(double scale) const {
    RootOptions opts;
    opts.tol = tol_root * (1.0 + std::abs(scale));
    return opts;
}

double ProblemSpec::F(double x, double u, double p, double r) const {
    if (!r_bracket_.contains(r))
        throw EvaluationDomainError("r outside the admissible interval");
    if (is_implicit()) return solve_q(x, u, p, r);
    const double value = solved_.F(x, u, p, r);
    if (!std::isfinite(value)) throw EvaluationDomainError("F evaluated to a non-finite value");
    return value;
}

double ProblemSpec::F_p(double x, double u, double p, double r) const {
    if (is_implicit()) {
        const double q = solve_q(x, u, p, r);
        const double fq = implicit_.f_q(x, u, p, q, r);
        if (fq == 0.0) throw EvaluationDomainError("f_q vanished; parabolicity violated");
        if (!implicit_.f_p) throw EvaluationDomainError("implicit form lacks f_p");
        return -implicit_.f_p(x, u, p, q, r) / fq;
    }
    if (solved_.F_p) return solved_.F_p(x, u, p, r);
    const double h = 1e-6 * (1.0 + std::abs(p));
    return (F(x, u, p + h, r) - F(x, u, p - h, r)) / (2.0 * h);
}

double ProblemSpec::F_r(double x, double u, double p, double r) const {
    if (is_implicit()) {
        const double q = solve_q(x, u, p, r);
        const double fq = implicit_.f_q(x, u, p, q, r);
        if (fq == 0.0) throw EvaluationDomainError("f_q vanished; parabolicity violated");
        return -implicit_.f_r(x, u, p, q, r) / fq;
    }
    if (solved_.F_r) return solved_.F_r(x, u, p, r);
    double h = 1e-6 * (1.0 + std::abs(r));
    // Keep the difference stencil inside the admissible r interval.
    while (h > 0.0 && (!r_bracket_.contains(r + h) || !r_bracket_.contains(r - h))) h *= 0.5;
    if (h == 0.0) throw EvaluationDomainError("cannot difference F_r inside the r bracket");
    return (F(x, u, p, r + h) - F(x, u, p, r - h)) / (2.0 * h);
}

double ProblemSpec::solve_q(double x, double u, double p, double r) const {
    if (!is_implicit()) return F(x, u, p, r);
    if (!r_bracket_.contains(r))
        throw EvaluationDomainError("r outside the admissible interval");
    const auto& fm = implicit_;
    auto residual = [&](double q) { return fm.f(x, u, p, q, r); };
    auto derivative = [&](double q) { return fm.f_q(x, u, p, q, r); };
    return find_root(residual, derivative, 0.0, root_options(residual(0.0)));
}

double ProblemSpec::solve_r(double x, double u, double p, double q) const {
    RootOptions opts;
    // Margin keeps evaluations strictly inside an open bracket.
    const double margin = 1e-12;
    if (std::isfinite(r_bracket_.lo)) opts.clip_lo = r_bracket_.lo + margin;
    if (std::isfinite(r_bracket_.hi)) opts.clip_hi = r_bracket_.hi - margin;
    if (is_implicit()) {
        const auto& fm = implicit_;
        auto residual = [&](double r) { return fm.f(x, u, p, q, r); };
        auto derivative = [&](double r) { return fm.f_r(x, u, p, q, r); };
        opts.tol = tol_root * (1.0 + std::abs(residual(0.0)));
        return find_root(residual, derivative, 0.0, opts);
    }
    auto residual = [&](double r) { return solved_.F(x, u, p, r) - q; };
    std::function<double(double)> derivative;
    if (solved_.F_r)
        derivative = [&](double r) { return solved_.F_r(x, u, p, r); };
    opts.tol = tol_root * (1.0 + std::abs(residual(0.0)));
    return find_root(residual, derivative, 0.0, opts);
}

double ProblemSpec::diffusion(double x, double u, double p, double q, double r) const {
    if (is_implicit()) {
        const double fq = implicit_.f_q(x, u, p, q, r);
        const double fr = implicit_.f_r(x, u, p, q, r);
        if (fr == 0.0) throw EvaluationDomainError("f_r vanished; parabolicity violated");
        return -fq / fr;
    }
    const double fr = F_r(x, u, p, r);
    if (fr <= 0.0) throw EvaluationDomainError("F_r <= 0; parabolicity violated");
    return 1.0 / fr;
}

ParabolicityReport check_parabolicity(const ProblemSpec& spec,
                                      std::span<const ParabolicitySample> samples) {
    if (samples.empty()) throw EvaluationDomainError("parabolicity check needs samples");
    ParabolicityReport report;
    bool first = true;
    for (const auto& s : samples) {
        double value;
        if (spec.is_implicit()) {
            const auto& fm = spec.implicit_form();
            const double fq = fm.f_q(s.x, s.u, s.p, s.q, s.r);
            const double fr = fm.f_r(s.x, s.u, s.p, s.q, s.r);
            if (!std::isfinite(fq) || !std::isfinite(fr))
                throw EvaluationDomainError("partials not finite at a parabolicity sample");
            value = fq * fr;
            if (first || value > report.worst_product) {
                report.worst_product = value;
                report.worst_sample = s;
            }
        } else {
            value = spec.F_r(s.x, s.u, s.p, s.r);
            if (!std::isfinite(value))
                throw EvaluationDomainError("F_r not finite at a parabolicity sample");
            if (first || value < report.worst_product) {
                report.worst_product = value;
                report.worst_sample = s;
            }
        }
        first = false;
    }
    report.ok = spec.is_implicit() ? report.worst_product < 0.0 : report.worst_product > 0.0;
    return report;
}

}  // namespace lyap
