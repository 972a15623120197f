#include "lyap/split.hpp"

#include <cmath>
#include <memory>

#include "lyap/errors.hpp"

namespace lyap {

namespace {

double check_positive(double f1, double x, double u, double p, double r) {
    if (!(f1 > 0.0))
        throw NonPositiveF1Error("F1 = " + std::to_string(f1) + " <= 0 at (x,u,p,r)=(" +
                                 std::to_string(x) + "," + std::to_string(u) + "," +
                                 std::to_string(p) + "," + std::to_string(r) + ")");
    return f1;
}

}  // namespace

SplitField split(const ProblemSpec& spec, const SplitOptions& opts) {
    const bool zero_f0 = spec.artificial_zero_f0;
    if (!zero_f0 && !spec.r_bracket().contains(0.0))
        throw F0UndefinedError(
            "F(.,0) undefined: r bracket excludes 0 and the artificial zero-F0 "
            "fallback is off");

    // Shared copy so the closures survive the spec they were built from.
    auto shared = std::make_shared<ProblemSpec>(spec);

    SplitField field;
    if (zero_f0) {
        field.F0 = [](double, double, double) { return 0.0; };
        field.F0_p = [](double, double, double) { return 0.0; };
    } else {
        field.F0 = [shared](double x, double u, double p) { return shared->F(x, u, p, 0.0); };
        field.F0_p = [shared](double x, double u, double p) {
            return shared->F_p(x, u, p, 0.0);
        };
        // Probe once so an undefined F(.,0) surfaces as the dedicated error.
        try {
            field.F0(0.5, 0.0, 0.0);
        } catch (const Error& e) {
            throw F0UndefinedError(std::string("F(.,0) evaluation failed: ") + e.what());
        }
    }

    const double rs = opts.r_switch;
    SplitField::Fn3 f0 = field.F0;
    field.F1 = [shared, f0, rs, zero_f0](double x, double u, double p, double r) {
        const double ar = std::abs(r);
        double value;
        if (zero_f0) {
            // With F0 forced to zero there is no derivative branch anchor at
            // r = 0 in general; the quotient is used whenever r != 0.
            if (r == 0.0) {
                value = shared->F_r(x, u, p, 0.0);
            } else {
                value = shared->F(x, u, p, r) / r;
            }
        } else if (ar <= rs) {
            value = shared->F_r(x, u, p, 0.0);
        } else {
            const double quotient = (shared->F(x, u, p, r) - f0(x, u, p)) / r;
            if (ar >= 10.0 * rs) {
                value = quotient;
            } else {
                const double w = (ar - rs) / (9.0 * rs);
                value = (1.0 - w) * shared->F_r(x, u, p, 0.0) + w * quotient;
            }
        }
        return check_positive(value, x, u, p, r);
    };

    field.F0_cut = field.F0;
    field.F0_cut_p = field.F0_p;
    field.cutoff_radius = 0.0;
    return field;
}

SplitFieldAlt split_alternative(const ProblemSpec& spec) {
    SplitField base = split(spec);
    auto shared = std::make_shared<ProblemSpec>(spec);
    SplitFieldAlt alt;
    alt.F0 = base.F0;
    SplitField::Fn3 f0 = base.F0;
    alt.F1_alt = [shared, f0](double x, double u, double p, double r) {
        if (r == 0.0) return 0.0;
        return shared->F(x, u, p, r) - f0(x, u, p);
    };
    return alt;
}

double cutoff_chi(double u, double p, double R) {
    const double s = std::hypot(u, p);
    if (s <= R) return 1.0;
    if (s >= 2.0 * R) return 0.0;
    const double t = (s - R) / R;
    return 1.0 - 3.0 * t * t + 2.0 * t * t * t;
}

double cutoff_chi_p(double u, double p, double R) {
    const double s = std::hypot(u, p);
    if (s <= R || s >= 2.0 * R || s == 0.0) return 0.0;
    const double t = (s - R) / R;
    const double dchi_dt = -6.0 * t + 6.0 * t * t;
    return dchi_dt * (p / s) / R;
}

SplitField apply_cutoff(const SplitField& field, double R) {
    if (!(R > 0.0)) throw ConfigError("cut-off radius must be positive");
    SplitField out = field;
    SplitField::Fn3 f0 = field.F0;
    SplitField::Fn3 f0p = field.F0_p;
    out.F0_cut = [f0, R](double x, double u, double p) {
        const double chi = cutoff_chi(u, p, R);
        if (chi == 0.0) return 0.0;
        return chi * f0(x, u, p);
    };
    out.F0_cut_p = [f0, f0p, R](double x, double u, double p) {
        const double chi = cutoff_chi(u, p, R);
        if (chi == 0.0) return 0.0;
        const double chi_p = cutoff_chi_p(u, p, R);
        double value = chi * f0p(x, u, p);
        if (chi_p != 0.0) value += chi_p * f0(x, u, p);
        return value;
    };
    out.cutoff_radius = R;
    return out;
}

}  // namespace lyap
