#pragma once

#include <functional>

#include "lyap/problem.hpp"

namespace lyap {

// Decomposition q = F0(x,u,p) + F1(x,u,p,r)*r with F1 > 0, plus the C1
// cut-off companions of F0 used by the characteristic integration.
struct SplitField {
    using Fn3 = std::function<double(double, double, double)>;
    using Fn4 = std::function<double(double, double, double, double)>;

    Fn3 F0;
    Fn3 F0_p;
    Fn3 F0_cut;    // equals F0 until apply_cutoff is applied
    Fn3 F0_cut_p;
    Fn4 F1;        // throws NonPositiveF1Error when it evaluates <= 0
    double cutoff_radius = 0.0;  // 0 while no cut-off is bound
};

// Alternative decomposition F1_alt(x,u,p,r) = F(x,u,p,r) - F0(x,u,p),
// satisfying r*F1_alt > 0 away from r = 0.
struct SplitFieldAlt {
    SplitField::Fn3 F0;
    SplitField::Fn4 F1_alt;
};

struct SplitOptions {
    double r_switch = 1e-7;  // below: derivative branch; above 10x: quotient
};

SplitField split(const ProblemSpec& spec, const SplitOptions& opts = {});
SplitFieldAlt split_alternative(const ProblemSpec& spec);

// Multiplies F0 by the radial C1 bump that is 1 for sqrt(u^2+p^2) <= R and 0
// beyond 2R, with a cubic Hermite blend in between; F0_cut_p follows by the
// product rule. Returns a copy of `field` with the cut members rebound.
SplitField apply_cutoff(const SplitField& field, double R);

// The bump itself, exposed for tests: chi(s) and d(chi)/dp at (u, p).
double cutoff_chi(double u, double p, double R);
double cutoff_chi_p(double u, double p, double R);

}  // namespace lyap
