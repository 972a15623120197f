#pragma once

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lyap/rootfind.hpp"

namespace lyap {

enum class BoundaryKind { Dirichlet, Robin };

// Boundary closure at one endpoint: u = 0 (Dirichlet) or u_x = b(u) (Robin).
// Neumann is Robin with b identically zero.
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::Dirichlet;
    std::function<double(double)> b;    // Robin slope law
    std::function<double(double)> b_u;  // its derivative

    static BoundarySpec dirichlet();
    static BoundarySpec neumann();
    static BoundarySpec robin(std::function<double(double)> b, std::function<double(double)> b_u);
};

// Open interval of admissible time-derivative values r.
struct RBracket {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double r) const { return r > lo && r < hi; }
};

// Implicit law f(x,u,p,q,r) = 0 with its partial derivatives.
struct ImplicitForm {
    using Fn5 = std::function<double(double, double, double, double, double)>;
    Fn5 f, f_u, f_p, f_q, f_r;
};

// Solved law q = F(x,u,p,r). F_p and F_r may be null; central differences
// with relative step 1e-6 are substituted then.
struct SolvedForm {
    using Fn4 = std::function<double(double, double, double, double)>;
    Fn4 F;
    Fn4 F_p;  // optional
    Fn4 F_r;  // optional
};

// A parabolic problem together with its boundary closure and the cut-off
// radius used downstream. Immutable after construction and safe to share
// across threads.
class ProblemSpec {
public:
    static ProblemSpec from_implicit(ImplicitForm form, BoundarySpec left, BoundarySpec right,
                                     double cutoff_radius, RBracket r_bracket = {});
    static ProblemSpec from_solved(SolvedForm form, BoundarySpec left, BoundarySpec right,
                                   double cutoff_radius, RBracket r_bracket = {});

    bool is_implicit() const { return implicit_.f != nullptr; }

    // Diffusion relation q = F(x,u,p,r); root-finding inversion in the
    // implicit case.
    double F(double x, double u, double p, double r) const;
    double F_p(double x, double u, double p, double r) const;
    double F_r(double x, double u, double p, double r) const;

    // Inversions of the implicit law. In the solved case solve_q is the F
    // evaluation itself and solve_r inverts F in r over r_bracket.
    double solve_q(double x, double u, double p, double r) const;
    double solve_r(double x, double u, double p, double q) const;

    // Effective diffusion dr/dq = -f_q/f_r = 1/F_r at a consistent point.
    double diffusion(double x, double u, double p, double q, double r) const;

    const BoundarySpec& boundary(int iota) const { return iota == 0 ? left_ : right_; }
    double cutoff_radius() const { return cutoff_radius_; }
    const RBracket& r_bracket() const { return r_bracket_; }

    // Flag for the degenerate fallback that replaces an undefined F(.,0)
    // by zero. Never applied silently.
    bool artificial_zero_f0 = false;
    double tol_root = 1e-12;

    const ImplicitForm& implicit_form() const { return implicit_; }
    const SolvedForm& solved_form() const { return solved_; }

private:
    ProblemSpec() = default;
    RootOptions root_options(double scale) const;

    ImplicitForm implicit_;
    SolvedForm solved_;
    BoundarySpec left_;
    BoundarySpec right_;
    double cutoff_radius_ = 1.0;
    RBracket r_bracket_;
};

struct ParabolicitySample {
    double x, u, p, q, r;
};

struct ParabolicityReport {
    bool ok = false;
    // Implicit form: max of f_q*f_r over the samples (must stay < 0).
    // Solved form: min of F_r (must stay > 0).
    double worst_product = 0.0;
    ParabolicitySample worst_sample{};
};

ParabolicityReport check_parabolicity(const ProblemSpec& spec,
                                      std::span<const ParabolicitySample> samples);

}  // namespace lyap
