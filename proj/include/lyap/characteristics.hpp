#pragma once

#include <string>
#include <vector>

#include "lyap/interp.hpp"
#include "lyap/split.hpp"

namespace lyap {

// State transported along a characteristic: position, phase variables and the
// accumulated log-weight. dg/dx = -F0_cut_p along u' = p, p' = F0_cut, with
// g = 0 on the slice x = 0.
struct CharacteristicState {
    double x = 0.0;
    double u = 0.0;
    double p = 0.0;
    double g = 0.0;
};

// Log-weight g(x,u,p): the joint (u,p,g) system is integrated in reversed x
// from the query point down to x = 0, where g vanishes.
double evaluate_g(const SplitField& field, double x, double u, double p, double tol = 1e-9);

// Foot point of the backward characteristic through (x,u,p), with the g value
// the query point carries. Exposed for the backward/forward consistency test.
CharacteristicState characteristic_foot(const SplitField& field, double x, double u, double p,
                                        double tol = 1e-9);

struct TensorGrid {
    int nx = 65;
    int nu = 129;
    int np = 129;
    double u_half_width = 1.0;  // u in [-U, U]
    double p_half_width = 1.0;  // p in [-P, P]
};

// Cached g values on a tensor grid over [0,1] x [-U,U] x [-P,P], stored
// row-major in (x,u,p). Interpolation is tricubic falling back to linear per
// axis at the grid edges. Immutable after construction.
class GTable {
public:
    GTable(UniformAxis x_axis, UniformAxis u_axis, UniformAxis p_axis,
           std::vector<double> values);

    bool covers(double x, double u, double p) const;
    double eval(double x, double u, double p) const;
    // Same value plus |tricubic - trilinear| as a local smoothness indicator;
    // large values flag cells where the cubic stencil is unreliable.
    double eval_with_indicator(double x, double u, double p, double* indicator) const;

    const UniformAxis& x_axis() const { return x_; }
    const UniformAxis& u_axis() const { return u_; }
    const UniformAxis& p_axis() const { return p_; }
    const std::vector<double>& values() const { return values_; }
    double value_at(int ix, int iu, int ip) const;

    // Plain-text dump: header lines document the layout, then one
    // x,u,p,g row per node in row-major (x,u,p) order, 17 significant digits.
    void save_csv(const std::string& path) const;
    static GTable load_csv(const std::string& path);

private:
    UniformAxis x_, u_, p_;
    std::vector<double> values_;
};

// Fills the tensor grid by integrating one characteristic per node. The node
// loop is embarrassingly parallel; `threads` <= 0 picks the hardware count.
GTable tabulate_g(const SplitField& field, const TensorGrid& grid, double tol = 1e-9,
                  int threads = 0);

}  // namespace lyap
