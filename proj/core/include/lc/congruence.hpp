#pragma once

/**
 * @file congruence.hpp
 * @brief The line-congruence model and pointwise-derivable data.
 *
 * The model fixes the base surface f(u,v) = (u, v, 0) and a direction
 * field xi = (xi1, xi2, 1); the lines are F(u,v,t) = f + t xi. The shape
 * operator S = [[a,b],[c,d]] is read off xi by a = -d(xi1)/du,
 * b = -d(xi1)/dv, c = -d(xi2)/du, d = -d(xi2)/dv. A congruence may be
 * given by xi directly or by the four shape fields; in the latter case
 * the integrability conditions b_u = a_v, d_u = c_v are verified
 * numerically and xi is recovered by path integration.
 */

#include "lc/expr.hpp"
#include "lc/geometry.hpp"
#include "lc/jet.hpp"
#include "lc/tolerances.hpp"

#include <string>

namespace lc {

/// Jets of the shape fields at one point. delta is always recomputed from
/// a, b, c, d, never stored independently.
struct ShapeJets {
    Jet a, b, c, d;
    Jet delta;

    ShapeJets(Jet a_, Jet b_, Jet c_, Jet d_);

    Mat2 value() const { return {a.value(), b.value(), c.value(), d.value()}; }
    /// |S|^2 scale used to nondimensionalize delta comparisons
    double delta_scale() const;
};

struct EigenData {
    double lambda1 = 0.0; ///< larger eigenvalue
    double lambda2 = 0.0;
    Vec2 w1, w2; ///< unit eigenvectors (sign arbitrary)
    double delta0 = 0.0;
};

/// Homogeneous line coordinates, normalized to w34 = -1 when possible.
struct PluckerLine {
    double w12 = 0.0, w34 = 0.0, w13 = 0.0, w42 = 0.0, w14 = 0.0, w23 = 0.0;
    double quadric_residual() const { return w12 * w34 + w13 * w42 + w14 * w23; }
};

class LineCongruence {
public:
    enum class Mode { direction_field, shape_fields };

    static LineCongruence direction_field(Expr xi1, Expr xi2, ParamMap params, Rect domain,
                                          Tolerances tol = {});
    static LineCongruence shape_fields(Expr a, Expr b, Expr c, Expr d, ParamMap params,
                                       Rect domain, Tolerances tol = {});

    Mode mode() const { return mode_; }
    const Rect& domain() const { return domain_; }
    const ParamMap& params() const { return params_; }
    const Tolerances& tol() const { return tol_; }

    /// true when all defining expressions are polynomial in u, v
    bool polynomial() const;

    /// shape jets at p; degree in [2, 6]; integrability checked in
    /// shape-field mode (IntegrabilityViolation on failure)
    ShapeJets shape_at(Vec2 p, int degree) const;

    /// ordered eigen data at a strictly hyperbolic point
    /// (DiscriminantNonPositive / UmbilicPoint otherwise)
    EigenData eigen_at(Vec2 p) const;

    /// the direction field value; path-integrated from the domain center
    /// in shape-field mode (anchor value (0,0))
    Vec2 xi_at(Vec2 p) const;

    /// jets of xi1, xi2 at p (consistent with shape_at up to the anchor)
    std::pair<Jet, Jet> xi_jets_at(Vec2 p, int degree) const;

    Vec3 congruence_map(double u, double v, double t) const;

    /// F_i(p) = f + xi / lambda_i; branch is 1 or 2
    Vec3 focal_point(Vec2 p, int branch) const;

    const Expr& expr_xi1() const { return xi1_; }
    const Expr& expr_xi2() const { return xi2_; }
    const Expr& expr_a() const { return a_; }
    const Expr& expr_b() const { return b_; }
    const Expr& expr_c() const { return c_; }
    const Expr& expr_d() const { return d_; }

private:
    LineCongruence() = default;

    Mode mode_ = Mode::direction_field;
    Expr xi1_, xi2_;       // direction-field mode
    Expr a_, b_, c_, d_;   // shape-field mode
    ParamMap params_;
    Rect domain_;
    Tolerances tol_;
};

/// eigen solve on already-computed shape jets (center values only)
EigenData eigen_of_shape(const ShapeJets& s, const Tolerances& tol);

PluckerLine plucker_of_line(Vec3 base, Vec3 dir);

} // namespace lc
