#pragma once

/**
 * @file ridge.hpp
 * @brief Closed-form ridge quantities and the singular-discriminant-point
 *        package.
 *
 * Outside the discriminant the branch-1 ridge is the zero set of
 * g1 = A sqrt(delta) + B with
 *
 *   A = (a-d) a_u + c d_v + 2 c a_v + b c_u
 *   B = (a-d)^2 a_u + (a-d)(2 c a_v - c d_v + b c_u)
 *       + 2 c (2 b d_u + b a_u + c b_v)
 *
 * and the branch-2 ridge of g2 = B - A sqrt(delta). Tracing always uses
 * the rationalized G = A^2 delta - B^2, which is smooth across the
 * discriminant; branch tags are assigned afterwards by residual sign.
 */

#include "lc/congruence.hpp"
#include "lc/geometry.hpp"
#include "lc/jet.hpp"

#include <optional>
#include <vector>

namespace lc {

struct RidgeFields {
    Jet A, B;
    Jet G; ///< A^2 delta - B^2
    /// branch residuals at the center; only defined at delta > 0
    std::optional<double> g1, g2;
};

/// A, B, G from shape jets; result degree is jets.degree - 1
RidgeFields ridge_fields(const ShapeJets& s, const Tolerances& tol = {});
RidgeFields ridge_fields_at(const LineCongruence& c, Vec2 p, int degree);

enum class FoldedType { saddle, node, focus, degenerate };

const char* to_string(FoldedType t);

/**
 * Data attached to a singular discriminant point, in normalized
 * coordinates (a0 = d0, b0 = 0, b01 = 0, c0 != 0). The caller performs
 * the normalization; NotNormalized is raised otherwise.
 */
struct DiscriminantReport {
    Mat2 L;              ///< linear part of the lifted field at the origin
    double delta1 = 0.0; ///< (d01-a01)(2a01-d01) - 2 c0 b20, sign of det L
    double delta2 = 0.0; ///< (2d01-3a01)^2 + 8 c0 b02
    FoldedType folded = FoldedType::degenerate;
    std::vector<double> separatrices; ///< slopes beta of p = beta v, 0..2 of them
    double A0 = 0.0, B1 = 0.0, Q = 0.0;
    std::optional<double> alpha; ///< ridge-graph coefficient u = alpha v^2/2; absent when degenerate
};

DiscriminantReport discriminant_ridge_data(const ShapeJets& normalized, const Tolerances& tol = {});

struct ContactResult {
    bool flat = false;       ///< ridge/separatrix contact of order >= 3
    double indicator = 0.0;  ///< 3 a01 d01 - c0 b02
};

/// requires the same normalized coordinates as discriminant_ridge_data
ContactResult ridge_separatrix_contact(const ShapeJets& normalized, const Tolerances& tol = {});

} // namespace lc
