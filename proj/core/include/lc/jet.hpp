#pragma once

/**
 * @file jet.hpp
 * @brief Truncated bivariate Taylor expansions with arithmetic.
 *
 * A Jet stores the Taylor coefficients of a scalar field at an expansion
 * center (u0, v0), truncated at a runtime degree D:
 *
 *   f(u0 + x, v0 + y) = sum_{i+j <= D} c[i,j] x^i y^j,
 *   c[i,j] = (d^{i+j} f / du^i dv^j) / (i! j!).
 *
 * Coefficients are factorial-normalized so multiplication is a plain
 * truncated Cauchy product. Binary operations require operands with equal
 * degree and identical center; mismatches raise StructuralError rather
 * than coercing.
 *
 * Degrees 2..6 are the supported range for user-facing jets; derivative
 * jets of lower degree appear as intermediates.
 */

#include "lc/errors.hpp"
#include "lc/geometry.hpp"
#include "lc/tolerances.hpp"

#include <array>
#include <cstdint>

namespace lc {

enum class Axis : std::uint8_t { u, v };

class Jet {
public:
    static constexpr int max_degree = 6;
    static constexpr int max_coeffs = (max_degree + 1) * (max_degree + 2) / 2; // 28

    Jet() = default;
    Jet(int degree, Vec2 center);

    static Jet constant(int degree, Vec2 center, double value);
    /// jet of the coordinate function u: value u0, unit linear coefficient
    static Jet variable_u(int degree, Vec2 center);
    static Jet variable_v(int degree, Vec2 center);

    int degree() const { return degree_; }
    Vec2 center() const { return center_; }
    int coeff_count() const { return size_of(degree_); }

    /// Taylor-normalized coefficient of x^i y^j
    double at(int i, int j) const { return c_[index(i, j)]; }
    double& at(int i, int j) { return c_[index(i, j)]; }

    /// raw partial derivative d^{i+j}/du^i dv^j (coefficient times i! j!)
    double pd(int i, int j) const;

    double value() const { return c_[0]; }
    /// max |coefficient|
    double norm_inf() const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;

    Jet operator+(double s) const;
    Jet operator-(double s) const;
    Jet operator*(double s) const;
    Jet operator/(double s) const { return *this * (1.0 / s); }

    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    static int size_of(int degree) { return (degree + 1) * (degree + 2) / 2; }

private:
    static int index(int i, int j) {
        const int n = i + j;
        return n * (n + 1) / 2 + j;
    }
    void require_compatible(const Jet& o) const;

    int degree_ = 0;
    Vec2 center_{};
    std::array<double, max_coeffs> c_{};
};

inline Jet operator+(double s, const Jet& x) { return x + s; }
inline Jet operator*(double s, const Jet& x) { return x * s; }
inline Jet operator-(double s, const Jet& x) { return (-x) + s; }

/// multiplicative inverse up to truncation; |constant term| must exceed eps_div
Jet recip(const Jet& x, double eps_div = Tolerances{}.eps_div);

/// positive square-root branch; constant term must exceed eps_div
Jet sqrt(const Jet& x, double eps_div = Tolerances{}.eps_div);

Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet exp(const Jet& x);

/// partial derivative along one axis; result has degree D - 1
Jet diff(const Jet& x, Axis axis);

/**
 * Substitute (gu, gv) into f. All three jets must share degree; gu and gv
 * must share a center and carry zero constant terms (the substitution
 * fixes the expansion center). Result is centered at gu's center.
 */
Jet compose(const Jet& f, const Jet& gu, const Jet& gv);

/// drop coefficients above new_degree (new_degree <= degree)
Jet truncated(const Jet& x, int new_degree);

/// evaluate the Taylor polynomial at an absolute point
double eval(const Jet& x, Vec2 point);

/**
 * Reconstruct P with dP/du = fu, dP/dv = fv and P(center) = value0.
 * Exactness of the pair (fu, fv) is the caller's responsibility; the
 * v-component is integrated everywhere, the u-component along v = v0.
 * Result degree is min(fu.degree + 1, max_degree).
 */
Jet potential(const Jet& fu, const Jet& fv, double value0);

} // namespace lc
