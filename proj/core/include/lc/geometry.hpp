#pragma once

/**
 * @file geometry.hpp
 * @brief Small fixed-size vectors, 2x2 matrices and the parameter rectangle.
 */

#include <cmath>

namespace lc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2&) const = default;

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm_inf() const { return std::max(std::abs(x), std::abs(y)); }
    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
    // rotate by -90 degrees; (perp(w), w) is a positively oriented frame
    Vec2 perp_cw() const { return {y, -x}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3&) const = default;

    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// 2x2 matrix [[a, b], [c, d]], the layout of the shape operator.
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 columns(Vec2 c1, Vec2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double norm_inf() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
    double frobenius() const { return std::sqrt(a * a + b * b + c * c + d * d); }

    Mat2 inverse() const {
        const double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    Mat2 transpose() const { return {a, c, b, d}; }

    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Vec2 col(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
};

/// Axis-aligned rectangle in the parameter plane.
struct Rect {
    double umin = -1.0, umax = 1.0, vmin = -1.0, vmax = 1.0;

    double width() const { return umax - umin; }
    double height() const { return vmax - vmin; }
    Vec2 center() const { return {0.5 * (umin + umax), 0.5 * (vmin + vmax)}; }
    bool contains(Vec2 p) const {
        return p.x >= umin && p.x <= umax && p.y >= vmin && p.y <= vmax;
    }
    Rect expanded(double margin) const {
        return {umin - margin, umax + margin, vmin - margin, vmax + margin};
    }
};

} // namespace lc
