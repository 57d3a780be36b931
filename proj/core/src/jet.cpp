#include "lc/jet.hpp"

#include <algorithm>
#include <cmath>

namespace lc {

namespace {

void require_degree(int degree) {
    if (degree < 0 || degree > Jet::max_degree)
        throw StructuralError("jet degree out of range: " + std::to_string(degree));
}

} // namespace

Jet::Jet(int degree, Vec2 center) : degree_(degree), center_(center) {
    require_degree(degree);
}

Jet Jet::constant(int degree, Vec2 center, double value) {
    Jet j(degree, center);
    j.c_[0] = value;
    return j;
}

Jet Jet::variable_u(int degree, Vec2 center) {
    Jet j(degree, center);
    j.c_[0] = center.x;
    if (degree >= 1) j.at(1, 0) = 1.0;
    return j;
}

Jet Jet::variable_v(int degree, Vec2 center) {
    Jet j(degree, center);
    j.c_[0] = center.y;
    if (degree >= 1) j.at(0, 1) = 1.0;
    return j;
}

double Jet::pd(int i, int j) const {
    static constexpr double fact[] = {1, 1, 2, 6, 24, 120, 720};
    return at(i, j) * fact[i] * fact[j];
}

double Jet::norm_inf() const {
    double m = 0.0;
    for (int k = 0; k < coeff_count(); ++k) m = std::max(m, std::abs(c_[k]));
    return m;
}

void Jet::require_compatible(const Jet& o) const {
    if (degree_ != o.degree_)
        throw StructuralError("jet degree mismatch: " + std::to_string(degree_) + " vs " +
                              std::to_string(o.degree_));
    if (!(center_ == o.center_))
        throw StructuralError("jet center mismatch");
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (int k = 0; k < r.coeff_count(); ++k) r.c_[k] = -r.c_[k];
    return r;
}

Jet Jet::operator+(const Jet& o) const {
    require_compatible(o);
    Jet r = *this;
    for (int k = 0; k < r.coeff_count(); ++k) r.c_[k] += o.c_[k];
    return r;
}

Jet Jet::operator-(const Jet& o) const {
    require_compatible(o);
    Jet r = *this;
    for (int k = 0; k < r.coeff_count(); ++k) r.c_[k] -= o.c_[k];
    return r;
}

Jet Jet::operator*(const Jet& o) const {
    require_compatible(o);
    Jet r(degree_, center_);
    const int D = degree_;
    for (int n1 = 0; n1 <= D; ++n1) {
        for (int j1 = 0; j1 <= n1; ++j1) {
            const double x = at(n1 - j1, j1);
            if (x == 0.0) continue;
            for (int n2 = 0; n1 + n2 <= D; ++n2)
                for (int j2 = 0; j2 <= n2; ++j2)
                    r.at(n1 - j1 + n2 - j2, j1 + j2) += x * o.at(n2 - j2, j2);
        }
    }
    return r;
}

Jet Jet::operator+(double s) const {
    Jet r = *this;
    r.c_[0] += s;
    return r;
}

Jet Jet::operator-(double s) const { return *this + (-s); }

Jet Jet::operator*(double s) const {
    Jet r = *this;
    for (int k = 0; k < r.coeff_count(); ++k) r.c_[k] *= s;
    return r;
}

namespace {

/// Substitute the centered offset w = x - x.value() into the univariate
/// series sum_k series[k] t^k via Horner.
Jet apply_series(const Jet& x, const double* series) {
    const Jet w = x - x.value();
    const int D = x.degree();
    Jet acc = Jet::constant(D, x.center(), series[D]);
    for (int k = D - 1; k >= 0; --k) acc = acc * w + series[k];
    return acc;
}

} // namespace

Jet recip(const Jet& x, double eps_div) {
    const double c0 = x.value();
    if (std::abs(c0) <= eps_div)
        throw DivisionByNearZero("jet reciprocal: constant term " + std::to_string(c0));
    double series[Jet::max_degree + 1];
    double p = 1.0 / c0;
    for (int k = 0; k <= x.degree(); ++k) {
        series[k] = p;
        p *= -1.0 / c0;
    }
    return apply_series(x, series);
}

Jet sqrt(const Jet& x, double eps_div) {
    const double c0 = x.value();
    if (!(c0 > eps_div))
        throw SqrtDomain("jet sqrt: constant term " + std::to_string(c0) + " not positive");
    // binomial series: sqrt(c0) * sum_k binom(1/2, k) (t/c0)^k
    double series[Jet::max_degree + 1];
    const double s0 = std::sqrt(c0);
    double binom = 1.0;
    double scale = s0;
    for (int k = 0; k <= x.degree(); ++k) {
        series[k] = scale * binom;
        binom *= (0.5 - k) / (k + 1);
        scale /= c0;
    }
    return apply_series(x, series);
}

Jet sin(const Jet& x) {
    const double c0 = x.value();
    const double table[4] = {std::sin(c0), std::cos(c0), -std::sin(c0), -std::cos(c0)};
    double series[Jet::max_degree + 1];
    double f = 1.0;
    for (int k = 0; k <= x.degree(); ++k) {
        if (k > 0) f /= k;
        series[k] = table[k % 4] * f;
    }
    return apply_series(x, series);
}

Jet cos(const Jet& x) {
    const double c0 = x.value();
    const double table[4] = {std::cos(c0), -std::sin(c0), -std::cos(c0), std::sin(c0)};
    double series[Jet::max_degree + 1];
    double f = 1.0;
    for (int k = 0; k <= x.degree(); ++k) {
        if (k > 0) f /= k;
        series[k] = table[k % 4] * f;
    }
    return apply_series(x, series);
}

Jet exp(const Jet& x) {
    const double e0 = std::exp(x.value());
    double series[Jet::max_degree + 1];
    double f = e0;
    for (int k = 0; k <= x.degree(); ++k) {
        series[k] = f;
        f /= (k + 1);
    }
    return apply_series(x, series);
}

Jet diff(const Jet& x, Axis axis) {
    if (x.degree() < 1) throw StructuralError("jet diff: degree must be >= 1");
    Jet r(x.degree() - 1, x.center());
    for (int n = 0; n <= r.degree(); ++n) {
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            r.at(i, j) = (axis == Axis::u) ? (i + 1) * x.at(i + 1, j) : (j + 1) * x.at(i, j + 1);
        }
    }
    return r;
}

Jet compose(const Jet& f, const Jet& gu, const Jet& gv) {
    if (f.degree() != gu.degree() || f.degree() != gv.degree())
        throw StructuralError("jet compose: degree mismatch");
    if (!(gu.center() == gv.center()))
        throw StructuralError("jet compose: substitution center mismatch");
    const double tiny = 1e-13 * std::max(1.0, std::max(gu.norm_inf(), gv.norm_inf()));
    if (std::abs(gu.value()) > tiny || std::abs(gv.value()) > tiny)
        throw StructuralError("jet compose: substitution must have zero constant term");

    const int D = f.degree();
    const Vec2 ctr = gu.center();
    Jet su = gu - gu.value();
    Jet sv = gv - gv.value();

    // powers of the substituted offsets, truncated
    std::array<Jet, Jet::max_degree + 1> pu, pv;
    pu[0] = Jet::constant(D, ctr, 1.0);
    pv[0] = pu[0];
    for (int k = 1; k <= D; ++k) {
        pu[k] = pu[k - 1] * su;
        pv[k] = pv[k - 1] * sv;
    }

    Jet r(D, ctr);
    for (int n = 0; n <= D; ++n) {
        for (int j = 0; j <= n; ++j) {
            const double coeff = f.at(n - j, j);
            if (coeff == 0.0) continue;
            r += (pu[n - j] * pv[j]) * coeff;
        }
    }
    return r;
}

Jet truncated(const Jet& x, int new_degree) {
    if (new_degree > x.degree())
        throw StructuralError("jet truncate: cannot raise degree");
    Jet r(new_degree, x.center());
    for (int n = 0; n <= new_degree; ++n)
        for (int j = 0; j <= n; ++j) r.at(n - j, j) = x.at(n - j, j);
    return r;
}

double eval(const Jet& x, Vec2 point) {
    const double du = point.x - x.center().x;
    const double dv = point.y - x.center().y;
    double dup[Jet::max_degree + 1], dvp[Jet::max_degree + 1];
    dup[0] = dvp[0] = 1.0;
    for (int k = 1; k <= x.degree(); ++k) {
        dup[k] = dup[k - 1] * du;
        dvp[k] = dvp[k - 1] * dv;
    }
    double result = 0.0;
    for (int n = x.degree(); n >= 0; --n)
        for (int j = 0; j <= n; ++j) result += x.at(n - j, j) * dup[n - j] * dvp[j];
    return result;
}

Jet potential(const Jet& fu, const Jet& fv, double value0) {
    if (fu.degree() != fv.degree() || !(fu.center() == fv.center()))
        throw StructuralError("jet potential: mismatched component jets");
    const int D = std::min(fu.degree() + 1, static_cast<int>(Jet::max_degree));
    Jet r(D, fu.center());
    r.at(0, 0) = value0;
    for (int n = 1; n <= D; ++n) {
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            if (j >= 1)
                r.at(i, j) = fv.at(i, j - 1) / j;
            else
                r.at(i, 0) = fu.at(i - 1, 0) / i;
        }
    }
    return r;
}

} // namespace lc
