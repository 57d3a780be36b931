#include "lc/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lc {

ShapeJets::ShapeJets(Jet a_, Jet b_, Jet c_, Jet d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
      delta((a - d) * (a - d) + 4.0 * (b * c)) {}

double ShapeJets::delta_scale() const {
    const double n = value().frobenius();
    return std::max(n * n, 1e-300);
}

LineCongruence LineCongruence::direction_field(Expr xi1, Expr xi2, ParamMap params, Rect domain,
                                               Tolerances tol) {
    LineCongruence c;
    c.mode_ = Mode::direction_field;
    c.xi1_ = std::move(xi1);
    c.xi2_ = std::move(xi2);
    c.params_ = std::move(params);
    c.domain_ = domain;
    c.tol_ = tol;
    return c;
}

LineCongruence LineCongruence::shape_fields(Expr a, Expr b, Expr c, Expr d, ParamMap params,
                                            Rect domain, Tolerances tol) {
    LineCongruence cg;
    cg.mode_ = Mode::shape_fields;
    cg.a_ = std::move(a);
    cg.b_ = std::move(b);
    cg.c_ = std::move(c);
    cg.d_ = std::move(d);
    cg.params_ = std::move(params);
    cg.domain_ = domain;
    cg.tol_ = tol;
    return cg;
}

bool LineCongruence::polynomial() const {
    if (mode_ == Mode::direction_field)
        return is_polynomial(xi1_) && is_polynomial(xi2_);
    return is_polynomial(a_) && is_polynomial(b_) && is_polynomial(c_) && is_polynomial(d_);
}

ShapeJets LineCongruence::shape_at(Vec2 p, int degree) const {
    if (degree < 2 || degree > Jet::max_degree)
        throw StructuralError("shape_at: degree must be in [2, 6]");

    if (mode_ == Mode::direction_field) {
        const int d1 = std::min(degree + 1, static_cast<int>(Jet::max_degree));
        Jet x1 = eval_jet(xi1_, p, d1, params_);
        Jet x2 = eval_jet(xi2_, p, d1, params_);
        Jet a = -diff(x1, Axis::u);
        Jet b = -diff(x1, Axis::v);
        Jet c = -diff(x2, Axis::u);
        Jet d = -diff(x2, Axis::v);
        if (a.degree() > degree) {
            a = truncated(a, degree);
            b = truncated(b, degree);
            c = truncated(c, degree);
            d = truncated(d, degree);
        }
        return {a, b, c, d};
    }

    Jet a = eval_jet(a_, p, degree, params_);
    Jet b = eval_jet(b_, p, degree, params_);
    Jet c = eval_jet(c_, p, degree, params_);
    Jet d = eval_jet(d_, p, degree, params_);

    // b_u = a_v and d_u = c_v through degree - 1
    const Jet r1 = diff(b, Axis::u) - diff(a, Axis::v);
    const Jet r2 = diff(d, Axis::u) - diff(c, Axis::v);
    const double scale = std::max({a.norm_inf(), b.norm_inf(), c.norm_inf(), d.norm_inf(), 1e-30});
    const double res = std::max(r1.norm_inf(), r2.norm_inf());
    if (res > tol_.eps_int * scale)
        throw IntegrabilityViolation("shape fields are not integrable", res);
    return {a, b, c, d};
}

EigenData eigen_of_shape(const ShapeJets& s, const Tolerances& tol) {
    const Mat2 S = s.value();
    const double delta0 = s.delta.value();
    const double scale2 = s.delta_scale();

    if (delta0 <= tol.eps_delta * scale2) {
        const double lam = 0.5 * S.trace();
        const Mat2 dev{S.a - lam, S.b, S.c, S.d - lam};
        if (dev.norm_inf() < tol.eps_umbilic * std::sqrt(scale2))
            throw UmbilicPoint("umbilic point: shape operator is scalar");
        throw DiscriminantNonPositive("discriminant not positive: delta = " +
                                      std::to_string(delta0));
    }

    const double root = std::sqrt(delta0);
    EigenData e;
    e.delta0 = delta0;
    e.lambda1 = 0.5 * (S.trace() + root);
    e.lambda2 = 0.5 * (S.trace() - root);

    auto eigenvector = [&](double lambda) {
        const Vec2 cand1{lambda - S.d, S.c};
        const Vec2 cand2{S.b, lambda - S.a};
        const Vec2 w = (cand1.norm() >= cand2.norm()) ? cand1 : cand2;
        return w.normalized();
    };
    e.w1 = eigenvector(e.lambda1);
    e.w2 = eigenvector(e.lambda2);
    return e;
}

EigenData LineCongruence::eigen_at(Vec2 p) const { return eigen_of_shape(shape_at(p, 2), tol_); }

namespace {

/// fixed 12-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kGaussN = 12;
constexpr double kGaussX[kGaussN] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047, -0.5873179542866175,
    -0.3678314989981802, -0.1252334085114689, 0.1252334085114689,  0.3678314989981802,
    0.5873179542866175,  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kGaussW[kGaussN] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462, 0.2031674267230659,
    0.2334925365383548, 0.2491470458134028, 0.2491470458134028, 0.2334925365383548,
    0.2031674267230659, 0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

double integrate_1d(const std::function<double(double)>& f, double lo, double hi) {
    if (lo == hi) return 0.0;
    const int panels = std::max(2, static_cast<int>(std::ceil(std::abs(hi - lo) / 0.25)));
    const double h = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        const double mid = a + 0.5 * h;
        double acc = 0.0;
        for (int k = 0; k < kGaussN; ++k) acc += kGaussW[k] * f(mid + 0.5 * h * kGaussX[k]);
        total += 0.5 * h * acc;
    }
    return total;
}

} // namespace

Vec2 LineCongruence::xi_at(Vec2 p) const {
    if (mode_ == Mode::direction_field)
        return {eval(xi1_, p.x, p.y, params_), eval(xi2_, p.x, p.y, params_)};

    // path integral from the domain center along an axis-aligned path;
    // path independence holds because the fields are integrable
    const Vec2 o = domain_.center();
    auto at = [&](const Expr& e, double u, double v) { return eval(e, u, v, params_); };
    const double xi1 = -integrate_1d([&](double s) { return at(a_, s, o.y); }, o.x, p.x) -
                       integrate_1d([&](double t) { return at(b_, p.x, t); }, o.y, p.y);
    const double xi2 = -integrate_1d([&](double s) { return at(c_, s, o.y); }, o.x, p.x) -
                       integrate_1d([&](double t) { return at(d_, p.x, t); }, o.y, p.y);
    return {xi1, xi2};
}

std::pair<Jet, Jet> LineCongruence::xi_jets_at(Vec2 p, int degree) const {
    if (mode_ == Mode::direction_field)
        return {eval_jet(xi1_, p, degree, params_), eval_jet(xi2_, p, degree, params_)};

    const int dlow = degree - 1;
    ShapeJets s = shape_at(p, std::max(2, dlow));
    Jet a = s.a, b = s.b, c = s.c, d = s.d;
    if (a.degree() > dlow) {
        a = truncated(a, dlow);
        b = truncated(b, dlow);
        c = truncated(c, dlow);
        d = truncated(d, dlow);
    }
    const Vec2 anchor_value = xi_at(p);
    Jet xi1 = potential(-a, -b, anchor_value.x);
    Jet xi2 = potential(-c, -d, anchor_value.y);
    return {xi1, xi2};
}

Vec3 LineCongruence::congruence_map(double u, double v, double t) const {
    const Vec2 xi = xi_at({u, v});
    return {u + t * xi.x, v + t * xi.y, t};
}

Vec3 LineCongruence::focal_point(Vec2 p, int branch) const {
    if (branch != 1 && branch != 2)
        throw StructuralError("focal_point: branch must be 1 or 2");
    ShapeJets s = shape_at(p, 2);
    const double delta0 = s.delta.value();
    const double scale2 = s.delta_scale();
    if (delta0 < -tol_.eps_delta * scale2)
        throw DiscriminantNegative("focal_point: delta = " + std::to_string(delta0));
    const Mat2 S = s.value();
    const double root = std::sqrt(std::max(delta0, 0.0));
    const double lambda = 0.5 * (S.trace() + (branch == 1 ? root : -root));
    if (std::abs(lambda) <= tol_.eps_div * std::max(1.0, std::sqrt(scale2)))
        throw FocalAtInfinity("focal_point: eigenvalue near zero");
    const Vec2 xi = xi_at(p);
    const double t = 1.0 / lambda;
    return {p.x + t * xi.x, p.y + t * xi.y, t};
}

PluckerLine plucker_of_line(Vec3 base, Vec3 dir) {
    if (dir.norm() == 0.0) throw ZeroDirection("plucker_of_line: zero direction");
    // points y = (base, 1), z = (base + dir, 1) in homogeneous coordinates
    PluckerLine w;
    w.w12 = base.x * dir.y - base.y * dir.x;
    w.w34 = -dir.z;
    w.w13 = base.x * dir.z - base.z * dir.x;
    w.w42 = dir.y;
    w.w14 = -dir.x;
    w.w23 = base.y * dir.z - base.z * dir.y;
    if (w.w34 != 0.0) {
        const double s = -1.0 / w.w34;
        w.w12 *= s;
        w.w34 *= s;
        w.w13 *= s;
        w.w42 *= s;
        w.w14 *= s;
        w.w23 *= s;
    }
    return w;
}

} // namespace lc
