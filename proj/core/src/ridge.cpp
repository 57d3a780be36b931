#include "lc/ridge.hpp"

#include <algorithm>
#include <cmath>

namespace lc {

RidgeFields ridge_fields(const ShapeJets& s, const Tolerances& tol) {
    const int dlow = s.a.degree() - 1;
    const Jet a = truncated(s.a, dlow);
    const Jet b = truncated(s.b, dlow);
    const Jet c = truncated(s.c, dlow);
    const Jet d = truncated(s.d, dlow);
    const Jet au = diff(s.a, Axis::u);
    const Jet av = diff(s.a, Axis::v);
    const Jet bv = diff(s.b, Axis::v);
    const Jet cu = diff(s.c, Axis::u);
    const Jet du = diff(s.d, Axis::u);
    const Jet dv = diff(s.d, Axis::v);

    const Jet amd = a - d;
    RidgeFields r{
        amd * au + c * dv + 2.0 * (c * av) + b * cu,
        amd * amd * au + amd * (2.0 * (c * av) - c * dv + b * cu) +
            2.0 * (c * (2.0 * (b * du) + b * au + c * bv)),
        Jet{}, std::nullopt, std::nullopt};
    r.G = r.A * r.A * truncated(s.delta, dlow) - r.B * r.B;

    const double delta0 = s.delta.value();
    if (delta0 > tol.eps_delta * s.delta_scale()) {
        const double root = std::sqrt(delta0);
        r.g1 = r.A.value() * root + r.B.value();
        r.g2 = r.B.value() - r.A.value() * root;
    }
    return r;
}

RidgeFields ridge_fields_at(const LineCongruence& c, Vec2 p, int degree) {
    return ridge_fields(c.shape_at(p, degree), c.tol());
}

const char* to_string(FoldedType t) {
    switch (t) {
    case FoldedType::saddle: return "saddle";
    case FoldedType::node: return "node";
    case FoldedType::focus: return "focus";
    case FoldedType::degenerate: return "degenerate";
    }
    return "?";
}

namespace {

void require_discriminant_normal_form(const ShapeJets& s, const Tolerances& tol) {
    const double scale = std::max(s.value().norm_inf(), 1e-30);
    const double d1 = std::max({std::abs(s.a.value() - s.d.value()), std::abs(s.b.value())});
    if (d1 > 1e-7 * scale)
        throw NotNormalized("expected a0 = d0 and b0 = 0 at a discriminant point");
    if (std::abs(s.c.value()) <= tol.eps_umbilic * scale)
        throw NotNormalized("expected c0 != 0 at a discriminant point");
    const double b01 = s.b.pd(0, 1);
    const double jet1 = std::max({std::abs(s.a.pd(1, 0)), std::abs(s.a.pd(0, 1)),
                                  std::abs(s.b.pd(1, 0)), std::abs(s.c.pd(1, 0)),
                                  std::abs(s.c.pd(0, 1)), std::abs(s.d.pd(0, 1)), 1e-30});
    if (std::abs(b01) > 1e-5 * std::max(jet1, scale))
        throw NotNormalized("expected b01 = 0 (singular discriminant point)");
}

} // namespace

DiscriminantReport discriminant_ridge_data(const ShapeJets& s, const Tolerances& tol) {
    require_discriminant_normal_form(s, tol);

    const double c0 = s.c.value();
    const double a01 = s.a.pd(0, 1);
    const double d01 = s.d.pd(0, 1);
    const double b20 = s.b.pd(2, 0);
    const double b02 = s.b.pd(0, 2);

    DiscriminantReport r;
    const double scale = std::max(s.value().norm_inf(), 1e-30);
    const double jet1 = std::max({std::abs(a01), std::abs(d01), std::abs(s.b.pd(1, 0)), 1e-30});

    if (std::abs(a01) <= tol.zero_rel * jet1)
        throw DegenerateData("discriminant_ridge_data: a01 vanishes, L undefined");

    r.L = Mat2{d01 - a01, 2.0 * c0, b20, 2.0 * a01 - d01} * (1.0 / a01);
    r.delta1 = (d01 - a01) * (2.0 * a01 - d01) - 2.0 * c0 * b20;
    r.delta2 = (2.0 * d01 - 3.0 * a01) * (2.0 * d01 - 3.0 * a01) + 8.0 * c0 * b02;

    const double tol1 = tol.zero_rel * std::max(jet1 * jet1, std::abs(c0) * std::abs(b20));
    const double tol2 = tol.zero_rel * std::max(jet1 * jet1, std::abs(c0) * std::abs(b02));
    if (std::abs(r.delta1) <= tol1 || std::abs(r.delta2) <= tol2)
        r.folded = FoldedType::degenerate;
    else if (r.delta1 < 0.0)
        r.folded = FoldedType::saddle;
    else
        r.folded = (r.delta2 > 0.0) ? FoldedType::node : FoldedType::focus;

    // separatrix slopes: 2 c0 beta^2 + (2 d01 - 3 a01) beta - b02 = 0
    if (r.delta2 >= 0.0) {
        const double qa = 2.0 * c0;
        const double qb = 2.0 * d01 - 3.0 * a01;
        const double root = std::sqrt(r.delta2);
        // numerically stable quadratic roots
        const double qsign = (qb >= 0.0) ? 1.0 : -1.0;
        const double big = -0.5 * (qb + qsign * root);
        double r1, r2;
        if (big != 0.0) {
            r1 = big / qa;
            r2 = -b02 / big;
        } else {
            r1 = 0.0;
            r2 = -qb / qa;
        }
        r.separatrices = {std::min(r1, r2), std::max(r1, r2)};
        if (r.delta2 == 0.0) r.separatrices.pop_back();
    }

    r.A0 = c0 * (2.0 * a01 + d01);
    r.B1 = c0 * (a01 * (a01 - d01) + (a01 - d01) * (a01 - d01) + 2.0 * c0 * b02);
    r.Q = ((a01 - d01) * (a01 - d01) + 2.0 * c0 * b02) / (2.0 * a01 * c0);
    if (std::abs(r.A0) > tol.zero_rel * std::max(std::abs(c0) * jet1, scale * jet1))
        r.alpha = r.B1 * r.B1 / (2.0 * c0 * a01 * r.A0 * r.A0) - r.Q;
    return r;
}

ContactResult ridge_separatrix_contact(const ShapeJets& s, const Tolerances& tol) {
    require_discriminant_normal_form(s, tol);
    const double c0 = s.c.value();
    const double a01 = s.a.pd(0, 1);
    const double d01 = s.d.pd(0, 1);
    const double b02 = s.b.pd(0, 2);

    ContactResult r;
    r.indicator = 3.0 * a01 * d01 - c0 * b02;
    const double scale =
        std::max({std::abs(a01 * d01), std::abs(c0 * b02), std::abs(a01 * a01), 1e-30});
    r.flat = std::abs(r.indicator) <= tol.zero_rel * scale;
    return r;
}

} // namespace lc
