#include "chg/invariants.hpp"

#include <cmath>

namespace chg {

namespace {

// Normalized lifts make every pairing threshold scale free.
Vector3 norm_lift(const ProjectivePoint& p) { return normalize_representative(p.rep); }

}  // namespace

CartanValue cartan_invariant(const ProjectivePoint& p1, const ProjectivePoint& p2,
                             const ProjectivePoint& p3, double eps) {
    const Vector3 z1 = norm_lift(p1), z2 = norm_lift(p2), z3 = norm_lift(p3);
    if (projectively_equal(z1, z2, eps) || projectively_equal(z2, z3, eps) ||
        projectively_equal(z1, z3, eps))
        throw DegenerateTriple();
    const Cx h12 = hermitian_form(z1, z2);
    const Cx h23 = hermitian_form(z2, z3);
    const Cx h31 = hermitian_form(z3, z1);
    if (std::abs(h12) <= eps || std::abs(h23) <= eps || std::abs(h31) <= eps)
        throw DegenerateTriple();
    return CartanValue{std::arg(-h12 * h23 * h31)};
}

Cx kr_cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                  const ProjectivePoint& p3, const ProjectivePoint& p4,
                  double eps) {
    const ProjectivePoint* pts[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            if (projectively_equal(pts[i]->rep, pts[k]->rep, eps))
                throw DegenerateQuadruple();
    const Vector3 z1 = norm_lift(p1), z2 = norm_lift(p2), z3 = norm_lift(p3),
                  z4 = norm_lift(p4);
    const Cx den = hermitian_form(z4, z1) * hermitian_form(z3, z2);
    if (std::abs(den) <= eps) throw DegenerateQuadruple();
    return hermitian_form(z3, z1) * hermitian_form(z4, z2) / den;
}

CrossRatioTriple pp_cross_ratios(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                 const ProjectivePoint& p3, const ProjectivePoint& p4,
                                 double eps) {
    return CrossRatioTriple{
        kr_cross_ratio(p1, p2, p3, p4, eps),
        kr_cross_ratio(p1, p3, p2, p4, eps),
        kr_cross_ratio(p2, p3, p1, p4, eps),
    };
}

const char* to_string(CoplanarityKind k) {
    switch (k) {
        case CoplanarityKind::ComplexLine: return "complex-line";
        case CoplanarityKind::Lagrangian: return "lagrangian";
        case CoplanarityKind::Neither: return "neither";
    }
    return "?";
}

CoplanarityVerdict coplanarity_test(const ProjectivePoint& p1, const ProjectivePoint& p2,
                                    const ProjectivePoint& p3, const ProjectivePoint& p4,
                                    double eps_cop, double eps_pt) {
    const CrossRatioTriple x = pp_cross_ratios(p1, p2, p3, p4, eps_pt);

    CoplanarityVerdict v;
    v.ratios = x;
    v.max_imag = 0.0;
    for (const Cx* xi : {&x.x1, &x.x2, &x.x3})
        v.max_imag = std::max(v.max_imag, std::abs(xi->imag()) / (1.0 + std::abs(*xi)));

    if (std::abs(x.x1) < 1e-100) throw DegenerateQuadruple();
    const Cx ratio = x.x2 / x.x1;
    v.complex_line_defect = std::abs(x.x3 + ratio);
    v.lagrangian_defect = std::abs(x.x3 - ratio);

    if (v.max_imag > eps_cop) {
        v.kind = CoplanarityKind::Neither;
        return v;
    }
    const double scale = eps_cop * (1.0 + std::abs(x.x3) + std::abs(ratio));
    const bool line_ok = v.complex_line_defect <= scale;
    const bool lagrangian_ok = v.lagrangian_defect <= scale;
    if (line_ok && lagrangian_ok)
        throw AmbiguousCoplanarity(v.complex_line_defect, v.lagrangian_defect);
    v.kind = line_ok ? CoplanarityKind::ComplexLine
                     : (lagrangian_ok ? CoplanarityKind::Lagrangian
                                      : CoplanarityKind::Neither);
    return v;
}

}  // namespace chg
