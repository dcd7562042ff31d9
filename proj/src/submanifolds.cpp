#include "chg/submanifolds.hpp"

#include <cmath>

namespace chg {

ComplexLine ComplexLine::from_polar(const Vector3& v, double eps) {
    if (classify_point(v, eps) != PointClass::Exterior)
        throw Error("polar vector of a complex line must be exterior");
    const double n = hermitian_form(v, v).real();
    return ComplexLine{v / Cx{std::sqrt(n)}};
}

LagrangianPlane LagrangianPlane::from_involution(const Matrix3& m, double eps) {
    if (max_abs_diff(m * m.conjugated_entries(), Matrix3::identity()) > eps)
        throw Error("involution does not square to the identity");
    const Matrix3 j = form_matrix();
    if (max_abs_diff(m.conj_transpose() * j * m, j) > eps)
        throw Error("involution does not preserve the Hermitian form");
    LagrangianPlane pl{m};
    pl.interior_point();  // throws when the fixed set misses the ball
    return pl;
}

ProjectivePoint LagrangianPlane::interior_point(double eps) const {
    // For interior p and iota(p) = M conj(p), the combination
    // e^{it} p + iota(e^{it} p) is exactly fixed by iota, and the phase can
    // always be chosen to push the combination inside the ball:
    // <q,q> = 2<p,p> + 2 Re(e^{2it} <p, iota p>) <= 2<p,p> < 0.
    const Vector3 p{Cx{-1}, Cx{0}, Cx{1}};
    const Vector3 ip = involution * conj(p);
    const Cx cross = hermitian_form(p, ip);
    Cx phase{1};
    if (std::abs(cross) > 0.0) {
        // Choose e^{2it} = -conj(cross)/|cross|.
        const Cx target = -std::conj(cross) / std::abs(cross);
        phase = std::exp(Cx{0, std::arg(target) / 2.0});
    }
    const Vector3 q = p * phase + involution * conj(p * phase);
    if (q.max_abs() <= eps || classify_point(q, eps) != PointClass::Interior)
        throw Error("fixed set of the involution does not meet the interior");
    return ProjectivePoint::from_vector(q, eps);
}

ComplexLine standard_complex_line() {
    return ComplexLine{Vector3{Cx{0}, Cx{1}, Cx{0}}};
}

LagrangianPlane standard_lagrangian() {
    return LagrangianPlane{Matrix3::identity()};
}

bool line_contains(const ComplexLine& l, const ProjectivePoint& p, double eps) {
    const Vector3 n = normalize_representative(p.rep);
    return std::abs(hermitian_form(n, l.polar)) <= eps;
}

bool lagrangian_contains(const LagrangianPlane& pl, const ProjectivePoint& p, double eps) {
    const Vector3 image = pl.involution * conj(p.rep);
    return projectively_equal(image, p.rep, eps);
}

ComplexLine push_line(const GroupElement& q, const ComplexLine& l) {
    return ComplexLine{q.matrix() * l.polar};  // already unit norm: q is unitary
}

LagrangianPlane push_lagrangian(const GroupElement& q, const LagrangianPlane& pl) {
    const Matrix3 qc_inv = q.inverse().matrix().conjugated_entries();
    return LagrangianPlane{q.matrix() * pl.involution * qc_inv};
}

bool is_in_SO21(const GroupElement& m, double eps) {
    return m.matrix().max_abs_imag() <= eps;
}

bool is_block_line_stabilizer(const GroupElement& m, double eps) {
    return std::abs(m.b()) <= eps && std::abs(m.d()) <= eps &&
           std::abs(m.f()) <= eps && std::abs(m.h()) <= eps;
}

bool line_stabilizer_check(const GroupElement& m, const ComplexLine& l, double eps) {
    return projectively_equal(push_line(m, l).polar, l.polar, eps);
}

double line_projective_defect(const ComplexLine& a, const ComplexLine& b) {
    return projective_defect(a.polar, b.polar);
}

}  // namespace chg
