#include "chg/hermitian.hpp"

#include <cmath>

namespace chg {

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Interior: return "interior";
        case PointClass::Boundary: return "boundary";
        case PointClass::Exterior: return "exterior";
    }
    return "?";
}

PointClass classify_point(const Vector3& v, double eps) {
    const double m = v.max_abs();
    if (m <= eps) throw ZeroVector();
    const Vector3 u = v / Cx{m};
    const double s = hermitian_form(u, u).real();
    if (s < -eps) return PointClass::Interior;
    if (s > eps) return PointClass::Exterior;
    return PointClass::Boundary;
}

Vector3 normalize_representative(const Vector3& v) {
    const double m = v.max_abs();
    if (m == 0.0) throw ZeroVector();
    // Divide by the largest-magnitude coordinate itself (not its modulus) so
    // that coordinate becomes exactly 1 and the phase ambiguity disappears.
    Cx pivot = v.v1;
    double best = std::abs(v.v1);
    if (std::abs(v.v2) > best) { pivot = v.v2; best = std::abs(v.v2); }
    if (std::abs(v.v3) > best) { pivot = v.v3; }
    return v / pivot;
}

double projective_defect(const Vector3& a, const Vector3& b) {
    // Both vectors are pinned at the same slot: the largest coordinate of a.
    // Choosing the pivot per vector would be unstable when two coordinates
    // tie in magnitude, which happens structurally for involution-fixed
    // points.
    const double ma = a.max_abs(), mb = b.max_abs();
    if (ma == 0.0 || mb == 0.0) throw ZeroVector();
    int pivot = 0;
    double best = 0.0;
    for (int i = 0; i < 3; ++i)
        if (std::abs(a[i]) > best) { best = std::abs(a[i]); pivot = i; }
    if (std::abs(b[pivot]) < 0.5 * mb) return 1.0;  // mass in different slots
    const Vector3 na = a / a[pivot];
    const Vector3 nb = b / b[pivot];
    return (na - nb).max_abs();
}

bool projectively_equal(const Vector3& a, const Vector3& b, double tol) {
    return projective_defect(a, b) <= tol;
}

bool ProjectivePoint::is_infinity(double tol) const {
    return projectively_equal(rep, infinity_lift(), tol);
}

std::optional<FinitePoint> ProjectivePoint::to_finite(double tol) const {
    const Vector3 n = normalize_representative(rep);
    if (std::abs(n.v3) <= tol) return std::nullopt;
    return FinitePoint{n.v1 / n.v3, n.v2 / n.v3};
}

double bergman_distance(const ProjectivePoint& z, const ProjectivePoint& w) {
    if (z.cls != PointClass::Interior || w.cls != PointClass::Interior)
        throw NotInterior();
    const Cx zw = hermitian_form(z.rep, w.rep);
    const Cx zz = hermitian_form(z.rep, z.rep);
    const Cx ww = hermitian_form(w.rep, w.rep);
    // Numerator is |<z,w>|^2 and the denominator is a product of two negative
    // reals, so the ratio is real and (for interior points) at least 1.
    double r = (zw * std::conj(zw)).real() / (zz.real() * ww.real());
    if (r < 1.0 - 1e-6)
        throw NotInterior();
    if (r < 1.0) r = 1.0;
    return 2.0 * std::acosh(std::sqrt(r));
}

}  // namespace chg
