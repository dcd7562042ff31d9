#include "chg/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace chg {

double identity_grid_residual(const Matrix3& m) {
    const Cx a = m(0, 0), b = m(0, 1), c = m(0, 2);
    const Cx d = m(1, 0), e = m(1, 1), f = m(1, 2);
    const Cx g = m(2, 0), h = m(2, 1), j = m(2, 2);
    const auto cj = [](Cx z) { return std::conj(z); };
    const Cx one{1};
    const Cx res[12] = {
        a * cj(j) + b * cj(h) + c * cj(g) - one,
        a * cj(f) + b * cj(e) + c * cj(d),
        a * cj(c) + b * cj(b) + c * cj(a),
        d * cj(j) + e * cj(h) + f * cj(g),
        d * cj(f) + e * cj(e) + f * cj(d) - one,
        g * cj(j) + h * cj(h) + j * cj(g),
        a * cj(j) + d * cj(f) + g * cj(c) - one,
        b * cj(j) + e * cj(f) + h * cj(c),
        c * cj(j) + f * cj(f) + j * cj(c),
        a * cj(h) + d * cj(e) + g * cj(b),
        b * cj(h) + e * cj(e) + h * cj(b) - one,
        a * cj(g) + d * cj(d) + g * cj(a),
    };
    double worst = 0.0;
    for (const Cx& r : res) worst = std::max(worst, std::abs(r));
    return worst;
}

GroupElement GroupElement::validate(const Matrix3& m, double eps) {
    const Cx det = m.det();
    if (std::abs(det - Cx{1}) > eps) throw BadDeterminant(det);
    const double res = identity_grid_residual(m);
    if (res > eps) throw NotUnitary(res);
    return GroupElement(m);
}

GroupElement GroupElement::normalize_to_su21(const Matrix3& m, double eps) {
    const Cx det = m.det();
    if (std::abs(det) < 1e-300) throw NotUnitary(1.0);
    const Cx root = std::exp(std::log(det) / 3.0);  // principal cube root
    const Matrix3 scaled = m * (Cx{1} / root);
    const double res = identity_grid_residual(scaled);
    if (res > eps) throw NotUnitary(res);
    return GroupElement(scaled);
}

GroupElement GroupElement::inverse() const {
    Matrix3 r;
    r(0, 0) = std::conj(j()); r(0, 1) = std::conj(f()); r(0, 2) = std::conj(c());
    r(1, 0) = std::conj(h()); r(1, 1) = std::conj(e()); r(1, 2) = std::conj(b());
    r(2, 0) = std::conj(g()); r(2, 1) = std::conj(d()); r(2, 2) = std::conj(a());
    return GroupElement(r);
}

ProjectivePoint apply(const GroupElement& m, const ProjectivePoint& p, double eps) {
    return ProjectivePoint::from_vector(m.matrix() * p.rep, eps);
}

const char* to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::Loxodromic: return "loxodromic";
        case IsometryClass::Parabolic: return "parabolic";
        case IsometryClass::Elliptic: return "elliptic";
    }
    return "?";
}

EigenStructure eigen(const GroupElement& m, double eps) {
    const EigenDecomposition d = eigen_decompose(m.matrix(), eps);
    EigenStructure s;
    for (int i = 0; i < 3; ++i) s.pairs[i] = {d.values[i], d.vectors[i]};
    bool defective = d.defective;
    if (!defective) {
        const Matrix3 v = Matrix3::from_columns(d.vectors[0], d.vectors[1], d.vectors[2]);
        defective = smallest_singular_value(v) <= 1e-6;
    }
    s.defective = defective;
    return s;
}

Classification classify(const GroupElement& m, double eps) {
    if (m.is_identity(eps)) return {IsometryClass::Elliptic, true};
    const EigenStructure s = eigen(m, eps);
    // The top root is trusted only when isolated: clustered roots carry the
    // multiple-root noise floor and a conjugated parabolic can show
    // |lambda| = 1 + 1e-5 without being loxodromic.
    const Cx top = s.pairs[0].value;
    const double isolation = std::min(std::abs(top - s.pairs[1].value),
                                      std::abs(top - s.pairs[2].value));
    if (std::abs(top) > 1.0 + eps &&
        isolation > root_cluster_tolerance(eps, std::abs(top)))
        return {IsometryClass::Loxodromic, false};
    if (!s.defective) return {IsometryClass::Elliptic, false};
    return {IsometryClass::Parabolic, false};
}

std::vector<ProjectivePoint> fixed_points(const GroupElement& m, double eps) {
    const EigenStructure s = eigen(m, eps);
    std::vector<ProjectivePoint> pts;
    for (const EigenPair& p : s.pairs) {
        if (p.vector.max_abs() == 0.0) continue;
        bool dup = false;
        for (const ProjectivePoint& q : pts)
            if (projectively_equal(q.rep, p.vector, 1e-8)) { dup = true; break; }
        if (!dup) pts.push_back(ProjectivePoint::from_vector(p.vector, eps));
    }
    // A repeated eigenvalue whose eigenspace contains two boundary
    // directions fixes the whole pencil between them; the combination
    // k1 + beta*k2 with beta = -p/|p|, p = <k1,k2>, lies inside the ball.
    const double cluster_tol =
        root_cluster_tolerance(eps, std::abs(s.pairs[0].value));
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        for (size_t k = i + 1; k < s.pairs.size(); ++k) {
            if (std::abs(s.pairs[i].value - s.pairs[k].value) > cluster_tol) continue;
            const Vector3& k1 = s.pairs[i].vector;
            const Vector3& k2 = s.pairs[k].vector;
            if (projectively_equal(k1, k2, 1e-8)) continue;
            try {
                if (classify_point(k1, eps) != PointClass::Boundary) continue;
                if (classify_point(k2, eps) != PointClass::Boundary) continue;
            } catch (const ZeroVector&) {
                continue;
            }
            const Cx p = hermitian_form(k1, k2);
            if (std::abs(p) <= eps) continue;
            const Vector3 interior = k1 - k2 * (p / std::abs(p));
            bool dup = false;
            for (const ProjectivePoint& q : pts)
                if (projectively_equal(q.rep, interior, 1e-8)) { dup = true; break; }
            if (!dup) pts.push_back(ProjectivePoint::from_vector(interior, eps));
        }
    }
    return pts;
}

}  // namespace chg
