#pragma once

#include <vector>

#include "chg/eigen3.hpp"
#include "chg/hermitian.hpp"
#include "chg/types.hpp"

namespace chg {

struct NotUnitary : Error {
    explicit NotUnitary(double residual)
        : Error("matrix does not preserve the Hermitian form (residual " +
                std::to_string(residual) + ")"),
          residual(residual) {}
    double residual;
};

struct BadDeterminant : Error {
    explicit BadDeterminant(Cx det)
        : Error("determinant is not 1"), det(det) {}
    Cx det;  // reported so the caller may normalize
};

/// Max residual over the twelve entry identities equivalent to
/// M^* J M = J for the grid
///   [a b c; d e f; g h j].
double identity_grid_residual(const Matrix3& m);

/// A validated element of SU(2,1). Construction goes through validate() or
/// normalize_to_su21(); products, inverses and conjugations of validated
/// elements stay within the class without re-checking (the identity-grid
/// residual grows roughly with the product of entry magnitudes, so long
/// words should be re-validated by the caller when it matters).
class GroupElement {
public:
    /// Checks det = 1 first (reporting the determinant for normalization),
    /// then the identity grid.
    static GroupElement validate(const Matrix3& m, double eps = kEpsGroup);

    /// Divide by a principal cube root of det(M), then validate.
    static GroupElement normalize_to_su21(const Matrix3& m, double eps = kEpsGroup);

    static GroupElement identity() { return GroupElement(Matrix3::identity()); }

    const Matrix3& matrix() const { return m_; }

    // Entry grid a..j.
    Cx a() const { return m_(0, 0); }
    Cx b() const { return m_(0, 1); }
    Cx c() const { return m_(0, 2); }
    Cx d() const { return m_(1, 0); }
    Cx e() const { return m_(1, 1); }
    Cx f() const { return m_(1, 2); }
    Cx g() const { return m_(2, 0); }
    Cx h() const { return m_(2, 1); }
    Cx j() const { return m_(2, 2); }

    Cx trace() const { return m_.trace(); }

    /// Closed-form inverse: conjugate-flip of the entry grid.
    GroupElement inverse() const;

    bool is_identity(double eps = kEpsEigen) const {
        return max_abs_diff(m_, Matrix3::identity()) <= eps;
    }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        return GroupElement(x.m_ * y.m_);
    }

private:
    explicit GroupElement(const Matrix3& m) : m_(m) {}
    Matrix3 m_;
};

inline Cx trace(const GroupElement& m) { return m.trace(); }

inline bool is_real_trace(const GroupElement& m, double eps_tr = kEpsTrace) {
    return std::abs(m.trace().imag()) <= eps_tr;
}

/// Q^-1 M Q.
inline GroupElement conjugate(const GroupElement& m, const GroupElement& q) {
    return q.inverse() * m * q;
}

/// Projective action; the point class is preserved.
ProjectivePoint apply(const GroupElement& m, const ProjectivePoint& p,
                      double eps = kEpsPoint);

enum class IsometryClass { Loxodromic, Parabolic, Elliptic };

const char* to_string(IsometryClass c);

struct EigenPair {
    Cx value;
    Vector3 vector;
};

/// Eigen-structure sorted by descending eigenvalue modulus. `defective` is
/// set when some eigenvalue's eigenspace is smaller than its multiplicity
/// (smallest singular value of the eigenvector matrix at most 1e-6).
struct EigenStructure {
    std::array<EigenPair, 3> pairs;
    bool defective;
};

EigenStructure eigen(const GroupElement& m, double eps = kEpsEigen);

struct Classification {
    IsometryClass kind;
    bool is_identity;
};

/// Loxodromic iff some eigenvalue modulus exceeds 1 + eps; otherwise
/// elliptic when diagonalizable and parabolic when defective. The identity
/// is reported elliptic with the flag set.
Classification classify(const GroupElement& m, double eps = kEpsEigen);

/// Projectivized eigenvectors with their point classes, attracting end
/// first, projective duplicates removed. A two-dimensional eigenspace
/// spanned by two boundary directions additionally contributes an interior
/// fixed point (the pencil between two null lines always meets the ball).
std::vector<ProjectivePoint> fixed_points(const GroupElement& m, double eps = kEpsEigen);

}  // namespace chg
