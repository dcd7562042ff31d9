#pragma once

#include <optional>

#include "chg/types.hpp"

namespace chg {

// Default tolerances. Point classification is applied after normalizing the
// representative to unit max-magnitude coordinate, so these are scale free.
inline constexpr double kEpsPoint = 1e-9;
inline constexpr double kEpsGroup = 1e-9;
inline constexpr double kEpsEigen = 1e-8;
inline constexpr double kEpsTrace = 1e-8;
inline constexpr double kEpsMembership = 1e-8;
inline constexpr double kEpsCert = 1e-8;
inline constexpr double kEpsCoplanarity = 1e-7;

struct ZeroVector : Error {
    ZeroVector() : Error("zero vector is not a projective representative") {}
};

struct NotInterior : Error {
    NotInterior() : Error("operation requires interior points") {}
};

/// Signature-(2,1) Hermitian pairing:
///   <z,w> = z1*conj(w3) + z2*conj(w2) + z3*conj(w1).
/// Conjugate symmetric; real on the diagonal.
inline Cx hermitian_form(const Vector3& z, const Vector3& w) {
    return z.v1 * std::conj(w.v3) + z.v2 * std::conj(w.v2) + z.v3 * std::conj(w.v1);
}

/// The Gram matrix of the pairing (anti-diagonal ones): <z,w> = w^* J z.
inline Matrix3 form_matrix() {
    Matrix3 j;
    j.e = {Cx{0}, Cx{0}, Cx{1}, Cx{0}, Cx{1}, Cx{0}, Cx{1}, Cx{0}, Cx{0}};
    return j;
}

/// Finite point in non-homogeneous coordinates.
struct FinitePoint {
    Cx z1{}, z2{};
};

/// Standard lift (z1, z2, 1).
inline Vector3 standard_lift(const FinitePoint& p) { return {p.z1, p.z2, Cx{1}}; }

/// The distinguished boundary point at infinity, lift (1, 0, 0).
inline Vector3 infinity_lift() { return {Cx{1}, Cx{0}, Cx{0}}; }

enum class PointClass { Interior, Boundary, Exterior };

const char* to_string(PointClass c);

/// Sign classification of <v,v> after rescaling v to unit max coordinate.
/// Throws ZeroVector when every coordinate is below eps in magnitude.
PointClass classify_point(const Vector3& v, double eps = kEpsPoint);

/// A point of CP^2 tagged with its position relative to the ball.
/// Representatives differing by a nonzero scalar compare equal.
struct ProjectivePoint {
    Vector3 rep;
    PointClass cls;

    static ProjectivePoint from_vector(const Vector3& v, double eps = kEpsPoint) {
        return {v, classify_point(v, eps)};
    }
    static ProjectivePoint from_finite(const FinitePoint& p, double eps = kEpsPoint) {
        return from_vector(standard_lift(p), eps);
    }
    static ProjectivePoint infinity() { return {infinity_lift(), PointClass::Boundary}; }

    bool is_infinity(double tol = 1e-9) const;

    /// Dehomogenize; empty for the point at infinity.
    std::optional<FinitePoint> to_finite(double tol = 1e-12) const;
};

/// Scale so the largest-magnitude coordinate becomes exactly 1.
Vector3 normalize_representative(const Vector3& v);

/// Max coordinate deviation after pinning both vectors at the slot of a's
/// largest coordinate (1.0 when their mass sits in different slots).
double projective_defect(const Vector3& a, const Vector3& b);

/// Equality after normalizing the largest-magnitude coordinate to 1;
/// avoids phase ambiguity between lifts.
bool projectively_equal(const Vector3& a, const Vector3& b, double tol = 1e-9);

inline bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                               double tol = 1e-9) {
    return projectively_equal(a.rep, b.rep, tol);
}

/// Bergman distance between interior points, from
///   cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>).
/// The cosh^2 value is clamped up to 1 inside [1 - 1e-6, 1); anything lower
/// signals a non-interior input that slipped through and is an error.
double bergman_distance(const ProjectivePoint& z, const ProjectivePoint& w);

}  // namespace chg
