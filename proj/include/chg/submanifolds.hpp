#pragma once

#include "chg/isometry.hpp"

namespace chg {

/// Totally geodesic copy of the disc cut out by a positive polar vector:
/// the line is { p on the closed ball : <p, polar> = 0 }.
struct ComplexLine {
    Vector3 polar;  // exterior, unit Hermitian norm

    /// Normalizes to <polar,polar> = 1; rejects non-exterior vectors.
    static ComplexLine from_polar(const Vector3& v, double eps = kEpsPoint);
};

/// Totally real plane represented by its antiholomorphic involution
/// p -> M * conj(p); the plane is the projective fixed set. The standard
/// plane (both coordinates real) has M = identity.
struct LagrangianPlane {
    Matrix3 involution;

    /// Checks M*conj(M) = I, that M preserves the form antiholomorphically
    /// (equivalently M^* J M = J), and that the fixed set meets the interior.
    static LagrangianPlane from_involution(const Matrix3& m, double eps = kEpsGroup);

    /// An interior point of the plane (deterministic construction).
    ProjectivePoint interior_point(double eps = kEpsPoint) const;
};

ComplexLine standard_complex_line();    // polar (0,1,0)
LagrangianPlane standard_lagrangian();  // identity involution

bool line_contains(const ComplexLine& l, const ProjectivePoint& p,
                   double eps = kEpsMembership);

bool lagrangian_contains(const LagrangianPlane& pl, const ProjectivePoint& p,
                         double eps = kEpsMembership);

/// Image line under q. Because q preserves the form, the polar transports by
/// the plain matrix action: <q p, q polar> = <p, polar>. (The orthogonality
/// identity is pinned by a unit test rather than assumed.)
ComplexLine push_line(const GroupElement& q, const ComplexLine& l);

/// Image plane under q: involution becomes q M conj(q)^-1, so fixed sets
/// map by q.
LagrangianPlane push_lagrangian(const GroupElement& q, const LagrangianPlane& pl);

/// Real validated elements automatically preserve the standard real plane.
bool is_in_SO21(const GroupElement& m, double eps = kEpsMembership);

/// Zero pattern [a 0 c; 0 e 0; g 0 j]: the stabilizer of the line with
/// polar (0,1,0).
bool is_block_line_stabilizer(const GroupElement& m, double eps = kEpsMembership);

/// Whether m maps l to itself (polar vectors projectively equal).
bool line_stabilizer_check(const GroupElement& m, const ComplexLine& l,
                           double eps = kEpsMembership);

/// Projective distance between polar directions (max coordinate deviation
/// after normalization); used by certification.
double line_projective_defect(const ComplexLine& a, const ComplexLine& b);

}  // namespace chg
