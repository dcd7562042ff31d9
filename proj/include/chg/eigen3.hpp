#pragma once

#include <array>

#include "chg/types.hpp"

namespace chg {

/// Roots of lambda^3 - c2*lambda^2 + c1*lambda - c0 over C (Cardano on the
/// depressed cubic, branch chosen to avoid cancellation), followed by one
/// Newton step per root. Order is unspecified.
std::array<Cx, 3> cubic_roots(Cx c2, Cx c1, Cx c0);

/// Radius below which computed roots cannot be told apart. A triple root of
/// a cubic with relatively perturbed coefficients (delta ~ 1e-12 after a
/// conjugation or two) spreads like delta^(1/3), so the floor sits at 1e-3
/// regardless of how small eps is.
inline double root_cluster_tolerance(double eps, double scale) {
    return std::max(10.0 * eps, 1e-3) * std::max(1.0, scale);
}

struct EigenDecomposition {
    std::array<Cx, 3> values;       // sorted by descending modulus
    std::array<Vector3, 3> vectors; // unit Euclidean norm, matched to values
    bool defective;                 // geometric multiplicity deficit somewhere
};

/// Full eigen-structure of a 3x3 complex matrix. Eigenvalues within
/// 10*eps of each other are treated as a cluster and a kernel basis of the
/// clustered eigenspace is extracted jointly, so a semi-simple repeated
/// eigenvalue yields independent vectors while a genuinely defective one
/// repeats its vector and sets the flag.
EigenDecomposition eigen_decompose(const Matrix3& m, double eps);

/// Smallest singular value (via eigenvalues of m^* m).
double smallest_singular_value(const Matrix3& m);

/// One inverse-iteration step for a simple eigenvalue: solve
/// (m - lambda*I) w = v with partial pivoting (zero pivots nudged), return
/// w normalized. Falls back to v when the solve degenerates.
Vector3 refine_eigenvector(const Matrix3& m, Cx lambda, const Vector3& v);

}  // namespace chg
