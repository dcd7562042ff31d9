#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chg/isometry.hpp"

namespace chg::fixtures {

/// diag(2, 1, 1/2): loxodromic, fixes 0 and infinity.
GroupElement standard_loxodromic();

/// Real element of SO(2,1): [1/2 1/2 -1/4; -1 0 -1/2; -1 1 1/2].
GroupElement real_generator();

/// Block element of S(U(1) x U(1,1)) stabilizing the standard complex line:
/// [5/4 0 3i/4; 0 1 0; -3i/4 0 5/4].
GroupElement block_generator();

/// Anti-diagonal swap exchanging 0 and infinity: -J.
GroupElement antidiagonal_swap();

/// Unipotent parabolic [1 -1 -1/2; 0 1 1; 0 0 1] fixing only infinity.
GroupElement unipotent_parabolic();

/// Real unipotent [1 0 0; y 1 0; -y^2/2 -y 1] (b = 0, d = y).
GroupElement vertical_translation(double y);

/// Elliptic diag(i, -1, i) with non-real trace.
GroupElement nonreal_trace_element();

/// diag(u, u^-2, u) for |u| = 1; commutes with every diagonal element.
GroupElement torus_element(Cx u);

/// Deterministic uniform source. std::mt19937_64 itself is fully specified
/// by the standard; the distributions are hand rolled because the standard
/// ones are implementation defined and golden tests depend on the stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit();                      // [0, 1)
    double range(double lo, double hi);
    int pick(int n);                    // {0, ..., n-1}
    Cx unit_phase();                    // e^{i t}, t uniform in [0, 2pi)

private:
    std::mt19937_64 engine_;
};

GroupElement random_torus(Rng& rng);

/// Generic validated element: alternating product of fixture generators and
/// torus factors. Entry growth is bounded by keeping the word short.
GroupElement random_element(Rng& rng, int length = 5);

ProjectivePoint random_boundary_point(Rng& rng);
ProjectivePoint random_interior_point(Rng& rng);

/// Three boundary points on the standard complex line (z2 = 0).
std::vector<ProjectivePoint> boundary_triple_on_line(Rng& rng);

/// Three boundary points on the standard real plane.
std::vector<ProjectivePoint> boundary_triple_on_lagrangian(Rng& rng);

/// A labeled generator list for building detector inputs.
struct LabeledMatrices {
    std::vector<std::pair<std::string, Matrix3>> generators;
    double tol_grp;  // validation tolerance the file should request
};

enum class FixtureKind { RFuchsian, CFuchsian, NearMiss };

/// Presentations for detector round-trips: random words in
/// {standard_loxodromic, real_generator} (or block_generator for the C
/// kind), conjugated by a seeded random validated element. The near-miss
/// kind perturbs one entry of one generator by i*delta and relaxes the
/// validation tolerance so the defect is caught by certification, never by
/// the parser.
LabeledMatrices fixture_presentation(FixtureKind kind, std::uint64_t seed,
                                     int count = 2, double near_miss_delta = 1e-3);

}  // namespace chg::fixtures
