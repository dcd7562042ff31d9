#include "chg/fixtures.hpp"

#include <cmath>

namespace chg::fixtures {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

GroupElement standard_loxodromic() {
    return GroupElement::validate(Matrix3::diagonal(Cx{2}, Cx{1}, Cx{0.5}));
}

GroupElement real_generator() {
    Matrix3 m;
    m.e = {Cx{0.5}, Cx{0.5},  Cx{-0.25},
           Cx{-1},  Cx{0},    Cx{-0.5},
           Cx{-1},  Cx{1},    Cx{0.5}};
    return GroupElement::validate(m);
}

GroupElement block_generator() {
    Matrix3 m;
    m.e = {Cx{1.25},     Cx{0}, Cx{0, 0.75},
           Cx{0},        Cx{1}, Cx{0},
           Cx{0, -0.75}, Cx{0}, Cx{1.25}};
    return GroupElement::validate(m);
}

GroupElement antidiagonal_swap() {
    Matrix3 m;
    m.e = {Cx{0}, Cx{0}, Cx{-1},
           Cx{0}, Cx{-1}, Cx{0},
           Cx{-1}, Cx{0}, Cx{0}};
    return GroupElement::validate(m);
}

GroupElement unipotent_parabolic() {
    Matrix3 m;
    m.e = {Cx{1}, Cx{-1}, Cx{-0.5},
           Cx{0}, Cx{1},  Cx{1},
           Cx{0}, Cx{0},  Cx{1}};
    return GroupElement::validate(m);
}

GroupElement vertical_translation(double y) {
    Matrix3 m;
    m.e = {Cx{1},            Cx{0},  Cx{0},
           Cx{y},            Cx{1},  Cx{0},
           Cx{-y * y / 2.0}, Cx{-y}, Cx{1}};
    return GroupElement::validate(m);
}

GroupElement nonreal_trace_element() {
    return GroupElement::validate(Matrix3::diagonal(Cx{0, 1}, Cx{-1}, Cx{0, 1}));
}

GroupElement torus_element(Cx u) {
    return GroupElement::validate(Matrix3::diagonal(u, Cx{1} / (u * u), u));
}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::range(double lo, double hi) { return lo + (hi - lo) * unit(); }

int Rng::pick(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

Cx Rng::unit_phase() {
    const double t = kTau * unit();
    return Cx{std::cos(t), std::sin(t)};
}

GroupElement random_torus(Rng& rng) { return torus_element(rng.unit_phase()); }

GroupElement random_element(Rng& rng, int length) {
    const GroupElement pool[4] = {standard_loxodromic(), real_generator(),
                                  block_generator(), antidiagonal_swap()};
    GroupElement m = random_torus(rng);
    for (int i = 0; i < length; ++i) {
        m = m * pool[rng.pick(4)];
        m = m * random_torus(rng);
    }
    return m;
}

ProjectivePoint random_boundary_point(Rng& rng) {
    const Cx z2{rng.range(-1.5, 1.5), rng.range(-1.5, 1.5)};
    const Cx z1{-std::norm(z2) / 2.0, rng.range(-1.5, 1.5)};
    return ProjectivePoint::from_finite({z1, z2});
}

ProjectivePoint random_interior_point(Rng& rng) {
    const Cx z2{rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)};
    const double margin = rng.range(0.1, 2.0);
    const Cx z1{-(std::norm(z2) + margin) / 2.0, rng.range(-1.5, 1.5)};
    return ProjectivePoint::from_finite({z1, z2});
}

std::vector<ProjectivePoint> boundary_triple_on_line(Rng& rng) {
    // Boundary points of the line z2 = 0 have purely imaginary z1.
    std::vector<ProjectivePoint> pts;
    while (pts.size() < 3) {
        const ProjectivePoint p =
            ProjectivePoint::from_finite({Cx{0.0, rng.range(-2.0, 2.0)}, Cx{0}});
        bool dup = false;
        for (const ProjectivePoint& q : pts)
            if (projectively_equal(p, q, 1e-6)) dup = true;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

std::vector<ProjectivePoint> boundary_triple_on_lagrangian(Rng& rng) {
    std::vector<ProjectivePoint> pts;
    while (pts.size() < 3) {
        const double x2 = rng.range(-1.5, 1.5);
        const ProjectivePoint p =
            ProjectivePoint::from_finite({Cx{-x2 * x2 / 2.0}, Cx{x2}});
        bool dup = false;
        for (const ProjectivePoint& q : pts)
            if (projectively_equal(p, q, 1e-6)) dup = true;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

LabeledMatrices fixture_presentation(FixtureKind kind, std::uint64_t seed, int count,
                                     double near_miss_delta) {
    Rng rng(seed);
    const GroupElement base[2] = {
        standard_loxodromic(),
        kind == FixtureKind::CFuchsian ? block_generator() : real_generator()};
    const GroupElement q = random_element(rng);
    const GroupElement q_inv = q.inverse();

    LabeledMatrices out;
    out.tol_grp = kEpsGroup;
    if (count < 2) count = 2;
    for (int i = 0; i < count; ++i) {
        GroupElement w = base[i % 2];
        if (i >= 2) {
            // Extra generators are short random words in the base pair.
            const int len = 1 + rng.pick(3);
            for (int k = 0; k < len; ++k) w = w * base[rng.pick(2)];
        }
        const GroupElement g = q * w * q_inv;
        out.generators.emplace_back(std::string(1, static_cast<char>('a' + i)),
                                    g.matrix());
    }

    if (kind == FixtureKind::NearMiss) {
        // Bump one entry off the group by a pure-imaginary delta. The file
        // must still parse and validate, so the tolerance is relaxed to fit
        // the measured residual; the detector's certification runs much
        // tighter and must refuse.
        const int gi = rng.pick(static_cast<int>(out.generators.size()));
        const int entry = rng.pick(9);
        Matrix3& m = out.generators[static_cast<size_t>(gi)].second;
        m.e[entry] += Cx{0, near_miss_delta};
        out.tol_grp = std::max({1e-2, 3.0 * identity_grid_residual(m),
                                3.0 * std::abs(m.det() - Cx{1})});
    }
    return out;
}

}  // namespace chg::fixtures
