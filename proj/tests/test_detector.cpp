#include <cmath>

#include "chg/detector.hpp"
#include "chg/fixtures.hpp"
#include "doctest.h"

using namespace chg;
namespace fx = chg::fixtures;

namespace {

GroupPresentation presentation(std::initializer_list<std::pair<const char*, GroupElement>> gens) {
    std::vector<GroupPresentation::Generator> v;
    for (const auto& [label, el] : gens) v.push_back({label, el});
    return GroupPresentation::from(std::move(v));
}

GroupPresentation rc_pair() {
    return presentation({{"a", fx::standard_loxodromic()}, {"b", fx::real_generator()}});
}

GroupPresentation cc_pair() {
    return presentation({{"a", fx::standard_loxodromic()}, {"b", fx::block_generator()}});
}

GroupPresentation conjugated_pair(fx::FixtureKind kind, std::uint64_t seed) {
    const auto lm = fx::fixture_presentation(kind, seed);
    return GroupPresentation::from_matrices(lm.generators, lm.tol_grp);
}

// Raw re-multiplication of a witness word, no GroupElement machinery.
Matrix3 raw_evaluate(const GroupPresentation& p, const Word& w) {
    Matrix3 m = Matrix3::identity();
    for (const Word::Letter& l : w.letters) {
        Matrix3 g = p.generators[static_cast<size_t>(l.gen)].element.matrix();
        if (l.exp < 0) g = general_inverse(g);
        m = m * g;
    }
    return m;
}

}  // namespace

TEST_CASE("presentation construction") {
    CHECK_THROWS_AS(GroupPresentation::from({}), InvalidGenerators);
    CHECK_THROWS_AS(
        presentation({{"a", fx::standard_loxodromic()}, {"a", fx::real_generator()}}),
        InvalidGenerators);
    CHECK_THROWS_AS(GroupPresentation::from_matrices({{"a", Matrix3::diagonal(2, 1, 1)}}),
                    InvalidGenerators);
}

TEST_CASE("word ball counts and order") {
    CHECK(word_ball_size(2, 1) == 4);
    CHECK(word_ball_size(2, 2) == 16);
    CHECK(word_ball_size(1, 3) == 6);

    const GroupPresentation p = rc_pair();
    std::vector<std::string> seen;
    long count = 0;
    enumerate_word_ball(p, 2, [&](const Word& w, const GroupElement&) {
        seen.push_back(w.format(p));
        ++count;
        return true;
    });
    CHECK(count == 16);
    REQUIRE(seen.size() >= 6);
    CHECK(seen[0] == "a");
    CHECK(seen[1] == "a^-1");
    CHECK(seen[2] == "b");
    CHECK(seen[3] == "b^-1");
    CHECK(seen[4] == "a a");  // "a a^-1" is not reduced
    CHECK(seen[5] == "a b");

    long count1 = 0;
    enumerate_word_ball(presentation({{"g", fx::real_generator()}}), 3,
                        [&](const Word&, const GroupElement&) {
                            ++count1;
                            return true;
                        });
    CHECK(count1 == 6);
}

TEST_CASE("ball elements match their word evaluation") {
    const GroupPresentation p = cc_pair();
    enumerate_word_ball(p, 3, [&](const Word& w, const GroupElement& m) {
        CHECK(max_abs_diff(evaluate_word(p, w).matrix(), m.matrix()) <= 1e-12);
        return true;
    });
}

TEST_CASE("trace audit on the fixture pairs") {
    const TraceAuditReport r1 = trace_audit(rc_pair(), 4);
    CHECK(r1.words_checked == word_ball_size(2, 4));
    CHECK(r1.max_imag_trace <= 1e-12);
    CHECK_FALSE(r1.witness.has_value());

    const TraceAuditReport r2 = trace_audit(cc_pair(), 4);
    CHECK(r2.max_imag_trace <= 1e-12);
    CHECK_FALSE(r2.witness.has_value());

    const GroupPresentation bad = presentation(
        {{"a", fx::standard_loxodromic()}, {"b", fx::nonreal_trace_element()}});
    const TraceAuditReport r3 = trace_audit(bad, 2);
    REQUIRE(r3.witness.has_value());
    CHECK(r3.witness->length() == 1);
    CHECK(r3.witness->format(bad) == "b");
    CHECK(r3.witness_imag_trace == doctest::Approx(2.0));
}

TEST_CASE("find_real_loxodromic") {
    const LoxodromicSearch hit = find_real_loxodromic(rc_pair(), 4);
    CHECK(hit.failure == DetectorFailure::None);
    CHECK(hit.word.length() == 1);
    CHECK(hit.word.format(rc_pair()) == "a");

    // All powers of a unipotent stay unipotent.
    const LoxodromicSearch miss =
        find_real_loxodromic(presentation({{"t", fx::unipotent_parabolic()}}), 5);
    CHECK(miss.failure == DetectorFailure::NoLoxodromicFound);

    fx::Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        const GroupElement q = fx::random_element(rng);
        const GroupPresentation p = presentation(
            {{"a", q * fx::standard_loxodromic() * q.inverse()},
             {"b", q * fx::real_generator() * q.inverse()}});
        const LoxodromicSearch found = find_real_loxodromic(p, 3);
        CHECK(found.failure == DetectorFailure::None);
        CHECK(found.word.length() == 1);
    }
}

TEST_CASE("diagonalizing conjugator") {
    const GroupElement a = fx::standard_loxodromic();
    const GroupElement q0 = diagonalizing_conjugator(a);
    CHECK(max_abs_diff(conjugate(a, q0).matrix(), a.matrix()) <= 1e-12);

    // Round trip through a fixed random frame.
    fx::Rng rng(1234);
    for (int i = 0; i < 20; ++i) {
        const GroupElement frame = fx::random_element(rng);
        const GroupElement moved = frame * a * frame.inverse();
        const GroupElement q = diagonalizing_conjugator(moved);
        CHECK(max_abs_diff(conjugate(moved, q).matrix(), a.matrix()) <= 1e-9);
    }

    // Reversed diagonal gets reordered to descending moduli.
    const GroupElement rev = GroupElement::validate(Matrix3::diagonal(0.5, 1, 2));
    const GroupElement qr = diagonalizing_conjugator(rev);
    CHECK(max_abs_diff(conjugate(rev, qr).matrix(), a.matrix()) <= 1e-12);

    CHECK_THROWS_AS(diagonalizing_conjugator(fx::nonreal_trace_element()), Error);
}

TEST_CASE("companion selection") {
    const auto conj = [](const GroupPresentation& p) {
        std::vector<GroupElement> v;
        for (const auto& g : p.generators) v.push_back(g.element);
        return v;
    };

    const CompanionSelection s1 = select_companion(conj(rc_pair()));
    CHECK(s1.failure == DetectorFailure::None);
    CHECK(s1.index == 1);
    CHECK_FALSE(s1.swapped);

    const CompanionSelection s2 = select_companion(conj(cc_pair()));
    CHECK(s2.index == 1);

    const CompanionSelection s3 = select_companion(
        {fx::standard_loxodromic(),
         GroupElement::validate(Matrix3::diagonal(0.5, 1, 2))});
    CHECK(s3.failure == DetectorFailure::SharedFixedPointsOnly);

    // c column empty but g present: reachable via the antidiagonal swap.
    const CompanionSelection s4 =
        select_companion({fx::standard_loxodromic(), fx::vertical_translation(1.0)});
    CHECK(s4.failure == DetectorFailure::None);
    CHECK(s4.index == 1);
    CHECK(s4.swapped);
}

TEST_CASE("phase dichotomy") {
    CHECK(phase_dichotomy(fx::real_generator()) == PhaseCase::RealC);
    CHECK(phase_dichotomy(fx::block_generator()) == PhaseCase::ImaginaryC);

    // c with comparable real and imaginary parts.
    const double quarter_turn = std::acos(-1.0) / 4.0;
    const GroupElement skew =
        fx::real_generator() * fx::torus_element(std::exp(Cx{0, quarter_turn}));
    CHECK(phase_dichotomy(skew) == PhaseCase::Indeterminate);
}

TEST_CASE("residual phase normalizer") {
    // All-real generators: identity.
    Cx u{0};
    const GroupElement d0 = residual_phase_normalizer(
        {fx::standard_loxodromic(), fx::real_generator()}, kEpsCert, &u);
    CHECK(u == Cx{1.0});
    CHECK(max_abs_diff(d0.matrix(), Matrix3::identity()) == 0.0);

    // Real generators with a negative probe entry still need no correction.
    const GroupElement dn = residual_phase_normalizer(
        {fx::antidiagonal_swap() * fx::real_generator()}, kEpsCert, &u);
    CHECK(u == Cx{1.0});

    // Generators pre-conjugated by diag(w, w^-2, w) come back real.
    const double seventh = std::acos(-1.0) / 7.0;
    const GroupElement w_torus = fx::torus_element(std::exp(Cx{0, seventh}));
    std::vector<GroupElement> skewed = {conjugate(fx::standard_loxodromic(), w_torus),
                                        conjugate(fx::real_generator(), w_torus)};
    const GroupElement d1 = residual_phase_normalizer(skewed, kEpsCert, &u);
    for (const GroupElement& g : skewed)
        CHECK(conjugate(g, d1).matrix().max_abs_imag() <= 1e-9);

    // b = 0 but d != 0: the phase is read from d.
    std::vector<GroupElement> lower = {conjugate(fx::vertical_translation(1.0), w_torus)};
    CHECK(std::abs(lower[0].b()) <= 1e-15);
    CHECK(std::abs(lower[0].d()) > 0.5);
    const GroupElement d2 = residual_phase_normalizer(lower, kEpsCert, &u);
    CHECK(conjugate(lower[0], d2).matrix().max_abs_imag() <= 1e-9);
}

TEST_CASE("detect: plain fixture pairs") {
    const Verdict vr = detect(rc_pair());
    REQUIRE(vr.kind == Verdict::Kind::RFuchsian);
    CHECK(vr.certification.passed);
    CHECK(vr.certification.max_defect <= 1e-10);
    CHECK(max_abs_diff(vr.conjugator->matrix(), Matrix3::identity()) <= 1e-9);

    const Verdict vc = detect(cc_pair());
    REQUIRE(vc.kind == Verdict::Kind::CFuchsian);
    CHECK(vc.certification.passed);
    CHECK(vc.certification.max_defect <= 1e-10);
    CHECK(projectively_equal(*vc.polar, Vector3{0, 1, 0}));
}

TEST_CASE("detect: swapped companion branch") {
    const Verdict v = detect(presentation(
        {{"a", fx::standard_loxodromic()}, {"n", fx::vertical_translation(1.0)}}));
    REQUIRE(v.kind == Verdict::Kind::RFuchsian);
    CHECK(v.certification.passed);
}

TEST_CASE("detect: conjugated round trips certify") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Verdict vr = detect(conjugated_pair(fx::FixtureKind::RFuchsian, seed));
        REQUIRE(vr.kind == Verdict::Kind::RFuchsian);
        CHECK(vr.certification.max_defect <= 1e-8);

        const Verdict vc = detect(conjugated_pair(fx::FixtureKind::CFuchsian, seed));
        REQUIRE(vc.kind == Verdict::Kind::CFuchsian);
        CHECK(vc.certification.max_defect <= 1e-8);
    }
}

TEST_CASE("detect: recovered polar matches the moved line") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        fx::Rng rng(seed);
        const GroupElement q = fx::random_element(rng);
        const GroupPresentation p = presentation(
            {{"a", q * fx::standard_loxodromic() * q.inverse()},
             {"b", q * fx::block_generator() * q.inverse()}});
        const Verdict v = detect(p);
        REQUIRE(v.kind == Verdict::Kind::CFuchsian);
        const ComplexLine expected = push_line(q, standard_complex_line());
        const ComplexLine got = ComplexLine::from_polar(*v.polar);
        CHECK(line_projective_defect(got, expected) <= 1e-8);
    }
}

TEST_CASE("detect: non-real trace yields a sound witness") {
    const GroupPresentation p = presentation({{"a", fx::standard_loxodromic()},
                                              {"b", fx::real_generator()},
                                              {"c", fx::nonreal_trace_element()}});
    const Verdict v = detect(p);
    REQUIRE(v.kind == Verdict::Kind::NotFuchsian);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->length() == 1);
    // Independent re-multiplication confirms the witness.
    const Matrix3 re = raw_evaluate(p, *v.witness);
    CHECK(std::abs(re.trace().imag()) > kEpsTrace);
    CHECK(std::abs(re.trace().imag()) == doctest::Approx(v.witness_imag_trace));
}

TEST_CASE("detect: inconclusive reasons") {
    const Verdict v1 = detect(presentation({{"t", fx::unipotent_parabolic()}}));
    CHECK(v1.kind == Verdict::Kind::Inconclusive);
    CHECK(v1.reason == DetectorFailure::NoLoxodromicFound);

    const Verdict v2 = detect(presentation(
        {{"a", fx::standard_loxodromic()},
         {"b", GroupElement::validate(Matrix3::diagonal(0.5, 1, 2))}}));
    CHECK(v2.kind == Verdict::Kind::Inconclusive);
    CHECK(v2.reason == DetectorFailure::SharedFixedPointsOnly);

    CHECK_THROWS_AS(detect(rc_pair(), 1), Error);
}

TEST_CASE("negative eigenvalue loxodromics defer to their squares") {
    // diag(-2, 1, -1/2) has a real trace but the wrong sign pattern; its
    // square is the canonical form and sits at radius 2.
    const GroupElement neg = GroupElement::validate(Matrix3::diagonal(-2, 1, -0.5));
    const GroupPresentation p = presentation({{"g", neg}, {"b", fx::real_generator()}});

    const LoxodromicSearch shallow =
        find_real_loxodromic(presentation({{"g", neg}}), 1);
    CHECK(shallow.failure == DetectorFailure::NonRealDiagonalForm);

    const LoxodromicSearch deep = find_real_loxodromic(p, 2);
    CHECK(deep.failure == DetectorFailure::None);
    CHECK(deep.word.length() == 2);

    const Verdict v = detect(p);
    CHECK(v.kind == Verdict::Kind::RFuchsian);
    CHECK(v.certification.passed);
}

TEST_CASE("detect: near-miss fixtures never certify") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto lm = fx::fixture_presentation(fx::FixtureKind::NearMiss, seed);
        const GroupPresentation p = GroupPresentation::from_matrices(lm.generators, lm.tol_grp);
        const Verdict v = detect(p);
        CHECK(v.kind != Verdict::Kind::RFuchsian);
        CHECK(v.kind != Verdict::Kind::CFuchsian);
    }
}

TEST_CASE("detect: verdict kind is conjugation equivariant") {
    fx::Rng rng(404);
    for (int i = 0; i < 5; ++i) {
        const GroupElement q = fx::random_element(rng);
        const auto conj_pres = [&](const GroupPresentation& p) {
            std::vector<GroupPresentation::Generator> gens;
            for (const auto& g : p.generators)
                gens.push_back({g.label, q * g.element * q.inverse()});
            return GroupPresentation::from(std::move(gens));
        };
        CHECK(detect(conj_pres(rc_pair())).kind == Verdict::Kind::RFuchsian);
        CHECK(detect(conj_pres(cc_pair())).kind == Verdict::Kind::CFuchsian);
    }
}

TEST_CASE("certification rejects a skewed conjugator") {
    const Verdict good = detect(rc_pair());
    REQUIRE(good.kind == Verdict::Kind::RFuchsian);

    Verdict tampered = good;
    tampered.conjugator =
        *good.conjugator * fx::torus_element(std::exp(Cx{0, 1e-3}));
    const CertificationRecord record = certify(tampered, rc_pair());
    CHECK_FALSE(record.passed);
    CHECK(record.max_defect > kEpsCert);

    // Entry-level tampering (imaginary, so it cannot hide inside a real
    // certificate): the matrix only validates at a relaxed tolerance, and
    // certification still refuses it.
    Matrix3 m = good.conjugator->matrix();
    m(0, 1) += Cx{0, 1e-3};
    tampered.conjugator = GroupElement::validate(m, 1e-2);
    CHECK_FALSE(certify(tampered, rc_pair()).passed);

    CHECK_THROWS_AS(certify(detect(presentation({{"t", fx::unipotent_parabolic()}})),
                            rc_pair()),
                    Error);
}

TEST_CASE("case II derivation: certified block frames have clean zeros") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GroupPresentation p = conjugated_pair(fx::FixtureKind::CFuchsian, seed);
        const Verdict v = detect(p);
        REQUIRE(v.kind == Verdict::Kind::CFuchsian);
        for (const auto& gen : p.generators) {
            const GroupElement moved = conjugate(gen.element, *v.conjugator);
            CHECK(std::abs(moved.b()) <= 10 * kEpsCert);
            CHECK(std::abs(moved.d()) <= 10 * kEpsCert);
            CHECK(std::abs(moved.f()) <= 10 * kEpsCert);
            CHECK(std::abs(moved.h()) <= 10 * kEpsCert);
            // Real diagonal and pure-imaginary c, as the dichotomy demands.
            CHECK(std::abs(moved.a().imag()) <= 10 * kEpsCert);
            CHECK(std::abs(moved.e().imag()) <= 10 * kEpsCert);
            CHECK(std::abs(moved.j().imag()) <= 10 * kEpsCert);
        }
    }
}

TEST_CASE("diagonal realness follows from the three trace constraints") {
    // With A = diag(t, 1, 1/t), the traces of B, AB, A^-1 B pin (a, e, j)
    // through a real 3x3 system; solving it must reproduce the entries.
    const GroupElement a = fx::standard_loxodromic();
    const double t = 2.0;
    fx::Rng rng(606);
    for (int i = 0; i < 50; ++i) {
        const GroupElement b = conjugate(i % 2 == 0 ? fx::real_generator()
                                                    : fx::block_generator(),
                                         fx::random_torus(rng));
        const Cx t1 = (a * b).trace();
        const Cx t2 = (a.inverse() * b).trace();
        const Cx t3 = b.trace();
        CHECK(std::abs(t1.imag()) <= 1e-12);
        CHECK(std::abs(t2.imag()) <= 1e-12);
        CHECK(std::abs(t3.imag()) <= 1e-12);

        Matrix3 coeff;
        coeff.e = {Cx{t}, Cx{1}, Cx{1 / t}, Cx{1 / t}, Cx{1}, Cx{t}, Cx{1}, Cx{1}, Cx{1}};
        const Vector3 solved = general_inverse(coeff) * Vector3{t1, t2, t3};
        CHECK(std::abs(solved.v1 - b.a()) <= 1e-10);
        CHECK(std::abs(solved.v2 - b.e()) <= 1e-10);
        CHECK(std::abs(solved.v3 - b.j()) <= 1e-10);
        CHECK(std::abs(solved.v1.imag()) <= 1e-10);
        CHECK(std::abs(solved.v2.imag()) <= 1e-10);
        CHECK(std::abs(solved.v3.imag()) <= 1e-10);
    }
}

TEST_CASE("r-fuchsian certificate implies plane invariance") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GroupPresentation p = conjugated_pair(fx::FixtureKind::RFuchsian, seed);
        const Verdict v = detect(p);
        REQUIRE(v.kind == Verdict::Kind::RFuchsian);
        // Q^-1 g Q real means g preserves the plane Q(L_R).
        const LagrangianPlane plane = push_lagrangian(*v.conjugator, standard_lagrangian());
        fx::Rng rng(seed * 17 + 1);
        for (int i = 0; i < 100; ++i) {
            const double x2 = rng.range(-1.5, 1.5);
            const ProjectivePoint base =
                ProjectivePoint::from_finite({Cx{-x2 * x2 / 2}, Cx{x2}});
            const ProjectivePoint on_plane = apply(*v.conjugator, base);
            REQUIRE(lagrangian_contains(plane, on_plane, 1e-8));
            for (const auto& gen : p.generators)
                CHECK(lagrangian_contains(plane, apply(gen.element, on_plane), 1e-8));
        }
    }
}
