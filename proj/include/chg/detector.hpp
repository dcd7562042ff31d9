#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chg/submanifolds.hpp"

namespace chg {

struct InvalidGenerators : Error {
    explicit InvalidGenerators(const std::string& what) : Error(what) {}
};

/// Labeled generating set; every element validated, labels unique.
struct GroupPresentation {
    struct Generator {
        std::string label;
        GroupElement element;
    };
    std::vector<Generator> generators;

    static GroupPresentation from(std::vector<Generator> gens);

    /// Validates raw matrices at eps_grp and wraps failures as
    /// InvalidGenerators (distinct from any detector verdict).
    static GroupPresentation from_matrices(
        const std::vector<std::pair<std::string, Matrix3>>& gens,
        double eps_grp = kEpsGroup);

    int size() const { return static_cast<int>(generators.size()); }
};

/// Reduced word in the generators: no letter is followed by its inverse.
struct Word {
    struct Letter {
        int gen;  // index into the presentation
        int exp;  // +1 or -1
    };
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    std::string format(const GroupPresentation& p) const;
};

/// Ordered product of generator powers; independent of any cached matrices,
/// so it doubles as the re-evaluation oracle for witness words.
GroupElement evaluate_word(const GroupPresentation& p, const Word& w);

/// Streams all reduced words of length 1..radius in length-lexicographic
/// order (letters ordered g1, g1^-1, g2, g2^-1, ...) together with their
/// evaluated elements. Evaluation is incremental: each word extends its
/// parent by one generator product. Return false from the callback to stop.
void enumerate_word_ball(const GroupPresentation& p, int radius,
                         const std::function<bool(const Word&, const GroupElement&)>& fn);

/// Number of reduced words of length 1..radius for n generators.
long word_ball_size(int n_generators, int radius);

struct TraceAuditReport {
    int radius = 0;
    long words_checked = 0;
    double max_imag_trace = 0.0;
    std::optional<Word> witness;  // first word in ball order over tolerance
    double witness_imag_trace = 0.0;
};

/// Scans the whole ball for non-real traces.
TraceAuditReport trace_audit(const GroupPresentation& p, int radius,
                             double eps_tr = kEpsTrace);

enum class DetectorFailure {
    None,
    NoLoxodromicFound,
    SharedFixedPointsOnly,
    NonRealDiagonalForm,
    CertificationFailed,
};

const char* to_string(DetectorFailure f);

struct NonRealDiagonalForm : Error {
    explicit NonRealDiagonalForm(double imag)
        : Error("diagonalized element has non-real diagonal (|Im| = " +
                std::to_string(imag) + ")") {}
};

struct LoxodromicSearch {
    DetectorFailure failure = DetectorFailure::None;  // None when found
    Word word;
    std::optional<GroupElement> element;
};

/// First word in ball order that is loxodromic with real trace and real
/// eigenvalue triple {t, 1, 1/t}, t > 1 + eps. Distinguishes "no loxodromic
/// at all" from "loxodromics exist but none diagonalizes over the reals".
LoxodromicSearch find_real_loxodromic(const GroupPresentation& p, int radius,
                                      double eps = kEpsEigen);

/// Q with Q^-1 A Q = diag(t, 1, 1/t) in descending modulus order. Columns
/// are the eigenvectors of A, normalized so <v+,v-> = 1 and <v0,v0> = 1
/// (cross pairings vanish automatically for a loxodromic), the largest
/// coordinate of v+ made positive real, and the determinant corrected to 1
/// by a scalar cube root. Throws NonRealDiagonalForm when the resulting
/// diagonal is not real at tolerance.
GroupElement diagonalizing_conjugator(const GroupElement& a, double eps = kEpsEigen);

struct CompanionSelection {
    DetectorFailure failure = DetectorFailure::None;
    int index = -1;       // generator index
    bool swapped = false; // 0 and infinity were exchanged to expose c
};

/// First conjugated generator with |c| > eps. When every c vanishes but
/// some g survives, the caller should conjugate everything by the
/// anti-diagonal swap (reported via `swapped`) and use that generator.
/// All entries c and g below eps means every generator fixes both 0 and
/// infinity: a global fixed pair, so the group is elementary-like.
CompanionSelection select_companion(const std::vector<GroupElement>& gens_conj,
                                    double eps = kEpsCert);

enum class PhaseCase { RealC, ImaginaryC, Indeterminate };

const char* to_string(PhaseCase c);

/// Whether the (1,3) entry is real or pure imaginary (relative tolerance).
/// Indeterminate signals that the real-trace hypothesis fails beyond
/// tolerance; the detector reacts by widening the audit.
PhaseCase phase_dichotomy(const GroupElement& b, double eps = kEpsCert);

/// diag(u, u^-2, u) chosen so the first entry among {b, d, f, h} with
/// magnitude above eps becomes real under conjugation (b, h scale by u^-3;
/// d, f by u^3). Identity when all four vanish everywhere. This closes the
/// residual-phase freedom that conjugation by the torus leaves in an
/// otherwise-real generating set.
GroupElement residual_phase_normalizer(const std::vector<GroupElement>& gens_conj,
                                       double eps, Cx* u_out);

struct Tolerances {
    double grp = kEpsGroup;
    double tr = kEpsTrace;
    double eig = kEpsEigen;
    double cert = kEpsCert;
    double pt = kEpsPoint;
    int escalation = 2;  // extra radius for the post-failure audit
};

struct CertificationRecord {
    bool passed = false;
    double max_defect = 0.0;
    std::vector<double> per_generator;
};

struct Verdict {
    enum class Kind { RFuchsian, CFuchsian, NotFuchsian, Inconclusive };

    Kind kind;
    // RFuchsian / CFuchsian.
    std::optional<GroupElement> conjugator;
    Cx residual_phase{1.0};             // RFuchsian only
    std::optional<Vector3> polar;       // CFuchsian only
    CertificationRecord certification;  // positive verdicts only
    // NotFuchsian.
    std::optional<Word> witness;
    double witness_imag_trace = 0.0;
    // Inconclusive.
    DetectorFailure reason = DetectorFailure::None;
};

const char* to_string(Verdict::Kind k);

/// Independent re-verification of a positive verdict against every
/// generator of p, decoupled from however the certificate was derived:
/// RFuchsian recomputes Q^-1 g Q and reports the worst |Im entry|;
/// CFuchsian reports the worst projective defect between push_line(g, L)
/// and L for the verdict's polar. `passed` is false when the worst defect
/// exceeds eps.
CertificationRecord certify(const Verdict& v, const GroupPresentation& p,
                            double eps = kEpsCert);

/// Decision pipeline:
///   1. trace audit over the ball; a non-real witness ends it (NotFuchsian);
///   2. find a real-trace loxodromic with real diagonal form;
///   3. conjugate every generator into the frame where it is diag(t,1,1/t);
///   4. select a companion generator with c != 0 (swapping 0 and infinity
///      when needed);
///   5. branch on c real vs pure imaginary: normalize the residual torus
///      phase and certify all generators real, or certify all generators
///      block; certification runs through certify() on the original
///      generators;
///   6. on any failure, widen the audit once looking for a witness, else
///      report Inconclusive.
/// Positive verdicts are exactly checkable certificates; NotFuchsian
/// carries a witness word; only Inconclusive is non-definitive.
Verdict detect(const GroupPresentation& p, int radius = 4, const Tolerances& tol = {});

}  // namespace chg
