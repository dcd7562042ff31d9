#include "chg/detector.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace chg {

namespace {

GroupElement antidiagonal_swap_element() {
    Matrix3 m;
    m.e = {Cx{0}, Cx{0}, Cx{-1}, Cx{0}, Cx{-1}, Cx{0}, Cx{-1}, Cx{0}, Cx{0}};
    return GroupElement::validate(m);
}

}  // namespace

GroupPresentation GroupPresentation::from(std::vector<Generator> gens) {
    if (gens.empty()) throw InvalidGenerators("presentation has no generators");
    std::set<std::string> labels;
    for (const Generator& g : gens) {
        if (!labels.insert(g.label).second)
            throw InvalidGenerators("duplicate generator label: " + g.label);
    }
    GroupPresentation p;
    p.generators = std::move(gens);
    return p;
}

GroupPresentation GroupPresentation::from_matrices(
    const std::vector<std::pair<std::string, Matrix3>>& gens, double eps_grp) {
    std::vector<Generator> out;
    out.reserve(gens.size());
    for (const auto& [label, m] : gens) {
        try {
            out.push_back({label, GroupElement::validate(m, eps_grp)});
        } catch (const Error& e) {
            throw InvalidGenerators("generator '" + label + "': " + e.what());
        }
    }
    return from(std::move(out));
}

std::string Word::format(const GroupPresentation& p) const {
    std::string s;
    for (const Letter& l : letters) {
        if (!s.empty()) s += ' ';
        s += p.generators[static_cast<size_t>(l.gen)].label;
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

GroupElement evaluate_word(const GroupPresentation& p, const Word& w) {
    GroupElement m = GroupElement::identity();
    for (const Word::Letter& l : w.letters) {
        const GroupElement& g = p.generators[static_cast<size_t>(l.gen)].element;
        m = m * (l.exp > 0 ? g : g.inverse());
    }
    return m;
}

void enumerate_word_ball(const GroupPresentation& p, int radius,
                         const std::function<bool(const Word&, const GroupElement&)>& fn) {
    const int n = p.size();
    if (n == 0 || radius < 1) return;

    std::vector<GroupElement> letters;
    letters.reserve(2 * static_cast<size_t>(n));
    for (const auto& g : p.generators) {
        letters.push_back(g.element);
        letters.push_back(g.element.inverse());
    }
    const auto letter_of = [](int k) { return Word::Letter{k / 2, (k % 2 == 0) ? 1 : -1}; };

    struct Node {
        Word word;
        GroupElement element;
    };
    std::vector<Node> level;
    for (int len = 1; len <= radius; ++len) {
        std::vector<Node> next;
        if (len == 1) {
            for (int k = 0; k < 2 * n; ++k)
                next.push_back({Word{{letter_of(k)}}, letters[static_cast<size_t>(k)]});
        } else {
            for (const Node& node : level) {
                const Word::Letter last = node.word.letters.back();
                for (int k = 0; k < 2 * n; ++k) {
                    const Word::Letter cand = letter_of(k);
                    if (cand.gen == last.gen && cand.exp == -last.exp) continue;  // reduced
                    Node child{node.word, node.element * letters[static_cast<size_t>(k)]};
                    child.word.letters.push_back(cand);
                    next.push_back(std::move(child));
                }
            }
        }
        level = std::move(next);
        for (const Node& node : level)
            if (!fn(node.word, node.element)) return;
    }
}

long word_ball_size(int n_generators, int radius) {
    long total = 0;
    long level = 2L * n_generators;
    for (int len = 1; len <= radius; ++len) {
        total += level;
        level *= 2L * n_generators - 1;
    }
    return total;
}

TraceAuditReport trace_audit(const GroupPresentation& p, int radius, double eps_tr) {
    TraceAuditReport report;
    report.radius = radius;
    enumerate_word_ball(p, radius, [&](const Word& w, const GroupElement& m) {
        ++report.words_checked;
        const double imag = std::abs(m.trace().imag());
        report.max_imag_trace = std::max(report.max_imag_trace, imag);
        if (imag > eps_tr && !report.witness) {
            report.witness = w;
            report.witness_imag_trace = imag;
        }
        return true;
    });
    return report;
}

const char* to_string(DetectorFailure f) {
    switch (f) {
        case DetectorFailure::None: return "none";
        case DetectorFailure::NoLoxodromicFound: return "no-loxodromic-found";
        case DetectorFailure::SharedFixedPointsOnly: return "shared-fixed-points-only";
        case DetectorFailure::NonRealDiagonalForm: return "non-real-diagonal-form";
        case DetectorFailure::CertificationFailed: return "certification-failed";
    }
    return "?";
}

const char* to_string(PhaseCase c) {
    switch (c) {
        case PhaseCase::RealC: return "real-c";
        case PhaseCase::ImaginaryC: return "imaginary-c";
        case PhaseCase::Indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_string(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::RFuchsian: return "r-fuchsian";
        case Verdict::Kind::CFuchsian: return "c-fuchsian";
        case Verdict::Kind::NotFuchsian: return "not-fuchsian";
        case Verdict::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

LoxodromicSearch find_real_loxodromic(const GroupPresentation& p, int radius, double eps) {
    LoxodromicSearch result;
    bool saw_loxodromic = false;
    bool found = false;
    enumerate_word_ball(p, radius, [&](const Word& w, const GroupElement& m) {
        if (classify(m, eps).kind != IsometryClass::Loxodromic) return true;
        saw_loxodromic = true;
        if (!is_real_trace(m)) return true;
        const EigenStructure s = eigen(m, eps);
        for (const EigenPair& pr : s.pairs) {
            if (std::abs(pr.value.imag()) > eps * std::max(1.0, std::abs(pr.value)))
                return true;
        }
        // Real triple {t, 1, 1/t} with t > 1.
        if (s.pairs[0].value.real() <= 1.0 + eps) return true;
        if (std::abs(s.pairs[1].value - Cx{1}) > 100.0 * eps) return true;
        result.word = w;
        result.element = m;
        found = true;
        return false;
    });
    if (!found)
        result.failure = saw_loxodromic ? DetectorFailure::NonRealDiagonalForm
                                        : DetectorFailure::NoLoxodromicFound;
    return result;
}

GroupElement diagonalizing_conjugator(const GroupElement& a, double eps) {
    const EigenStructure s = eigen(a, eps);
    if (std::abs(s.pairs[0].value) <= 1.0 + eps)
        throw Error("diagonalizing_conjugator requires a loxodromic element");

    // One inverse-iteration pass: the certificate's precision rides on
    // these three directions.
    Vector3 vp = refine_eigenvector(a.matrix(), s.pairs[0].value, s.pairs[0].vector);
    Vector3 v0 = refine_eigenvector(a.matrix(), s.pairs[1].value, s.pairs[1].vector);
    Vector3 vm = refine_eigenvector(a.matrix(), s.pairs[2].value, s.pairs[2].vector);

    // Deterministic phases: largest coordinate of v+ and v0 positive real.
    const auto fix_phase = [](Vector3& v) {
        int pivot = 0;
        double best = 0.0;
        for (int i = 0; i < 3; ++i)
            if (std::abs(v[i]) > best) { best = std::abs(v[i]); pivot = i; }
        v = v / (v[pivot] / std::abs(v[pivot]));
    };
    fix_phase(vp);
    fix_phase(v0);

    const double n0 = hermitian_form(v0, v0).real();
    if (n0 <= 0.0)
        throw Error("neutral eigenvector is not exterior");
    v0 = v0 / Cx{std::sqrt(n0)};

    const Cx pairing = hermitian_form(vp, vm);
    if (std::abs(pairing) < 1e-12)
        throw Error("degenerate pairing between the fixed points");
    vm = vm / std::conj(pairing);  // now <v+, v-> = 1

    Matrix3 q = Matrix3::from_columns(vp, v0, vm);
    const Cx det = q.det();
    q = q * std::exp(-std::log(det) / 3.0);  // scalar cube root: det becomes 1

    const GroupElement qe = GroupElement::validate(q, std::max(kEpsGroup, eps));
    const GroupElement diag = conjugate(a, qe);
    const double max_imag = std::max({std::abs(diag.a().imag()),
                                      std::abs(diag.e().imag()),
                                      std::abs(diag.j().imag())});
    if (max_imag > eps) throw NonRealDiagonalForm(max_imag);
    return qe;
}

CompanionSelection select_companion(const std::vector<GroupElement>& gens_conj,
                                    double eps) {
    CompanionSelection sel;
    for (size_t i = 0; i < gens_conj.size(); ++i) {
        if (std::abs(gens_conj[i].c()) > eps) {
            sel.index = static_cast<int>(i);
            return sel;
        }
    }
    for (size_t i = 0; i < gens_conj.size(); ++i) {
        if (std::abs(gens_conj[i].g()) > eps) {
            sel.index = static_cast<int>(i);
            sel.swapped = true;
            return sel;
        }
    }
    sel.failure = DetectorFailure::SharedFixedPointsOnly;
    return sel;
}

PhaseCase phase_dichotomy(const GroupElement& b, double eps) {
    const Cx c = b.c();
    const double mag = std::abs(c);
    if (mag <= eps) return PhaseCase::Indeterminate;
    if (std::abs(c.imag()) <= eps * mag) return PhaseCase::RealC;
    if (std::abs(c.real()) <= eps * mag) return PhaseCase::ImaginaryC;
    return PhaseCase::Indeterminate;
}

GroupElement residual_phase_normalizer(const std::vector<GroupElement>& gens_conj,
                                       double eps, Cx* u_out) {
    Cx u{1.0};
    for (const GroupElement& g : gens_conj) {
        struct Probe {
            Cx value;
            double sign;  // +1: entry scales by u^-3, -1: by u^3
        };
        const Probe probes[4] = {{g.b(), +1.0}, {g.d(), -1.0}, {g.f(), -1.0}, {g.h(), +1.0}};
        bool found = false;
        for (const Probe& pr : probes) {
            if (std::abs(pr.value) > eps) {
                // An already-real probe (either sign) needs no correction.
                if (std::abs(pr.value.imag()) > eps * std::abs(pr.value)) {
                    const double theta = std::arg(pr.value);
                    u = std::exp(Cx{0.0, pr.sign * theta / 3.0});
                }
                found = true;
                break;
            }
        }
        if (found) break;
    }
    if (u_out) *u_out = u;
    return GroupElement::validate(Matrix3::diagonal(u, Cx{1} / (u * u), u));
}

CertificationRecord certify(const Verdict& v, const GroupPresentation& p, double eps) {
    CertificationRecord record;
    if (v.kind == Verdict::Kind::RFuchsian) {
        if (!v.conjugator) throw Error("certify: verdict has no conjugator");
        for (const auto& gen : p.generators) {
            const GroupElement moved = conjugate(gen.element, *v.conjugator);
            record.per_generator.push_back(moved.matrix().max_abs_imag());
        }
    } else if (v.kind == Verdict::Kind::CFuchsian) {
        if (!v.polar) throw Error("certify: verdict has no polar vector");
        const ComplexLine line = ComplexLine::from_polar(*v.polar);
        for (const auto& gen : p.generators) {
            record.per_generator.push_back(
                line_projective_defect(push_line(gen.element, line), line));
        }
    } else {
        throw Error("certify requires an R- or C-Fuchsian verdict");
    }
    for (double d : record.per_generator)
        record.max_defect = std::max(record.max_defect, d);
    record.passed = record.max_defect <= eps;
    return record;
}

Verdict detect(const GroupPresentation& p, int radius, const Tolerances& tol) {
    if (p.generators.empty()) throw InvalidGenerators("presentation has no generators");
    if (radius < 2) throw Error("detect requires radius >= 2");

    Verdict verdict;

    // 1. Non-real trace anywhere in the ball settles it.
    const TraceAuditReport audit = trace_audit(p, radius, tol.tr);
    if (audit.witness) {
        verdict.kind = Verdict::Kind::NotFuchsian;
        verdict.witness = audit.witness;
        verdict.witness_imag_trace = audit.witness_imag_trace;
        return verdict;
    }

    const auto inconclusive = [&](DetectorFailure why) {
        Verdict v;
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = why;
        return v;
    };

    // Escalation: one wider audit hunting for a witness before giving up.
    const auto escalate = [&]() {
        const TraceAuditReport wider = trace_audit(p, radius + tol.escalation, tol.tr);
        if (wider.witness) {
            Verdict v;
            v.kind = Verdict::Kind::NotFuchsian;
            v.witness = wider.witness;
            v.witness_imag_trace = wider.witness_imag_trace;
            return v;
        }
        return inconclusive(DetectorFailure::CertificationFailed);
    };

    // 2. A loxodromic with real diagonal form anchors the normalization.
    const LoxodromicSearch lox = find_real_loxodromic(p, radius, tol.eig);
    if (lox.failure != DetectorFailure::None) return inconclusive(lox.failure);

    // 3. Move its fixed points to 0 and infinity.
    GroupElement q = GroupElement::identity();
    try {
        q = diagonalizing_conjugator(*lox.element, tol.eig);
    } catch (const NonRealDiagonalForm&) {
        return inconclusive(DetectorFailure::NonRealDiagonalForm);
    }

    const auto conjugate_all = [&](const GroupElement& by) {
        std::vector<GroupElement> v;
        v.reserve(p.generators.size());
        for (const auto& gen : p.generators) v.push_back(conjugate(gen.element, by));
        return v;
    };
    std::vector<GroupElement> gens_conj = conjugate_all(q);

    // 4. A companion that moves the fixed pair.
    const CompanionSelection sel = select_companion(gens_conj, tol.cert);
    if (sel.failure != DetectorFailure::None)
        return inconclusive(DetectorFailure::SharedFixedPointsOnly);
    if (sel.swapped) {
        q = q * antidiagonal_swap_element();
        gens_conj = conjugate_all(q);
    }
    const GroupElement& companion = gens_conj[static_cast<size_t>(sel.index)];

    // 5. Branch on the phase of c and certify against every generator.
    switch (phase_dichotomy(companion, tol.cert)) {
        case PhaseCase::RealC: {
            Cx u{1.0};
            const GroupElement d = residual_phase_normalizer(gens_conj, tol.cert, &u);
            Verdict candidate;
            candidate.kind = Verdict::Kind::RFuchsian;
            candidate.conjugator = q * d;
            candidate.residual_phase = u;
            candidate.certification = certify(candidate, p, tol.cert);
            if (candidate.certification.passed) return candidate;
            return escalate();
        }
        case PhaseCase::ImaginaryC: {
            Verdict candidate;
            candidate.kind = Verdict::Kind::CFuchsian;
            candidate.conjugator = q;
            candidate.polar = push_line(q, standard_complex_line()).polar;
            candidate.certification = certify(candidate, p, tol.cert);
            if (candidate.certification.passed) return candidate;
            return escalate();
        }
        case PhaseCase::Indeterminate:
            return escalate();
    }
    return escalate();
}

}  // namespace chg
