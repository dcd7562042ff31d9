#include "chg/reports.hpp"

#include <cmath>

#include "chg/invariants.hpp"

namespace chg::reports {

namespace {

void emit_tolerances(JsonWriter& w, double grp, double tr, double cert) {
    w.key("tolerances").begin_object();
    w.key("grp").value(grp);
    w.key("tr").value(tr);
    w.key("cert").value(cert);
    w.end_object();
}

struct ResolvedTolerances {
    Tolerances tol;
};

// Precedence: library defaults < file overrides < command-line flags.
ResolvedTolerances resolve(const GeneratorFile& f, const DetectOptions& opt) {
    ResolvedTolerances r;
    if (f.tol_grp) r.tol.grp = *f.tol_grp;
    if (f.tol_tr) r.tol.tr = *f.tol_tr;
    if (f.tol_cert) r.tol.cert = *f.tol_cert;
    if (opt.tol_grp) r.tol.grp = *opt.tol_grp;
    if (opt.tol_tr) r.tol.tr = *opt.tol_tr;
    if (opt.tol_cert) r.tol.cert = *opt.tol_cert;
    return r;
}

}  // namespace

std::string validate_report(const std::string& file_text) {
    const GeneratorFile f = parse_generator_file(file_text);
    const double eps = f.tol_grp.value_or(kEpsGroup);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("validate");
    w.key("input_digest").value(content_digest(file_text));
    w.key("tolerance_grp").value(eps);
    w.key("generators").begin_array();
    for (const auto& [label, m] : f.generators) {
        w.begin_object();
        w.key("label").value(label);
        w.key("det").value(m.det());
        w.key("det_residual").value(std::abs(m.det() - Cx{1}));
        w.key("grid_residual").value(identity_grid_residual(m));
        try {
            GroupElement::validate(m, eps);
            w.key("status").value("valid");
        } catch (const BadDeterminant&) {
            try {
                GroupElement::normalize_to_su21(m, eps);
                const Cx root = std::exp(std::log(m.det()) / 3.0);
                w.key("status").value("normalized");
                w.key("applied_cube_root").value(root);
            } catch (const Error&) {
                w.key("status").value("bad-determinant");
            }
        } catch (const NotUnitary&) {
            w.key("status").value("not-unitary");
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string classify_report(const std::string& file_text) {
    const GeneratorFile f = parse_generator_file(file_text);
    const double eps = f.tol_grp.value_or(kEpsGroup);
    const GroupPresentation p = GroupPresentation::from_matrices(f.generators, eps);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("classify");
    w.key("input_digest").value(content_digest(file_text));
    w.key("elements").begin_array();
    for (const auto& gen : p.generators) {
        const Classification cls = classify(gen.element);
        const EigenStructure s = eigen(gen.element);
        w.begin_object();
        w.key("label").value(gen.label);
        w.key("class").value(to_string(cls.kind));
        w.key("is_identity").value(cls.is_identity);
        w.key("trace").value(gen.element.trace());
        w.key("eigenvalues").begin_array();
        for (const EigenPair& pr : s.pairs) w.value(pr.value);
        w.end_array();
        w.key("defective").value(s.defective);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string cartan_report(const std::string& points_text) {
    const PointFile f = parse_points_file(points_text);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("cartan");
    w.key("input_digest").value(content_digest(points_text));
    w.key("triples").begin_array();
    for (size_t i = 0; i + 2 < f.points.size(); i += 3) {
        w.begin_object();
        w.key("index").value(static_cast<long>(i / 3));
        bool boundary = true;
        for (size_t k = i; k < i + 3; ++k)
            boundary = boundary && f.points[k].cls == PointClass::Boundary;
        w.key("all_boundary").value(boundary);
        try {
            const CartanValue a = cartan_invariant(f.points[i], f.points[i + 1], f.points[i + 2]);
            w.key("status").value("ok");
            w.key("angle").value(a.angle);
        } catch (const DegenerateTriple&) {
            w.key("status").value("degenerate");
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string cross_report(const std::string& points_text) {
    const PointFile f = parse_points_file(points_text);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("cross");
    w.key("input_digest").value(content_digest(points_text));
    w.key("quadruples").begin_array();
    for (size_t i = 0; i + 3 < f.points.size(); i += 4) {
        w.begin_object();
        w.key("index").value(static_cast<long>(i / 4));
        try {
            const CoplanarityVerdict v =
                coplanarity_test(f.points[i], f.points[i + 1], f.points[i + 2], f.points[i + 3]);
            w.key("status").value("ok");
            w.key("x1").value(v.ratios.x1);
            w.key("x2").value(v.ratios.x2);
            w.key("x3").value(v.ratios.x3);
            w.key("coplanarity").value(to_string(v.kind));
            w.key("max_imag").value(v.max_imag);
            w.key("complex_line_defect").value(v.complex_line_defect);
            w.key("lagrangian_defect").value(v.lagrangian_defect);
        } catch (const AmbiguousCoplanarity& a) {
            w.key("status").value("ambiguous");
            w.key("complex_line_defect").value(a.complex_line_defect);
            w.key("lagrangian_defect").value(a.lagrangian_defect);
        } catch (const DegenerateQuadruple&) {
            w.key("status").value("degenerate");
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string audit_report(const std::string& file_text, const DetectOptions& opt) {
    const GeneratorFile f = parse_generator_file(file_text);
    const ResolvedTolerances r = resolve(f, opt);
    const GroupPresentation p = GroupPresentation::from_matrices(f.generators, r.tol.grp);
    const TraceAuditReport audit = trace_audit(p, opt.radius, r.tol.tr);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("audit");
    w.key("input_digest").value(content_digest(file_text));
    emit_tolerances(w, r.tol.grp, r.tol.tr, r.tol.cert);
    w.key("radius").value(audit.radius);
    w.key("words_checked").value(audit.words_checked);
    w.key("max_imag_trace").value(audit.max_imag_trace);
    w.key("witness");
    if (audit.witness) {
        w.value(audit.witness->format(p));
        w.key("witness_imag_trace").value(audit.witness_imag_trace);
    } else {
        w.null();
    }
    w.end_object();
    return w.take();
}

std::string detect_report(const std::string& file_text, const DetectOptions& opt) {
    const GeneratorFile f = parse_generator_file(file_text);
    const ResolvedTolerances r = resolve(f, opt);
    const GroupPresentation p = GroupPresentation::from_matrices(f.generators, r.tol.grp);
    const Verdict v = detect(p, opt.radius, r.tol);

    JsonWriter w;
    w.begin_object();
    w.key("command").value("detect");
    w.key("input_digest").value(content_digest(file_text));
    emit_tolerances(w, r.tol.grp, r.tol.tr, r.tol.cert);
    w.key("radius").value(opt.radius);
    w.key("verdict").value(to_string(v.kind));
    switch (v.kind) {
        case Verdict::Kind::RFuchsian:
            w.key("conjugator").value(v.conjugator->matrix());
            w.key("residual_phase").value(v.residual_phase);
            break;
        case Verdict::Kind::CFuchsian:
            w.key("conjugator").value(v.conjugator->matrix());
            w.key("polar").value(*v.polar);
            break;
        case Verdict::Kind::NotFuchsian:
            w.key("witness").value(v.witness->format(p));
            w.key("witness_imag_trace").value(v.witness_imag_trace);
            break;
        case Verdict::Kind::Inconclusive:
            w.key("reason").value(to_string(v.reason));
            break;
    }
    if (v.kind == Verdict::Kind::RFuchsian || v.kind == Verdict::Kind::CFuchsian) {
        w.key("certification").begin_object();
        w.key("passed").value(v.certification.passed);
        w.key("max_defect").value(v.certification.max_defect);
        w.key("per_generator").begin_array();
        for (double d : v.certification.per_generator) w.value(d);
        w.end_array();
        w.end_object();
    }
    w.end_object();
    return w.take();
}

std::string fixtures_file(fixtures::FixtureKind kind, std::uint64_t seed, int count,
                          double near_miss_delta) {
    const fixtures::LabeledMatrices lm =
        fixtures::fixture_presentation(kind, seed, count, near_miss_delta);

    const char* kind_name = kind == fixtures::FixtureKind::RFuchsian  ? "r"
                            : kind == fixtures::FixtureKind::CFuchsian ? "c"
                                                                       : "near-miss";
    JsonWriter w;
    w.begin_object();
    w.key("generators").begin_array();
    for (const auto& [label, m] : lm.generators) {
        w.begin_object();
        w.key("label").value(label);
        w.key("matrix").value(m);
        w.end_object();
    }
    w.end_array();
    w.key("tolerances").begin_object();
    w.key("grp").value(lm.tol_grp);
    w.end_object();
    w.key("metadata").begin_object();
    w.key("kind").value(kind_name);
    w.key("seed").value(static_cast<long>(seed));
    if (kind == fixtures::FixtureKind::NearMiss)
        w.key("near_miss_delta").value(near_miss_delta);
    w.end_object();
    w.end_object();
    return w.take();
}

std::string orbit_csv(const std::string& file_text, const ProjectivePoint& start,
                      int radius) {
    const GeneratorFile f = parse_generator_file(file_text);
    const GroupPresentation p =
        GroupPresentation::from_matrices(f.generators, f.tol_grp.value_or(kEpsGroup));

    std::string out;
    enumerate_word_ball(p, radius, [&](const Word& w, const GroupElement& m) {
        const ProjectivePoint image = apply(m, start);
        out += w.format(p);
        if (const auto fin = image.to_finite(1e-9)) {
            out += ',' + format_double(fin->z1.real());
            out += ',' + format_double(fin->z1.imag());
            out += ',' + format_double(fin->z2.real());
            out += ',' + format_double(fin->z2.imag());
        } else {
            out += ",inf,inf,inf,inf";
        }
        out += '\n';
        return true;
    });
    return out;
}

}  // namespace chg::reports
