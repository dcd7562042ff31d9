// Command-line driver: validate | classify | cartan | cross | audit |
// detect | fixtures | orbit. Reports go to standard output (deterministic
// bytes for identical inputs); wall time and diagnostics go to standard
// error. Exit code 1 means an operational failure (I/O, parse, validation);
// mathematical verdicts live inside the report.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chg/reports.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chg::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw chg::ParseError("cannot write " + out_path);
    out << text;
}

chg::ProjectivePoint parse_point_flag(const std::string& s) {
    if (s == "inf") return chg::ProjectivePoint::infinity();
    double v[4] = {0, 0, 0, 0};
    std::istringstream ss(s);
    char comma;
    for (int i = 0; i < 4; ++i) {
        if (!(ss >> v[i])) throw chg::ParseError("--point expects re1,im1,re2,im2 or inf");
        if (i < 3 && !(ss >> comma)) throw chg::ParseError("--point expects 4 comma-separated values");
    }
    return chg::ProjectivePoint::from_finite({chg::Cx{v[0], v[1]}, chg::Cx{v[2], v[3]}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex hyperbolic geometry toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, point_flag = "inf", kind = "r";
    int radius = 4, count = 2;
    std::uint64_t seed = 0;
    double perturb = 1e-3;
    chg::reports::DetectOptions opt;
    double tol_grp = -1, tol_tr = -1, tol_cert = -1;

    const auto add_tols = [&](CLI::App* cmd) {
        cmd->add_option("--tol-grp", tol_grp, "validation tolerance override");
        cmd->add_option("--tol-tr", tol_tr, "trace-realness tolerance override");
        cmd->add_option("--tol-cert", tol_cert, "certification tolerance override");
    };

    auto* v = app.add_subcommand("validate", "check generators against the group identities");
    v->add_option("file", file)->required();

    auto* c = app.add_subcommand("classify", "loxodromic/parabolic/elliptic per generator");
    c->add_option("file", file)->required();

    auto* ca = app.add_subcommand("cartan", "angular invariant of boundary triples");
    ca->add_option("file", file)->required();

    auto* cr = app.add_subcommand("cross", "cross-ratio triple and coplanarity per quadruple");
    cr->add_option("file", file)->required();

    auto* au = app.add_subcommand("audit", "trace-realness audit over the word ball");
    au->add_option("file", file)->required();
    au->add_option("--radius", radius, "word-ball radius");
    add_tols(au);

    auto* de = app.add_subcommand("detect", "decide the invariant-submanifold question");
    de->add_option("file", file)->required();
    de->add_option("--radius", radius, "word-ball radius");
    add_tols(de);

    auto* fx = app.add_subcommand("fixtures", "emit labeled generator files");
    fx->add_option("--kind", kind, "r | c | near-miss")->check(CLI::IsMember({"r", "c", "near-miss"}));
    fx->add_option("--seed", seed, "conjugation seed");
    fx->add_option("--count", count, "number of generators");
    fx->add_option("--perturb", perturb, "near-miss perturbation magnitude");
    fx->add_option("--out", out_path, "output path (default: stdout)");

    auto* ob = app.add_subcommand("orbit", "word-ball orbit of a point, CSV");
    ob->add_option("file", file)->required();
    ob->add_option("--point", point_flag, "re1,im1,re2,im2 or inf");
    ob->add_option("--radius", radius, "word-ball radius");
    ob->add_option("--out", out_path, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    opt.radius = radius;
    if (tol_grp > 0) opt.tol_grp = tol_grp;
    if (tol_tr > 0) opt.tol_tr = tol_tr;
    if (tol_cert > 0) opt.tol_cert = tol_cert;

    const auto started = std::chrono::steady_clock::now();
    try {
        std::string report;
        if (v->parsed()) report = chg::reports::validate_report(slurp(file));
        else if (c->parsed()) report = chg::reports::classify_report(slurp(file));
        else if (ca->parsed()) report = chg::reports::cartan_report(slurp(file));
        else if (cr->parsed()) report = chg::reports::cross_report(slurp(file));
        else if (au->parsed()) report = chg::reports::audit_report(slurp(file), opt);
        else if (de->parsed()) report = chg::reports::detect_report(slurp(file), opt);
        else if (fx->parsed()) {
            const auto k = kind == "r"   ? chg::fixtures::FixtureKind::RFuchsian
                           : kind == "c" ? chg::fixtures::FixtureKind::CFuchsian
                                         : chg::fixtures::FixtureKind::NearMiss;
            report = chg::reports::fixtures_file(k, seed, count, perturb);
        } else if (ob->parsed()) {
            report = chg::reports::orbit_csv(slurp(file), parse_point_flag(point_flag), radius);
        }
        deliver(report, out_path);
    } catch (const chg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "wall_time_ms " << elapsed.count() << '\n';
    return 0;
}
