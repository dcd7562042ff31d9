#include "chg/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace chg {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!counts_.empty() && counts_.back() > 0) out_ += ',';
    if (!counts_.empty()) ++counts_.back();
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    counts_.push_back(0);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    counts_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    counts_.push_back(0);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    counts_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    if (!counts_.empty() && counts_.back() > 0) out_ += ',';
    if (!counts_.empty()) ++counts_.back();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    separator();
    out_ += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::value(double x) {
    separator();
    out_ += format_double(x);
    return *this;
}

JsonWriter& JsonWriter::value(long x) {
    separator();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    separator();
    out_ += b ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null() {
    separator();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value(Cx z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
}

JsonWriter& JsonWriter::value(const Vector3& v) {
    begin_array();
    value(v.v1);
    value(v.v2);
    value(v.v3);
    return end_array();
}

JsonWriter& JsonWriter::value(const Matrix3& m) {
    begin_array();
    for (int i = 0; i < 3; ++i) {
        begin_array();
        for (int k = 0; k < 3; ++k) value(m(i, k));
        end_array();
    }
    return end_array();
}

std::string JsonWriter::take() { return std::move(out_); }

namespace {

using nlohmann::json;

Cx parse_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(what) + ": expected a [re, im] pair");
    return Cx{j[0].get<double>(), j[1].get<double>()};
}

Matrix3 parse_matrix(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("matrix: expected 3 rows");
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 3)
            throw ParseError("matrix: expected 3 entries per row");
        for (int k = 0; k < 3; ++k)
            m(i, k) = parse_complex(row[static_cast<size_t>(k)], "matrix entry");
    }
    return m;
}

json parse_root(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    if (!j.is_object()) throw ParseError("expected a top-level object");
    return j;
}

}  // namespace

GeneratorFile parse_generator_file(const std::string& text) {
    const json j = parse_root(text);
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw ParseError("generator file: missing non-empty \"generators\" array");

    GeneratorFile f;
    for (const json& g : j["generators"]) {
        if (!g.is_object() || !g.contains("label") || !g["label"].is_string() ||
            !g.contains("matrix"))
            throw ParseError("generator: expected {\"label\", \"matrix\"}");
        f.generators.emplace_back(g["label"].get<std::string>(), parse_matrix(g["matrix"]));
    }
    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object()) throw ParseError("tolerances: expected an object");
        if (t.contains("grp")) f.tol_grp = t["grp"].get<double>();
        if (t.contains("tr")) f.tol_tr = t["tr"].get<double>();
        if (t.contains("cert")) f.tol_cert = t["cert"].get<double>();
    }
    return f;
}

PointFile parse_points_file(const std::string& text) {
    const json j = parse_root(text);
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("points file: missing \"points\" array");

    PointFile f;
    for (const json& p : j["points"]) {
        if (p.is_string()) {
            if (p.get<std::string>() != "inf")
                throw ParseError("point: unknown token \"" + p.get<std::string>() + "\"");
            f.points.push_back(ProjectivePoint::infinity());
            continue;
        }
        if (!p.is_array() || p.size() != 2)
            throw ParseError("point: expected \"inf\" or [z1, z2]");
        const Cx z1 = parse_complex(p[0], "z1");
        const Cx z2 = parse_complex(p[1], "z2");
        f.points.push_back(ProjectivePoint::from_finite({z1, z2}));
    }
    return f;
}

}  // namespace chg
