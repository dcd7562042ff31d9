#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chg/hermitian.hpp"
#include "chg/types.hpp"

namespace chg {

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// %.17g: enough digits to round-trip any double exactly.
std::string format_double(double x);

/// FNV-1a (64-bit) content digest, rendered as "fnv1a64:<hex>".
std::string content_digest(const std::string& bytes);

/// Minimal streaming JSON emitter with fixed float formatting so that
/// identical values always produce identical bytes. Keys are emitted in
/// call order; no escaping beyond the characters reports actually use.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& value(double x);
    JsonWriter& value(long x);
    JsonWriter& value(int x) { return value(static_cast<long>(x)); }
    JsonWriter& value(bool b);
    JsonWriter& null();
    JsonWriter& value(Cx z);              // [re, im]
    JsonWriter& value(const Vector3& v);  // [[re,im] x3]
    JsonWriter& value(const Matrix3& m);  // 3 rows of 3 pairs

    std::string take();

private:
    void separator();
    std::string out_;
    std::vector<int> counts_;  // items emitted at each nesting level
    bool pending_key_ = false;
};

/// Parsed generator file: labeled 3x3 matrices of [re, im] pairs with
/// optional tolerance overrides.
struct GeneratorFile {
    std::vector<std::pair<std::string, Matrix3>> generators;
    std::optional<double> tol_grp;
    std::optional<double> tol_tr;
    std::optional<double> tol_cert;
};

GeneratorFile parse_generator_file(const std::string& text);

/// Parsed points file: each entry is the token "inf" or a pair of complex
/// non-homogeneous coordinates.
struct PointFile {
    std::vector<ProjectivePoint> points;
};

PointFile parse_points_file(const std::string& text);

}  // namespace chg
