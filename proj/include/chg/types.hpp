#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace chg {

using Cx = std::complex<double>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vector in C^{2,1}. Coordinates are named after their position in the
/// standard lift (v1, v2, v3); projective representatives must be nonzero.
struct Vector3 {
    Cx v1{}, v2{}, v3{};

    Cx operator[](int i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
    Cx& operator[](int i) { return i == 0 ? v1 : (i == 1 ? v2 : v3); }

    Vector3 operator+(const Vector3& o) const { return {v1 + o.v1, v2 + o.v2, v3 + o.v3}; }
    Vector3 operator-(const Vector3& o) const { return {v1 - o.v1, v2 - o.v2, v3 - o.v3}; }
    Vector3 operator*(Cx s) const { return {v1 * s, v2 * s, v3 * s}; }
    Vector3 operator/(Cx s) const { return {v1 / s, v2 / s, v3 / s}; }

    double max_abs() const {
        return std::max({std::abs(v1), std::abs(v2), std::abs(v3)});
    }

    /// Euclidean (not Hermitian-form) norm; used only for conditioning.
    double euclid_norm() const {
        return std::sqrt(std::norm(v1) + std::norm(v2) + std::norm(v3));
    }
};

inline Vector3 operator*(Cx s, const Vector3& v) { return v * s; }

inline Vector3 conj(const Vector3& v) {
    return {std::conj(v.v1), std::conj(v.v2), std::conj(v.v3)};
}

/// Dense 3x3 complex matrix, row major. Small enough that everything is by
/// value; no external linear algebra needed at this scale.
struct Matrix3 {
    std::array<Cx, 9> e{};

    static Matrix3 identity() {
        Matrix3 m;
        m.e = {Cx{1}, Cx{0}, Cx{0}, Cx{0}, Cx{1}, Cx{0}, Cx{0}, Cx{0}, Cx{1}};
        return m;
    }

    static Matrix3 diagonal(Cx d1, Cx d2, Cx d3) {
        Matrix3 m;
        m.e = {d1, Cx{0}, Cx{0}, Cx{0}, d2, Cx{0}, Cx{0}, Cx{0}, d3};
        return m;
    }

    static Matrix3 from_rows(const Vector3& r1, const Vector3& r2, const Vector3& r3) {
        Matrix3 m;
        m.e = {r1.v1, r1.v2, r1.v3, r2.v1, r2.v2, r2.v3, r3.v1, r3.v2, r3.v3};
        return m;
    }

    static Matrix3 from_columns(const Vector3& c1, const Vector3& c2, const Vector3& c3) {
        Matrix3 m;
        m.e = {c1.v1, c2.v1, c3.v1, c1.v2, c2.v2, c3.v2, c1.v3, c2.v3, c3.v3};
        return m;
    }

    Cx operator()(int row, int col) const { return e[3 * row + col]; }
    Cx& operator()(int row, int col) { return e[3 * row + col]; }

    Vector3 row(int i) const { return {e[3 * i], e[3 * i + 1], e[3 * i + 2]}; }
    Vector3 column(int j) const { return {e[j], e[3 + j], e[6 + j]}; }

    Matrix3 operator*(const Matrix3& o) const {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                r(i, k) = (*this)(i, 0) * o(0, k) + (*this)(i, 1) * o(1, k) +
                          (*this)(i, 2) * o(2, k);
        return r;
    }

    Vector3 operator*(const Vector3& v) const {
        return {e[0] * v.v1 + e[1] * v.v2 + e[2] * v.v3,
                e[3] * v.v1 + e[4] * v.v2 + e[5] * v.v3,
                e[6] * v.v1 + e[7] * v.v2 + e[8] * v.v3};
    }

    Matrix3 operator+(const Matrix3& o) const {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    Matrix3 operator-(const Matrix3& o) const {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    Matrix3 operator*(Cx s) const {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = e[i] * s;
        return r;
    }

    Matrix3 conj_transpose() const {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r(i, k) = std::conj((*this)(k, i));
        return r;
    }

    Matrix3 conjugated_entries() const {
        Matrix3 r;
        for (int i = 0; i < 9; ++i) r.e[i] = std::conj(e[i]);
        return r;
    }

    Matrix3 transpose() const {
        Matrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r(i, k) = (*this)(k, i);
        return r;
    }

    Cx trace() const { return e[0] + e[4] + e[8]; }

    Cx det() const {
        return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    }

    double max_abs() const {
        double m = 0.0;
        for (const Cx& c : e) m = std::max(m, std::abs(c));
        return m;
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const Cx& c : e) m = std::max(m, std::abs(c.imag()));
        return m;
    }
};

inline double max_abs_diff(const Matrix3& a, const Matrix3& b) {
    return (a - b).max_abs();
}

/// Inverse via the adjugate; intended for general matrices (involutions,
/// test oracles). Group elements use their closed-form inverse instead.
inline Matrix3 general_inverse(const Matrix3& m) {
    const Cx d = m.det();
    if (std::abs(d) < 1e-300) throw Error("general_inverse: singular matrix");
    Matrix3 r;
    r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
    r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
    r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
    r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return r;
}

}  // namespace chg
