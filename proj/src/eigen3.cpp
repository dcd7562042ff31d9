#include "chg/eigen3.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace chg {

namespace {

Cx eval_poly(Cx c2, Cx c1, Cx c0, Cx x) { return ((x - c2) * x + c1) * x - c0; }

Cx eval_dpoly(Cx c2, Cx c1, Cx x) { return (3.0 * x - 2.0 * c2) * x + c1; }

// Bilinear (unconjugated) cross product: orthogonal to both arguments under
// the plain dot product, hence in the kernel of a rank-2 matrix when the
// arguments are two of its rows.
Vector3 bilinear_cross(const Vector3& a, const Vector3& b) {
    return {a.v2 * b.v3 - a.v3 * b.v2, a.v3 * b.v1 - a.v1 * b.v3,
            a.v1 * b.v2 - a.v2 * b.v1};
}

Vector3 unit(const Vector3& v) {
    const double n = v.euclid_norm();
    return v / Cx{n};
}

// Kernel basis of b = m - lambda*I, thresholded against the scale of m
// itself. The rank-2 cutoff sits well above the shift-placement noise of a
// repeated eigenvalue (~1e-8 * scale after Cardano) and well below the
// cross-product magnitude of an honestly defective Jordan block.
std::vector<Vector3> kernel_basis(const Matrix3& b, double outer_scale) {
    const double scale = std::max(outer_scale, 1.0);
    const Vector3 r0 = b.row(0), r1 = b.row(1), r2 = b.row(2);
    const Vector3 c01 = bilinear_cross(r0, r1);
    const Vector3 c02 = bilinear_cross(r0, r2);
    const Vector3 c12 = bilinear_cross(r1, r2);
    double best = 0.0;
    Vector3 bestv{};
    for (const Vector3* c : {&c01, &c02, &c12}) {
        if (c->euclid_norm() > best) { best = c->euclid_norm(); bestv = *c; }
    }
    if (best > 1e-6 * scale * scale) return {unit(bestv)};  // rank 2

    double rbest = 0.0;
    Vector3 r{};
    for (const Vector3* row : {&r0, &r1, &r2}) {
        if (row->euclid_norm() > rbest) { rbest = row->euclid_norm(); r = *row; }
    }
    if (rbest <= 1e-9 * scale) {
        // Rank 0: the kernel is all of C^3.
        return {Vector3{1, 0, 0}, Vector3{0, 1, 0}, Vector3{0, 0, 1}};
    }
    // Rank 1: the kernel is the plane bilinearly orthogonal to the largest row.
    const Vector3 cand[3] = {{-r.v2, r.v1, Cx{0}}, {-r.v3, Cx{0}, r.v1}, {Cx{0}, -r.v3, r.v2}};
    int i0 = 0, i1 = 1;
    double n0 = -1.0, n1 = -1.0;
    for (int i = 0; i < 3; ++i) {
        const double n = cand[i].euclid_norm();
        if (n > n0) { i1 = i0; n1 = n0; i0 = i; n0 = n; }
        else if (n > n1) { i1 = i; n1 = n; }
    }
    Vector3 k0 = unit(cand[i0]);
    // Gram-Schmidt in the standard inner product for conditioning.
    Vector3 k1 = cand[i1];
    const Cx proj = std::conj(k0.v1) * k1.v1 + std::conj(k0.v2) * k1.v2 + std::conj(k0.v3) * k1.v3;
    k1 = k1 - k0 * proj;
    if (k1.euclid_norm() < 1e-10 * scale) return {k0};
    return {k0, unit(k1)};
}

}  // namespace

std::array<Cx, 3> cubic_roots(Cx c2, Cx c1, Cx c0) {
    // Depress: lambda = mu + c2/3 gives mu^3 + p*mu + q = 0.
    const Cx s = c2 / 3.0;
    const Cx p = c1 - c2 * c2 / 3.0;
    const Cx q = ((s - c2) * s + c1) * s - c0;

    // Root-magnitude scale of the polynomial, for relative thresholds.
    const double sigma = std::max({1.0, std::abs(c2), std::sqrt(std::abs(c1)),
                                   std::cbrt(std::abs(c0))});

    std::array<Cx, 3> mu;
    const Cx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    // Pick the sign that avoids cancellation in -q/2 +- disc.
    const Cx w = (std::abs(-q / 2.0 + disc) > std::abs(-q / 2.0 - disc))
                     ? -q / 2.0 + disc
                     : -q / 2.0 - disc;
    const Cx croot = std::pow(w, 1.0 / 3.0);
    if (std::abs(croot) < 1e-300) {
        mu = {Cx{0}, Cx{0}, Cx{0}};  // p = q = 0: exact triple root
    } else {
        const Cx omega{-0.5, std::sqrt(3.0) / 2.0};
        Cx ck = croot;
        for (int k = 0; k < 3; ++k) {
            mu[k] = ck - p / (3.0 * ck);
            ck *= omega;
        }
    }

    std::array<Cx, 3> roots;
    for (int k = 0; k < 3; ++k) {
        Cx x = mu[k] + s;
        // One Newton correction; skipped near critical points, where the
        // update would amplify rather than damp the multiple-root noise.
        const Cx d = eval_dpoly(c2, c1, x);
        if (std::abs(d) > 1e-8 * sigma * sigma) {
            x -= eval_poly(c2, c1, c0, x) / d;
        }
        roots[k] = x;
    }
    return roots;
}

EigenDecomposition eigen_decompose(const Matrix3& m, double eps) {
    const Cx c2 = m.trace();
    const Cx tr2 = (m * m).trace();
    const Cx c1 = (c2 * c2 - tr2) / 2.0;
    const Cx c0 = m.det();
    std::array<Cx, 3> lam = cubic_roots(c2, c1, c0);

    std::sort(lam.begin(), lam.end(), [](Cx a, Cx b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });

    const double cluster_tol = root_cluster_tolerance(eps, std::abs(lam[0]));
    int cluster_of[3] = {0, 0, 0};
    int n_clusters = 0;
    for (int i = 0; i < 3; ++i) {
        int found = -1;
        for (int k = 0; k < i; ++k) {
            if (std::abs(lam[i] - lam[k]) <= cluster_tol) { found = cluster_of[k]; break; }
        }
        cluster_of[i] = (found >= 0) ? found : n_clusters++;
    }

    EigenDecomposition out;
    out.values = lam;
    out.defective = false;

    for (int c = 0; c < n_clusters; ++c) {
        std::vector<int> members;
        Cx mean{0};
        for (int i = 0; i < 3; ++i)
            if (cluster_of[i] == c) { members.push_back(i); mean += lam[i]; }
        mean /= static_cast<double>(members.size());

        const Matrix3 b = m - Matrix3::identity() * mean;
        const std::vector<Vector3> kernel = kernel_basis(b, m.max_abs());
        if (kernel.size() < members.size()) out.defective = true;
        for (size_t k = 0; k < members.size(); ++k) {
            out.vectors[members[k]] = kernel[std::min(k, kernel.size() - 1)];
        }
    }
    return out;
}

Vector3 refine_eigenvector(const Matrix3& m, Cx lambda, const Vector3& v) {
    const Matrix3 b = m - Matrix3::identity() * lambda;
    const double scale = std::max(b.max_abs(), 1.0);
    Cx a[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) a[i][k] = b(i, k);
        a[i][3] = v[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[pivot][k]);
        // The system is meant to be nearly singular; a vanishing pivot is
        // nudged so the solve amplifies along the eigendirection.
        if (std::abs(a[col][col]) < 1e-300) a[col][col] = Cx{1e-30 * scale};
        for (int r = col + 1; r < 3; ++r) {
            const Cx factor = a[r][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[r][k] -= factor * a[col][k];
        }
    }
    Vector3 w;
    for (int i = 2; i >= 0; --i) {
        Cx sum = a[i][3];
        for (int k = i + 1; k < 3; ++k) sum -= a[i][k] * w[k];
        w[i] = sum / a[i][i];
    }
    const double n = w.euclid_norm();
    if (!(n > 0.0) || !std::isfinite(n)) return v;
    return w / Cx{n};
}

double smallest_singular_value(const Matrix3& m) {
    const Matrix3 g = m.conj_transpose() * m;  // Hermitian PSD, real spectrum
    const std::array<Cx, 3> lam =
        cubic_roots(g.trace(), (g.trace() * g.trace() - (g * g).trace()) / 2.0, g.det());
    double lo = std::abs(lam[0]);
    for (const Cx& l : lam) lo = std::min(lo, std::max(0.0, l.real()));
    return std::sqrt(lo);
}

}  // namespace chg
