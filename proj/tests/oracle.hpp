#pragma once

// Test-only brute-force oracle: counts lattice vectors of each norm by
// scanning an integer coordinate box whose radius comes from a lower bound
// on the smallest eigenvalue of the Gram matrix. Independent of the
// branch-and-bound enumeration used by the library.

#include <cmath>
#include <cstdint>
#include <vector>

#include "latcode/ratmat.hpp"

namespace latcode {

inline double oracle_min_eigenvalue(const RatMat& gram) {
    int n = static_cast<int>(gram.size());
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = gram[i][j].get_d();
    // Jacobi eigenvalue iteration
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    double lm = a[0][0];
    for (int i = 1; i < n; ++i) lm = std::min(lm, a[i][i]);
    return lm;
}

/// counts[m] = #{x : x^T G x = m} for 0 <= m <= M, by exhaustive box scan.
/// Per-coordinate radii use the classical dual bound x_i^2 <= M (G^-1)_ii,
/// cross-checked against the eigenvalue ball so the box provably covers all
/// vectors of norm <= M. Candidates are filtered in doubles and counted in
/// exact arithmetic.
inline std::vector<std::int64_t> oracle_theta_box(const RatMat& gram, int M) {
    int n = static_cast<int>(gram.size());
    RatMat ginv = rat_inverse(gram);
    double ball = std::sqrt(M / oracle_min_eigenvalue(gram)) + 1e-9;
    std::vector<long> radius(n);
    for (int i = 0; i < n; ++i) {
        double r = std::sqrt(M * ginv[i][i].get_d()) + 1e-9;
        radius[i] = static_cast<long>(std::floor(std::min(r, ball)));
    }
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = gram[i][j].get_d();
    std::vector<std::int64_t> counts(M + 1, 0);
    std::vector<long> x(n);
    for (int i = 0; i < n; ++i) x[i] = -radius[i];
    for (;;) {
        double approx = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            double row = 0;
            for (int j = 0; j < n; ++j)
                if (x[j] != 0) row += g[i][j] * x[j];
            approx += x[i] * row;
        }
        if (approx <= M + 0.5) {
            Rat norm = 0;
            for (int i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (x[j] != 0) norm += gram[i][j] * Rat(x[i]) * Rat(x[j]);
            }
            if (rat_is_integer(norm) && norm >= 0 && norm <= M)
                ++counts[norm.get_num().get_si()];
        }
        int pos = 0;
        while (pos < n && ++x[pos] > radius[pos]) x[pos] = -radius[pos], ++pos;
        if (pos == n) break;
    }
    return counts;
}

}  // namespace latcode
