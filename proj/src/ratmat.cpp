#include "latcode/ratmat.hpp"

namespace latcode {

Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (x.get_den() == 0)
        throw ParseError("zero denominator: '" + s + "'");
    x.canonicalize();
    return x;
}

RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), mid = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat out(n, RatVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < mid; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

RatMat rat_transpose(const RatMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    RatMat out(m, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

Rat rat_det(const RatMat& mat) {
    RatMat m = mat;
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        while (piv < n && m[piv][i] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != i) {
            std::swap(m[piv], m[i]);
            det = -det;
        }
        det *= m[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            Rat f = m[r][i] / m[i][i];
            for (std::size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return det;
}

RatMat rat_inverse(const RatMat& mat) {
    std::size_t n = mat.size();
    RatMat m = mat;
    RatMat inv = rat_identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        while (piv < n && m[piv][i] == 0) ++piv;
        if (piv == n) throw RankDeficient("singular matrix");
        std::swap(m[piv], m[i]);
        std::swap(inv[piv], inv[i]);
        Rat d = m[i][i];
        for (std::size_t c = 0; c < n; ++c) {
            m[i][c] /= d;
            inv[i][c] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i || m[r][i] == 0) continue;
            Rat f = m[r][i];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[i][c];
                inv[r][c] -= f * inv[i][c];
            }
        }
    }
    return inv;
}

bool rat_is_integer_matrix(const RatMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!rat_is_integer(x)) return false;
    return true;
}

bool rat_positive_definite(const RatMat& g) {
    std::size_t n = g.size();
    RatMat m = g;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] <= 0) return false;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            Rat f = m[r][i] / m[i][i];
            for (std::size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return true;
}

}  // namespace latcode
