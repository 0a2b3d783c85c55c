#include "latcode/construction.hpp"

#include <cmath>

namespace latcode {

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Rat alpha_default(const QuadField& field, long p) {
    // real: 1/p iff d = 1 mod 4; imaginary: 1/p iff d = 3 mod 4. Both cases
    // coincide with D = 1 mod 4 for signed D.
    return mod_pos(field.D, 4) == 1 ? Rat(1, p) : Rat(1, 2 * p);
}

ConstructionInput make_input(const QuadField& field, long p, LinearCode code,
                             std::optional<Rat> alpha) {
    ConstructionInput in;
    in.field = field;
    in.split = splitting_type(field, p);
    if (field.imaginary()) {
        if (in.split.kind != SplitKind::Ramified)
            throw UnsupportedSplitting("imaginary case needs a totally ramified prime");
        if (code.F.f != 1)
            throw InvalidInput("imaginary case takes a code over F_p");
    } else {
        if (in.split.kind != SplitKind::Inert)
            throw UnsupportedSplitting("real case needs an inert prime");
        if (code.F.f != 2)
            throw InvalidInput("real case takes a code over F_{p^2}");
    }
    if (code.F.p != p) throw InvalidInput("code characteristic does not match p");
    // Rebind the code's reduction data to this field so lift/rho agree with
    // the ideal chosen here.
    FiniteField F = FiniteField::residue_field(field, p);
    if (F.f != code.F.f || (F.f == 2 && (F.m1 != code.F.m1 || F.m0 != code.F.m0))) {
        if (F.f == 2)
            throw InvalidInput("code is over an incompatible model of F_{p^2}");
    }
    code.F = F;
    in.ideal = ideal_basis_above(field, p);
    in.code = std::move(code);
    in.alpha = alpha ? *alpha : alpha_default(field, p);
    if (in.alpha <= 0) throw InvalidInput("alpha must be positive");
    return in;
}

Rat b_alpha(const Rat& alpha, const std::vector<QElem>& x, const std::vector<QElem>& y) {
    if (x.size() != y.size()) throw InvalidInput("vector length mismatch");
    Rat total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total += trace(alpha * (x[i] * pairing_bar(y[i])));
    return total;
}

namespace {

/// K-module basis rows: per message position i the rows theta*(e_i | A_i)
/// for theta in {1, v}; per parity position j the two ideal basis vectors
/// placed at coordinate k + j.
std::vector<std::vector<QElem>> assemble_kbasis(const ConstructionInput& in) {
    const QuadField& field = in.field;
    const int N = in.N(), k = in.k();
    auto Ahat = lift_matrix(in.code);
    std::vector<std::vector<QElem>> rows;
    rows.reserve(2 * N);
    const QElem thetas[2] = {field.one(), field.ok_gen};
    for (int i = 0; i < k; ++i)
        for (const QElem& th : thetas) {
            std::vector<QElem> row(N, field.zero());
            row[i] = th;
            for (int j = 0; j < N - k; ++j) row[k + j] = th * Ahat[i][j];
            rows.push_back(std::move(row));
        }
    for (int j = 0; j < N - k; ++j)
        for (int l = 0; l < 2; ++l) {
            std::vector<QElem> row(N, field.zero());
            row[k + j] = in.ideal.omega(field, l);
            rows.push_back(std::move(row));
        }
    return rows;
}

RatMat gram_from_pairings(const Rat& alpha, const std::vector<std::vector<QElem>>& rows) {
    std::size_t n = rows.size();
    RatMat g(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = b_alpha(alpha, rows[i], rows[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

}  // namespace

RatMat gram_exact(const ConstructionInput& in) {
    const QuadField& field = in.field;
    const int N = in.N(), k = in.k();
    const bool cm = field.imaginary();
    auto Ahat = lift_matrix(in.code);
    auto barred = [&](const QElem& x) { return cm ? conj(x) : x; };

    // S = I + A Abar^T over K (Abar = A entrywise under the pairing bar)
    std::vector<std::vector<QElem>> S(k, std::vector<QElem>(k, field.zero()));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            QElem s = (i == j) ? field.one() : field.zero();
            for (int l = 0; l < N - k; ++l) s = s + Ahat[i][l] * barred(Ahat[j][l]);
            S[i][j] = s;
        }

    const QElem theta[2] = {field.one(), field.ok_gen};
    const QElem omega[2] = {in.ideal.omega(field, 0), in.ideal.omega(field, 1)};
    const int dim = 2 * N;
    RatMat g(dim, std::vector<Rat>(dim));
    auto blk = [&](int row, int col, const QElem& coeff, const QElem* left,
                   const QElem* right) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Rat e = trace(in.alpha * (coeff * left[a] * barred(right[b])));
                g[row + a][col + b] = e;
                g[col + b][row + a] = e;
            }
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk(2 * i, 2 * j, S[i][j], theta, theta);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < N - k; ++j)
            blk(2 * i, 2 * k + 2 * j, Ahat[i][j], theta, omega);
    for (int j = 0; j < N - k; ++j)
        blk(2 * k + 2 * j, 2 * k + 2 * j, field.one(), omega, omega);

    RatMat check = gram_from_pairings(in.alpha, assemble_kbasis(in));
    if (g != check)
        throw InternalInconsistency("block Gram disagrees with the pairing Gram");
    return g;
}

LatticeDesc build_lattice(const ConstructionInput& in) {
    LatticeDesc latt;
    latt.D = in.field.D;
    latt.p = in.p();
    latt.alpha = in.alpha;
    latt.code = in.code;
    latt.dim = 2 * in.N();
    latt.kbasis = assemble_kbasis(in);
    latt.gram = gram_from_pairings(in.alpha, latt.kbasis);
    // Independent assembly path doubles as a consistency check.
    RatMat closed = gram_exact(in);
    if (closed != latt.gram)
        throw InternalInconsistency("Gram assembly paths disagree");

    double sa = std::sqrt(in.alpha.get_d());
    latt.genmat.assign(latt.dim, std::vector<double>(latt.dim, 0.0));
    for (int r = 0; r < latt.dim; ++r)
        for (int c = 0; c < in.N(); ++c) {
            auto e = embed(latt.kbasis[r][c]);
            latt.genmat[r][2 * c] = sa * e[0];
            latt.genmat[r][2 * c + 1] = sa * e[1];
        }
    for (int r = 0; r < latt.dim; ++r)
        for (int c = r; c < latt.dim; ++c) {
            double dot = 0;
            for (int l = 0; l < latt.dim; ++l) dot += latt.genmat[r][l] * latt.genmat[c][l];
            double exact = latt.gram[r][c].get_d();
            if (std::abs(dot - exact) > 1e-8 * std::max(1.0, std::abs(exact)))
                throw InternalInconsistency("float generator disagrees with exact Gram");
        }

    if (!check_volume(latt)) throw InternalInconsistency("volume formula violated");
    if (!rat_positive_definite(latt.gram))
        throw InternalInconsistency("Gram not positive definite");
    return latt;
}

bool check_volume(const LatticeDesc& latt) {
    QuadField field = make_field(latt.D);
    PrimeSplit split = splitting_type(field, latt.p);
    const int N = latt.code.N, k = latt.code.k;
    Rat expect = 1;
    Rat nalpha = latt.alpha * latt.alpha;  // N(alpha) for rational alpha
    for (int i = 0; i < N; ++i) expect *= Rat(field.disc) * nalpha;
    for (int i = 0; i < 2 * split.f * (N - k); ++i) expect *= latt.p;
    return rat_det(latt.gram) == expect;
}

RatMat kbasis_coords(const QuadField& field, const std::vector<std::vector<QElem>>& rows) {
    RatMat out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].reserve(2 * rows[i].size());
        for (const QElem& x : rows[i]) {
            auto [s, t] = field.ok_coords(x);
            out[i].push_back(s);
            out[i].push_back(t);
        }
    }
    return out;
}

std::vector<std::vector<double>> alt_generator_selfdual(const ConstructionInput& in) {
    if (in.field.imaginary())
        throw PreconditionFailed("alternative generator is for the real case");
    if (!is_self_dual(in.code)) throw PreconditionFailed("code must be self-dual");
    const QuadField& field = in.field;
    const int N = in.N(), k = in.k();
    auto Ahat = lift_matrix(in.code);
    const QElem theta[2] = {field.one(), field.ok_gen};
    // Rows: theta*(-A^T_i | e_i) for i < k, then theta*(p e_i | 0).
    std::vector<std::vector<QElem>> rows;
    rows.reserve(2 * N);
    for (int i = 0; i < k; ++i)
        for (const QElem& th : theta) {
            std::vector<QElem> row(N, field.zero());
            for (int j = 0; j < k; ++j) row[j] = -(th * Ahat[j][i]);
            row[k + i] = th;
            rows.push_back(std::move(row));
        }
    Rat pr(in.p());
    for (int i = 0; i < k; ++i)
        for (const QElem& th : theta) {
            std::vector<QElem> row(N, field.zero());
            row[i] = pr * th;
            rows.push_back(std::move(row));
        }

    // Same Z-span as the standard basis: the change of basis over the
    // {1, v}-per-coordinate Z-basis must be integral with determinant +-1.
    RatMat alt = kbasis_coords(field, rows);
    RatMat std_coords = kbasis_coords(field, assemble_kbasis(in));
    RatMat U = rat_mul(alt, rat_inverse(std_coords));
    if (!rat_is_integer_matrix(U)) throw InternalInconsistency("change of basis not integral");
    Rat du = rat_det(U);
    if (!(du == 1 || du == -1))
        throw InternalInconsistency("change of basis not unimodular");

    double sa = std::sqrt(in.alpha.get_d());
    std::vector<std::vector<double>> gen(2 * N, std::vector<double>(2 * N, 0.0));
    for (int r = 0; r < 2 * N; ++r)
        for (int c = 0; c < N; ++c) {
            auto e = embed(rows[r][c]);
            gen[r][2 * c] = sa * e[0];
            gen[r][2 * c + 1] = sa * e[1];
        }
    return gen;
}

}  // namespace latcode
