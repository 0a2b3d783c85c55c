#include "latcode/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace latcode {

bool is_integral(const LatticeDesc& latt) { return rat_is_integer_matrix(latt.gram); }

Parity parity(const LatticeDesc& latt) {
    if (!is_integral(latt)) throw PreconditionFailed("parity needs an integral lattice");
    for (std::size_t i = 0; i < latt.gram.size(); ++i) {
        Rat half = latt.gram[i][i] / 2;
        if (!rat_is_integer(half)) return Parity::Odd;
    }
    return Parity::Even;
}

bool predict_evenness(const ConstructionInput& in) {
    if (in.field.imaginary()) throw Unsupported("evenness criterion is for the real case");
    if (!is_self_dual(in.code)) throw PreconditionFailed("criterion needs a self-dual code");
    if (!(in.p() == 2 && ((in.field.D % 8) + 8) % 8 == 5)) return false;
    // diag(I + A-hat A-hat^T) must lie in 4 O_K
    auto Ahat = lift_matrix(in.code);
    for (int i = 0; i < in.k(); ++i) {
        QElem s = in.field.one();
        for (int l = 0; l < in.N() - in.k(); ++l) s = s + Ahat[i][l] * Ahat[i][l];
        auto [u, t] = in.field.ok_coords(s);
        if (!rat_is_integer(u / 4) || !rat_is_integer(t / 4)) return false;
    }
    return true;
}

ModularityCertificate modularity_certificate(const LatticeDesc& latt, long d) {
    if (d <= 0) throw InvalidInput("level must be positive");
    ModularityCertificate cert;
    cert.level = d;
    std::size_t n = latt.kbasis.size();
    cert.T.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        // Scale the first slot by sqrt(D)/d, which stays inside K:
        // (a + b sqrt(D)) * sqrt(D)/d = bD/d + (a/d) sqrt(D).
        // At d = |D| real this is x/sqrt(d); imaginary it is i*x/sqrt(d),
        // and multiplication by i preserves the Hermitian pairing, so the
        // certificate still witnesses the x -> x/sqrt(d) similarity.
        std::vector<QElem> scaled;
        scaled.reserve(latt.kbasis[i].size());
        for (const QElem& x : latt.kbasis[i])
            scaled.emplace_back(x.b * latt.D / d, x.a / d, latt.D);
        for (std::size_t j = 0; j < n; ++j)
            cert.T[i][j] = b_alpha(latt.alpha, scaled, latt.kbasis[j]);
    }
    Rat det = rat_det(cert.T);
    bool ok = rat_is_integer_matrix(cert.T) && (det == 1 || det == -1);
    cert.verdict = ok ? CertVerdict::Certified : CertVerdict::NotThisSimilarity;
    return cert;
}

bool is_unimodular(const LatticeDesc& latt) {
    return is_integral(latt) && rat_det(latt.gram) == 1;
}

namespace {

struct Enumerator {
    int n = 0;
    std::vector<std::vector<double>> u;  // unit upper-triangular factors
    std::vector<double> diag;            // positive pivots
    const RatMat* gram = nullptr;
    double bound = 0;

    // Visit every nonzero x with quadratic form <= bound (float, inflated).
    void run(const std::function<void(const std::vector<long>&)>& visit) const {
        std::vector<long> x(n, 0);
        std::vector<double> shift(n, 0.0);  // sum_{j>i} u_ij x_j
        descend(n - 1, bound, x, shift, visit);
    }

    void descend(int i, double radius, std::vector<long>& x, std::vector<double>& shift,
                 const std::function<void(const std::vector<long>&)>& visit) const {
        double center = -shift[i];
        double half = std::sqrt(std::max(0.0, radius / diag[i]));
        long lo = static_cast<long>(std::ceil(center - half - 1e-9));
        long hi = static_cast<long>(std::floor(center + half + 1e-9));
        for (long xi = lo; xi <= hi; ++xi) {
            double t = xi + shift[i];
            double used = diag[i] * t * t;
            if (used > radius + 1e-9) continue;
            x[i] = xi;
            if (i == 0) {
                bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
                if (!zero) visit(x);
            } else {
                std::vector<double> saved(i);
                for (int j = 0; j < i; ++j) {
                    saved[j] = shift[j];
                    shift[j] += u[j][i] * xi;
                }
                descend(i - 1, radius - used, x, shift, visit);
                for (int j = 0; j < i; ++j) shift[j] = saved[j];
            }
        }
        x[i] = 0;
    }
};

Enumerator make_enumerator(const RatMat& gram, double bound) {
    int n = static_cast<int>(gram.size());
    Enumerator e;
    e.n = n;
    e.gram = &gram;
    e.bound = bound * (1.0 + 1e-6) + 1e-9;
    // LDL^T on doubles: g = sum_k d_k u_ki u_kj, u unit upper-triangular
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = gram[i][j].get_d();
    e.u.assign(n, std::vector<double>(n, 0.0));
    e.diag.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double d = g[i][i];
        for (int k = 0; k < i; ++k) d -= e.diag[k] * e.u[k][i] * e.u[k][i];
        if (d < 1e-10) throw NotPositiveDefinite("Cholesky pivot " + std::to_string(d));
        e.diag[i] = d;
        e.u[i][i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double s = g[i][j];
            for (int k = 0; k < i; ++k) s -= e.diag[k] * e.u[k][i] * e.u[k][j];
            e.u[i][j] = s / d;
        }
    }
    return e;
}

Rat exact_norm(const RatMat& gram, const std::vector<long>& x) {
    int n = static_cast<int>(gram.size());
    Rat total = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n; ++j)
            if (x[j] != 0) row += gram[i][j] * Rat(x[j]);
        total += Rat(x[i]) * row;
    }
    return total;
}

}  // namespace

ShortVectors shortest_vectors(const RatMat& gram) {
    int n = static_cast<int>(gram.size());
    if (n == 0) throw InvalidInput("empty Gram matrix");
    double bound = gram[0][0].get_d();
    for (int i = 1; i < n; ++i) bound = std::min(bound, gram[i][i].get_d());
    Enumerator e = make_enumerator(gram, bound);
    Rat best = 0;
    std::int64_t count = 0;
    e.run([&](const std::vector<long>& x) {
        Rat norm = exact_norm(gram, x);
        if (norm <= 0) throw InternalInconsistency("nonpositive norm in enumeration");
        if (count == 0 || norm < best) {
            best = norm;
            count = 1;
        } else if (norm == best) {
            ++count;
        }
    });
    if (count == 0) throw InternalInconsistency("no vector within the diagonal bound");
    ShortVectors out;
    if (!rat_is_integer(best))
        throw Unsupported("minimum is not an integer for this form");
    out.mu = best.get_num().get_si();
    out.kissing = count;
    return out;
}

ThetaPrefix theta_prefix(const RatMat& gram, int M) {
    if (M < 0) throw InvalidInput("negative cutoff");
    ThetaPrefix theta;
    theta.M = M;
    theta.counts.assign(M + 1, 0);
    theta.counts[0] = 1;
    if (M == 0) return theta;
    Enumerator e = make_enumerator(gram, static_cast<double>(M));
    e.run([&](const std::vector<long>& x) {
        Rat norm = exact_norm(gram, x);
        if (!rat_is_integer(norm)) return;
        Int m = norm.get_num();
        if (m >= 1 && m <= M) ++theta.counts[m.get_si()];
    });
    return theta;
}

std::int64_t minimum_via_code(const ConstructionInput& in) {
    const QuadField& field = in.field;
    long dmod4 = ((field.D % 4) + 4) % 4;
    if (field.imaginary() || dmod4 == 1)
        throw Unsupported("code-minimum formula needs a real field with d = 2,3 mod 4");
    if (!is_self_dual(in.code)) throw Unsupported("code-minimum formula needs a self-dual code");
    long p = in.p();
    if (in.alpha != Rat(1, 2 * p))
        throw Unsupported("code-minimum formula assumes the default alpha");
    Rat best = Rat(p);
    for (const auto& word : in.code.codewords()) {
        bool zero = true;
        for (const auto& c : word) zero = zero && c == in.code.F.zero();
        if (zero) continue;
        auto chat = lift(in.code, word);
        Rat norm = b_alpha(in.alpha, chat, chat);
        if (norm < best) best = norm;
    }
    if (!rat_is_integer(best)) throw InternalInconsistency("non-integer code minimum");
    return best.get_num().get_si();
}

SecrecyReport weak_secrecy_gain(const ThetaPrefix& theta, long d, int n, double tol) {
    if (d <= 0 || n <= 0) throw InvalidInput("need positive level and dimension");
    SecrecyReport rep;
    rep.n = n;
    rep.level = d;
    rep.cutoff = theta.M;

    double one_dim = 0;
    for (int k = -8; k <= 8; ++k) one_dim += std::exp(-M_PI * k * k);
    rep.numerator = std::pow(one_dim, n);

    double q = std::exp(-M_PI / std::sqrt(static_cast<double>(d)));
    double den = 0;
    for (int m = 0; m <= theta.M; ++m)
        den += static_cast<double>(theta.counts[m]) * std::pow(q, m);
    rep.denominator = den;

    // Geometric tail heuristic off the last nonzero count.
    int last = -1;
    std::vector<double> ratios;
    double prev = 0;
    for (int m = 1; m <= theta.M; ++m) {
        if (theta.counts[m] == 0) continue;
        if (prev > 0) ratios.push_back(static_cast<double>(theta.counts[m]) / prev);
        prev = static_cast<double>(theta.counts[m]);
        last = m;
    }
    double growth = 1.0;
    int use = std::min<int>(4, static_cast<int>(ratios.size()));
    for (int i = 0; i < use; ++i)
        growth = std::max(growth, ratios[ratios.size() - 1 - i]);
    rep.growth_factor = growth;
    if (last < 0) {
        rep.tail_estimate = std::pow(q, theta.M + 1) / (1 - q);
    } else {
        rep.tail_estimate = static_cast<double>(theta.counts[last]) * growth *
                            std::pow(q, theta.M + 1) / (1 - q);
    }
    if (!(rep.tail_estimate < tol)) {
        int suggested = theta.M + 4;
        throw NeedLargerPrefix("theta prefix too short; retry with M >= " +
                               std::to_string(suggested));
    }
    rep.chi = rep.numerator / rep.denominator;
    return rep;
}

bool dual_membership(const LatticeDesc& latt, const std::vector<QElem>& x) {
    for (const auto& row : latt.kbasis)
        if (!rat_is_integer(b_alpha(latt.alpha, x, row))) return false;
    return true;
}

}  // namespace latcode
