#pragma once

#include <cstdint>
#include <vector>

#include "latcode/construction.hpp"

namespace latcode {

/// Theta-series prefix: counts[m] = #{x in L : b(x,x) = m}, 0 <= m <= M.
struct ThetaPrefix {
    int M = 0;
    std::vector<std::int64_t> counts;
};

struct ShortVectors {
    std::int64_t mu = 0;       // minimum
    std::int64_t kissing = 0;  // count at the minimum, +/-x counted separately
};

enum class Parity { Even, Odd };

enum class CertVerdict { Certified, NotThisSimilarity };

/// Witness for L* = (1/sqrt(d)) L: T_ij = b_alpha(basis_i/sqrt(d), basis_j).
/// Certified iff T is integral with |det T| = 1.
struct ModularityCertificate {
    long level = 0;
    RatMat T;
    CertVerdict verdict = CertVerdict::NotThisSimilarity;
};

struct SecrecyReport {
    int n = 0;
    long level = 0;
    double numerator = 0;    // (sum_k e^{-pi k^2})^n
    double denominator = 0;  // sum_m A_m e^{-pi m / sqrt(d)}
    double chi = 0;
    int cutoff = 0;
    double tail_estimate = 0;
    double growth_factor = 1;
};

bool is_integral(const LatticeDesc& latt);

/// Requires is_integral; Even iff all diagonal Gram entries are even.
Parity parity(const LatticeDesc& latt);

/// Prop.-even criterion on the lifted I + A A^T diagonal (real quadratic,
/// self-dual code). Imaginary inputs throw Unsupported.
bool predict_evenness(const ConstructionInput& input);

ModularityCertificate modularity_certificate(const LatticeDesc& latt, long d);

bool is_unimodular(const LatticeDesc& latt);

/// Exact minimum and kissing number by branch-and-bound enumeration over a
/// floating Cholesky factorization; candidates re-verified exactly.
ShortVectors shortest_vectors(const RatMat& gram);

ThetaPrefix theta_prefix(const RatMat& gram, int M);

/// min{p, min_{c != 0} b_alpha(c-hat, c-hat)} over balanced lifts; real
/// quadratic, d = 2,3 mod 4, self-dual code, q^k enumerable.
std::int64_t minimum_via_code(const ConstructionInput& input);

/// Weak secrecy gain chi_W = Theta_{d^{1/4} Z^n}(i/sqrt(d)) / Theta_L(i/sqrt(d)).
/// Throws NeedLargerPrefix when the tail bound exceeds tol.
SecrecyReport weak_secrecy_gain(const ThetaPrefix& theta, long d, int n, double tol = 1e-6);

/// b_alpha(x, basis_j) integral for all j.
bool dual_membership(const LatticeDesc& latt, const std::vector<QElem>& x);

}  // namespace latcode
