#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latcode/qfield.hpp"

namespace latcode {

/// Element s + t*w of F_p (t = 0) or F_{p^2}.
struct FFElem {
    long s = 0;
    long t = 0;
    bool operator==(const FFElem& o) const { return s == o.s && t == o.t; }
};

/// F_p or F_{p^2} = F_p(w) with w^2 = m1*w + m0, together with the designated
/// lift of w into O_K and the induced reduction map rho.
struct FiniteField {
    long p = 2;
    int f = 1;
    long m1 = 0, m0 = 0;  // w^2 = m1*w + m0 (f = 2 only)
    QuadField field;      // number field the lift/reduction talks to
    QElem omega_lift;     // preimage of w in O_K (f = 2 only)
    FFElem rho_v;         // image of the O_K generator v

    long q() const { return f == 1 ? p : p * p; }

    FFElem zero() const { return {0, 0}; }
    FFElem one() const { return {1, 0}; }
    FFElem omega() const { return {0, 1}; }
    FFElem make(long s, long t = 0) const;

    FFElem add(const FFElem& x, const FFElem& y) const;
    FFElem sub(const FFElem& x, const FFElem& y) const;
    FFElem neg(const FFElem& x) const;
    FFElem mul(const FFElem& x, const FFElem& y) const;
    FFElem inv(const FFElem& x) const;  // throws DivisionByZero on 0

    /// Element with index i in [0, q): i = s + p*t.
    FFElem element(long i) const;
    long index(const FFElem& x) const { return x.s + p * x.t; }

    std::string to_string(const FFElem& x) const;
    FFElem parse(const std::string& text) const;

    /// Residue field of p inert/ramified in `field`, with the reduction map
    /// and lift fixed by the splitting:
    ///  - f = 1 (ramified): plain F_p, lift = balanced integer.
    ///  - f = 2, p odd: w^2 = D mod p, lift w -> sqrt(D).
    ///  - f = 2, p = 2: w = image of v, lift w -> v.
    static FiniteField residue_field(const QuadField& field, long p);

    /// Plain F_p with no number field attached; for code-only work.
    static FiniteField prime_field(long p);
};

bool ff_irreducible(long p, long m1, long m0);

/// Linear code over F in standard form (I_k | A).
struct LinearCode {
    FiniteField F;
    int N = 0;
    int k = 0;
    std::vector<std::vector<FFElem>> A;  // k x (N-k)

    std::vector<std::vector<FFElem>> generator_rows() const;  // k x N
    bool contains(const std::vector<FFElem>& word) const;
    /// Codeword for a length-k message vector.
    std::vector<FFElem> encode(const std::vector<FFElem>& message) const;
    /// All q^k codewords; guarded to q^k <= 10^7.
    std::vector<std::vector<FFElem>> codewords() const;
};

/// Row-reduces G to (I_k | A) without column permutations. Throws
/// RankDeficient or NotSystematic.
LinearCode standard_form(const FiniteField& F, std::vector<std::vector<FFElem>> G);

LinearCode dual_code(const LinearCode& C);
bool is_self_orthogonal(const LinearCode& C);
bool is_self_dual(const LinearCode& C);

/// Balanced-residue lift into O_K^N: c_i = s + t*w -> s* + t* * lift(w) with
/// s*, t* in {-(p-1)/2, ..., (p-1)/2}.
std::vector<QElem> lift(const LinearCode& C, const std::vector<FFElem>& codeword);
QElem lift_elem(const FiniteField& F, const FFElem& c);
std::vector<std::vector<QElem>> lift_matrix(const LinearCode& C);

/// Componentwise reduction mod the prime ideal; section of lift.
FFElem rho_elem(const FiniteField& F, const QElem& x);
std::vector<FFElem> rho(const FiniteField& F, const std::vector<QElem>& v);

/// Randomized completion search for a self-dual code of even length N.
/// Deterministic for fixed seed; throws SearchFailed when the budget runs out.
LinearCode search_self_dual(const FiniteField& F, int N, std::uint64_t seed,
                            long budget = 200000);

/// Same restart search for a self-orthogonal (I_k | A) with given k <= N/2.
LinearCode search_self_orthogonal(const FiniteField& F, int N, int k,
                                  std::uint64_t seed, long budget = 200000);

/// Plain-text code format: header "q N k", then k generator rows, entries
/// "s" or "s+t*w" separated by spaces.
std::string code_to_text(const LinearCode& C);
LinearCode code_from_text(const FiniteField& F, std::istream& in);

}  // namespace latcode
