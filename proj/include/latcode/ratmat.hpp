#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latcode/errors.hpp"

namespace latcode {

using Int = mpz_class;
using Rat = mpq_class;

using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

/// Parses "num" or "num/den"; throws ParseError on garbage.
Rat rat_from_string(const std::string& s);

RatMat rat_identity(std::size_t n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_transpose(const RatMat& a);

/// Determinant by fraction-free-ish Gaussian elimination (exact).
Rat rat_det(const RatMat& m);

/// Inverse; throws RankDeficient if singular.
RatMat rat_inverse(const RatMat& m);

bool rat_is_integer_matrix(const RatMat& m);

/// True iff the symmetric matrix has all-positive pivots in an exact
/// LDL^T factorization, i.e. is positive definite.
bool rat_positive_definite(const RatMat& g);

}  // namespace latcode
