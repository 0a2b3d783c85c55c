#pragma once

#include <optional>
#include <vector>

#include "latcode/codes.hpp"
#include "latcode/qfield.hpp"

namespace latcode {

struct ConstructionInput {
    QuadField field;
    PrimeSplit split;
    IdealZBasis ideal;
    LinearCode code;
    Rat alpha;

    long p() const { return split.p; }
    int N() const { return code.N; }
    int k() const { return code.k; }
};

/// alpha = 1/p or 1/(2p) depending on d mod 4, per the real (inert) and
/// imaginary (totally ramified) constructions.
Rat alpha_default(const QuadField& field, long p);

/// Validates the (field, prime, code) triple and fills in the split/ideal
/// data. Real fields need an inert prime and a code over F_{p^2}; imaginary
/// fields a totally ramified prime and a code over F_p.
ConstructionInput make_input(const QuadField& field, long p, LinearCode code,
                             std::optional<Rat> alpha = std::nullopt);

/// Construction-A lattice: K-module basis rows, exact Gram, float generator.
struct LatticeDesc {
    int dim = 0;
    std::vector<std::vector<QElem>> kbasis;  // dim rows, N columns in K
    RatMat gram;                             // exact, b_alpha pairings
    std::vector<std::vector<double>> genmat;
    // provenance
    long D = 0;
    long p = 0;
    Rat alpha;
    LinearCode code;

    bool imaginary() const { return D < 0; }
};

/// Sum_i Tr(alpha * x_i * bar(y_i)); bar is conjugation when D < 0.
Rat b_alpha(const Rat& alpha, const std::vector<QElem>& x, const std::vector<QElem>& y);

LatticeDesc build_lattice(const ConstructionInput& input);

/// Exact Gram via the closed block forms (real and CM), asserted equal to the
/// pairing computation; mismatch throws InternalInconsistency.
RatMat gram_exact(const ConstructionInput& input);

/// Float generator rows of the alternative self-dual-case generator matrix
/// (real quadratic only). Verifies exactly that it spans the same Z-module.
std::vector<std::vector<double>> alt_generator_selfdual(const ConstructionInput& input);

/// det(gram) == Delta^N * p^{2f(N-k)} * N(alpha)^N, exactly.
bool check_volume(const LatticeDesc& latt);

/// Integer/rational coordinate matrix of the K-basis rows over the 2N-dim
/// {1, v}-per-coordinate Z-basis of O_K^N.
RatMat kbasis_coords(const QuadField& field, const std::vector<std::vector<QElem>>& rows);

}  // namespace latcode
