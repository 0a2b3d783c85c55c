#pragma once

#include <string>

#include "latcode/analysis.hpp"
#include "latcode/construction.hpp"

namespace latcode {

/// JSON object {D, p, alpha, dim, code: {q, N, k, rows}, gram: [["num/den"...]]};
/// exact and round-trippable.
std::string lattice_to_json(const LatticeDesc& latt);

/// Rebuilds the lattice from its provenance and checks the stored Gram
/// matches the recomputed one exactly.
LatticeDesc lattice_from_json(const std::string& text);

struct AnalysisReport {
    bool integral = false;
    std::optional<Parity> par;
    std::optional<std::int64_t> mu, kissing;
    std::vector<std::int64_t> theta;
    std::optional<SecrecyReport> secrecy;
    std::optional<ModularityCertificate> modularity;
    bool unimodular = false;
};

std::string report_to_json(const LatticeDesc& latt, const AnalysisReport& rep);

/// One table row, Markdown or CSV: label, dim, d, mu, ks, chi, theta[0..9].
std::string table_row(const std::string& label, int dim, long d, std::int64_t mu,
                      std::int64_t ks, double chi,
                      const std::vector<std::int64_t>& theta, bool csv);
std::string table_header(bool csv);

}  // namespace latcode
