#include "latcode/serialize.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace latcode {

namespace {

using nlohmann::json;

json code_to_json(const LinearCode& code) {
    json rows = json::array();
    for (const auto& row : code.generator_rows()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(json::array({e.s, e.t}));
        rows.push_back(std::move(r));
    }
    return json{{"q", code.F.q()}, {"N", code.N}, {"k", code.k}, {"rows", std::move(rows)}};
}

json ratmat_to_json(const RatMat& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(rat_to_string(e));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::string lattice_to_json(const LatticeDesc& latt) {
    json j{{"D", latt.D},
           {"p", latt.p},
           {"alpha", rat_to_string(latt.alpha)},
           {"dim", latt.dim},
           {"code", code_to_json(latt.code)},
           {"gram", ratmat_to_json(latt.gram)}};
    return j.dump(2);
}

LatticeDesc lattice_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad lattice JSON: ") + e.what());
    }
    try {
        long D = j.at("D").get<long>();
        long p = j.at("p").get<long>();
        Rat alpha = rat_from_string(j.at("alpha").get<std::string>());
        QuadField field = make_field(D);
        FiniteField F = FiniteField::residue_field(field, p);
        const json& jc = j.at("code");
        std::vector<std::vector<FFElem>> G;
        for (const auto& row : jc.at("rows")) {
            std::vector<FFElem> r;
            for (const auto& e : row) r.push_back(F.make(e.at(0).get<long>(), e.at(1).get<long>()));
            G.push_back(std::move(r));
        }
        LinearCode code = standard_form(F, std::move(G));
        LatticeDesc latt = build_lattice(make_input(field, p, std::move(code), alpha));
        const json& jg = j.at("gram");
        if (static_cast<int>(jg.size()) != latt.dim)
            throw ParseError("stored Gram has the wrong size");
        for (int r = 0; r < latt.dim; ++r)
            for (int c = 0; c < latt.dim; ++c)
                if (rat_from_string(jg.at(r).at(c).get<std::string>()) != latt.gram[r][c])
                    throw ParseError("stored Gram disagrees with the rebuilt lattice");
        return latt;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad lattice JSON: ") + e.what());
    }
}

std::string report_to_json(const LatticeDesc& latt, const AnalysisReport& rep) {
    json j;
    j["D"] = latt.D;
    j["p"] = latt.p;
    j["dim"] = latt.dim;
    j["alpha"] = rat_to_string(latt.alpha);
    j["integral"] = rep.integral;
    if (rep.par) j["parity"] = (*rep.par == Parity::Even) ? "even" : "odd";
    if (rep.mu) j["mu"] = *rep.mu;
    if (rep.kissing) j["kissing"] = *rep.kissing;
    if (!rep.theta.empty()) j["theta"] = rep.theta;
    if (rep.secrecy) {
        j["chi"] = rep.secrecy->chi;
        j["chi_tail"] = rep.secrecy->tail_estimate;
        j["chi_cutoff"] = rep.secrecy->cutoff;
    }
    json certs = json::object();
    if (rep.modularity) {
        certs["modularity"] = json{
            {"level", rep.modularity->level},
            {"verdict", rep.modularity->verdict == CertVerdict::Certified
                            ? "Certified"
                            : "NotThisSimilarity"}};
    }
    certs["unimodular"] = rep.unimodular;
    j["certificates"] = std::move(certs);
    return j.dump(2);
}

std::string table_header(bool csv) {
    if (csv) return "label,dim,d,mu,ks,chi,theta\n";
    return "| label | dim | d | mu | ks | chi | theta |\n"
           "|---|---|---|---|---|---|---|\n";
}

std::string table_row(const std::string& label, int dim, long d, std::int64_t mu,
                      std::int64_t ks, double chi,
                      const std::vector<std::int64_t>& theta, bool csv) {
    std::ostringstream os;
    std::ostringstream th;
    for (std::size_t i = 0; i < theta.size() && i < 10; ++i) {
        if (i) th << " ";
        th << theta[i];
    }
    os << std::fixed << std::setprecision(4);
    if (csv) {
        os << label << "," << dim << "," << d << "," << mu << "," << ks << "," << chi
           << "," << th.str() << "\n";
    } else {
        os << "| " << label << " | " << dim << " | " << d << " | " << mu << " | " << ks
           << " | " << chi << " | " << th.str() << " |\n";
    }
    return os.str();
}

}  // namespace latcode
