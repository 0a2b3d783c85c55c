#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcode/analysis.hpp"
#include "latcode/examples.hpp"
#include "latcode/serialize.hpp"

namespace py = pybind11;
using namespace latcode;

namespace {

LinearCode code_from_pairs(const FiniteField& F,
                           const std::vector<std::vector<std::pair<long, long>>>& rows) {
    std::vector<std::vector<FFElem>> G;
    G.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<FFElem> r;
        r.reserve(row.size());
        for (auto [s, t] : row) r.push_back(F.make(s, t));
        G.push_back(std::move(r));
    }
    return standard_form(F, std::move(G));
}

py::dict lattice_summary(const LatticeDesc& latt) {
    py::dict d;
    d["D"] = latt.D;
    d["p"] = latt.p;
    d["dim"] = latt.dim;
    d["alpha"] = rat_to_string(latt.alpha);
    std::vector<std::vector<std::string>> gram;
    gram.reserve(latt.gram.size());
    for (const auto& row : latt.gram) {
        std::vector<std::string> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(rat_to_string(e));
        gram.push_back(std::move(r));
    }
    d["gram"] = gram;
    d["genmat"] = latt.genmat;
    d["json"] = lattice_to_json(latt);
    return d;
}

LatticeDesc build_from_args(long D, long p,
                            const std::vector<std::vector<std::pair<long, long>>>& rows,
                            const std::optional<std::string>& alpha) {
    QuadField field = make_field(D);
    FiniteField F = FiniteField::residue_field(field, p);
    LinearCode code = code_from_pairs(F, rows);
    std::optional<Rat> a;
    if (alpha) a = rat_from_string(*alpha);
    return build_lattice(make_input(field, p, std::move(code), a));
}

py::dict analyze_latt(const LatticeDesc& latt, int theta_cutoff, double tol) {
    py::dict d;
    d["integral"] = is_integral(latt);
    d["unimodular"] = is_unimodular(latt);
    if (is_integral(latt))
        d["parity"] = parity(latt) == Parity::Even ? "even" : "odd";
    ShortVectors sv = shortest_vectors(latt.gram);
    d["mu"] = sv.mu;
    d["kissing"] = sv.kissing;
    ThetaPrefix th = theta_prefix(latt.gram, theta_cutoff);
    d["theta"] = th.counts;
    long absD = latt.D < 0 ? -latt.D : latt.D;
    ModularityCertificate cert = modularity_certificate(latt, absD);
    d["modularity_level"] = cert.level;
    d["modularity"] = cert.verdict == CertVerdict::Certified ? "Certified"
                                                             : "NotThisSimilarity";
    try {
        SecrecyReport rep = weak_secrecy_gain(th, absD, latt.dim, tol);
        d["chi"] = rep.chi;
        d["chi_tail"] = rep.tail_estimate;
    } catch (const NeedLargerPrefix&) {
        d["chi"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_latcode, m) {
    m.doc() = "Construction-A lattices over quadratic fields: exact construction "
              "and certification";

    py::class_<LatticeDesc>(m, "Lattice")
        .def_property_readonly("dim", [](const LatticeDesc& l) { return l.dim; })
        .def_property_readonly("D", [](const LatticeDesc& l) { return l.D; })
        .def_property_readonly("p", [](const LatticeDesc& l) { return l.p; })
        .def("summary", &lattice_summary)
        .def("to_json", &lattice_to_json);

    m.def("construct", &build_from_args, py::arg("D"), py::arg("p"), py::arg("rows"),
          py::arg("alpha") = std::nullopt,
          "Build a lattice from a quadratic field, a prime, and generator rows "
          "given as (s, t) pairs meaning s + t*w.");

    m.def("from_json", &lattice_from_json, py::arg("text"));

    m.def("analyze", &analyze_latt, py::arg("lattice"), py::arg("theta_cutoff") = 9,
          py::arg("tol") = 1e-4,
          "Minimum, kissing number, theta prefix, parity, modularity certificate "
          "and weak secrecy gain.");

    m.def(
        "search",
        [](long D, long p, int N, std::uint64_t seed) {
            QuadField field = make_field(D);
            FiniteField F = FiniteField::residue_field(field, p);
            LinearCode code = search_self_dual(F, N, seed);
            return build_lattice(make_input(field, p, std::move(code)));
        },
        py::arg("D"), py::arg("p"), py::arg("N"), py::arg("seed") = 0,
        "Search a self-dual code and build its lattice.");

    m.def(
        "reproduce",
        [](const std::string& name) {
            const PaperExample& ex = find_example(name);
            return build_lattice(example_input(ex));
        },
        py::arg("name"));

    m.def("example_names", [] {
        std::vector<std::string> names;
        for (const auto& e : paper_examples()) names.push_back(e.name);
        return names;
    });

    py::register_exception<Error>(m, "LatcodeError");
}
