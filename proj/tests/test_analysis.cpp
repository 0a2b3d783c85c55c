#include <doctest.h>

#include <cmath>
#include <random>

#include "latcode/analysis.hpp"
#include "latcode/examples.hpp"
#include "oracle.hpp"

using namespace latcode;

namespace {

LatticeDesc example_lattice(const std::string& name) {
    return build_lattice(example_input(find_example(name)));
}

}  // namespace

TEST_CASE("integrality and parity") {
    LatticeDesc ext = example_lattice("extremal12");
    CHECK(is_integral(ext));
    CHECK(parity(ext) == Parity::Odd);

    LatticeDesc e8 = example_lattice("e8");
    CHECK(is_integral(e8));
    CHECK(parity(e8) == Parity::Even);
}

TEST_CASE("evenness criterion") {
    // q8_1 satisfies the d = 5 mod 8, p = 2, diagonal-in-(4) criterion
    CHECK(predict_evenness(example_input(find_example("q8_1"))));
    // the dim-12 example fails it: (I+AA^T)_11 = sqrt(5) + 5
    CHECK_FALSE(predict_evenness(example_input(find_example("extremal12"))));
    // d = 2, 3 mod 4 is always odd
    CHECK_FALSE(predict_evenness(example_input(find_example("o6"))));
    CHECK_THROWS_AS(predict_evenness(example_input(find_example("e8"))), Unsupported);
}

TEST_CASE("modularity certificates") {
    LatticeDesc ext = example_lattice("extremal12");
    ModularityCertificate c5 = modularity_certificate(ext, 5);
    CHECK(c5.verdict == CertVerdict::Certified);
    ModularityCertificate c3 = modularity_certificate(ext, 3);
    CHECK(c3.verdict == CertVerdict::NotThisSimilarity);

    // one coordinate of O_K with alpha = 1 is d-modular
    QuadField f5 = make_field(5);
    FiniteField f4 = FiniteField::residue_field(f5, 2);
    LinearCode full;
    full.F = f4;
    full.N = 1;
    full.k = 1;
    LatticeDesc ok = build_lattice(make_input(f5, 2, full, Rat(1)));
    CHECK(modularity_certificate(ok, 5).verdict == CertVerdict::Certified);
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(example_lattice("e8")));
    CHECK_FALSE(is_unimodular(example_lattice("q8_1")));
}

TEST_CASE("shortest vectors on known lattices") {
    LatticeDesc ext = example_lattice("extremal12");
    ShortVectors sv = shortest_vectors(ext.gram);
    CHECK(sv.mu == 4);
    CHECK(sv.kissing == 60);

    LatticeDesc e8 = example_lattice("e8");
    ShortVectors sv8 = shortest_vectors(e8.gram);
    CHECK(sv8.mu == 2);
    CHECK(sv8.kissing == 240);
}

TEST_CASE("theta prefixes match published rows") {
    for (const char* name : {"q8_1", "o6", "o3"}) {
        const PaperExample& ex = find_example(name);
        LatticeDesc latt = build_lattice(example_input(ex));
        ThetaPrefix th = theta_prefix(latt.gram, 9);
        REQUIRE(th.counts.size() == 10);
        for (int m = 0; m <= 9; ++m) CHECK(th.counts[m] == ex.theta[m]);
        for (int m = 1; m <= 9; ++m) CHECK(th.counts[m] % 2 == 0);
    }
}

TEST_CASE("theta against the box-counting oracle") {
    std::mt19937_64 rng(5);
    struct Pick {
        long D, p;
    };
    std::vector<Pick> picks = {{5, 2}, {2, 3}, {-3, 3}};
    for (const auto& pk : picks) {
        QuadField field = make_field(pk.D);
        FiniteField F = FiniteField::residue_field(field, pk.p);
        for (int trial = 0; trial < 4; ++trial) {
            std::uniform_int_distribution<long> pick(0, F.q() - 1);
            LinearCode C;
            C.F = F;
            C.N = 2;
            C.k = 1;
            C.A.assign(1, {F.element(pick(rng))});
            LatticeDesc latt = build_lattice(make_input(field, pk.p, C));
            ThetaPrefix th = theta_prefix(latt.gram, 6);
            std::vector<std::int64_t> box = oracle_theta_box(latt.gram, 6);
            for (int m = 0; m <= 6; ++m) CHECK(th.counts[m] == box[m]);
        }
    }
}

TEST_CASE("minimum via the code formula") {
    CHECK(minimum_via_code(example_input(find_example("o6"))) == 3);
    CHECK(minimum_via_code(example_input(find_example("o2"))) == 3);
    // cross-oracle agreement
    LatticeDesc o6 = example_lattice("o6");
    CHECK(shortest_vectors(o6.gram).mu == 3);
    // d = 1 mod 4 is out of range for the formula
    CHECK_THROWS_AS(minimum_via_code(example_input(find_example("q8_1"))), Unsupported);
}

TEST_CASE("weak secrecy gain") {
    const PaperExample& q8 = find_example("q8_1");
    LatticeDesc latt = build_lattice(example_input(q8));

    // the published 10-coefficient prefix is too short for tol = 1e-6
    ThetaPrefix short_prefix = theta_prefix(latt.gram, 9);
    CHECK_THROWS_AS(weak_secrecy_gain(short_prefix, 5, 8, 1e-6), NeedLargerPrefix);

    ThetaPrefix full_prefix = theta_prefix(latt.gram, 20);
    SecrecyReport rep = weak_secrecy_gain(full_prefix, 5, 8, 1e-4);
    CHECK(rep.chi == doctest::Approx(1.2970).epsilon(5e-4));
    CHECK(rep.tail_estimate < 1e-4);

    // truncation stability: four more coefficients move chi by < 2 tol
    ThetaPrefix longer = theta_prefix(latt.gram, 24);
    SecrecyReport rep2 = weak_secrecy_gain(longer, 5, 8, 1e-4);
    CHECK(std::abs(rep2.chi - rep.chi) < 2e-4);
}

TEST_CASE("secrecy gains of the published rows") {
    struct Row {
        const char* name;
        int M;
    };
    for (const Row& row : {Row{"q8_1", 18}, Row{"o6", 16}, Row{"o3", 14}, Row{"extremal12", 16}}) {
        const PaperExample& ex = find_example(row.name);
        LatticeDesc latt = build_lattice(example_input(ex));
        ThetaPrefix th = theta_prefix(latt.gram, row.M);
        SecrecyReport rep = weak_secrecy_gain(th, ex.level.value(), latt.dim, 1e-4);
        CHECK(rep.chi == doctest::Approx(ex.chi.value()).epsilon(5e-4));
    }
}

TEST_CASE("dual membership") {
    LatticeDesc ext = example_lattice("extremal12");
    for (const auto& row : ext.kbasis) CHECK(dual_membership(ext, row));

    QuadField f5 = make_field(5);
    std::vector<QElem> bad(6, f5.zero());
    bad[0] = Rat(1, 2) * f5.one();  // e_1 / p
    CHECK_FALSE(dual_membership(ext, bad));
}
