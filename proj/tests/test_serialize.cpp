#include <doctest.h>

#include "latcode/examples.hpp"
#include "latcode/serialize.hpp"

using namespace latcode;

TEST_CASE("lattice JSON round trip") {
    LatticeDesc latt = build_lattice(example_input(find_example("q8_1")));
    std::string text = lattice_to_json(latt);
    LatticeDesc back = lattice_from_json(text);
    CHECK(back.gram == latt.gram);
    CHECK(back.D == latt.D);
    CHECK(back.p == latt.p);
    CHECK(back.alpha == latt.alpha);

    CHECK_THROWS_AS(lattice_from_json("{not json"), ParseError);
    CHECK_THROWS_AS(lattice_from_json("{\"D\": 5}"), ParseError);
}

TEST_CASE("tampered Gram is rejected") {
    LatticeDesc latt = build_lattice(example_input(find_example("e8")));
    std::string text = lattice_to_json(latt);
    // corrupt one Gram entry
    auto pos = text.find("\"2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"7\"");
    CHECK_THROWS_AS(lattice_from_json(text), ParseError);
}

TEST_CASE("report JSON fields") {
    LatticeDesc latt = build_lattice(example_input(find_example("e8")));
    AnalysisReport rep;
    rep.integral = true;
    rep.par = Parity::Even;
    rep.mu = 2;
    rep.kissing = 240;
    rep.theta = {1, 0, 240};
    rep.unimodular = true;
    std::string text = report_to_json(latt, rep);
    CHECK(text.find("\"mu\": 2") != std::string::npos);
    CHECK(text.find("\"kissing\": 240") != std::string::npos);
    CHECK(text.find("\"unimodular\": true") != std::string::npos);
    CHECK(text.find("\"parity\": \"even\"") != std::string::npos);
}

TEST_CASE("table rows") {
    std::string md = table_row("e8", 8, 3, 2, 240, 1.0, {1, 0, 240}, false);
    CHECK(md.find("| e8 | 8 | 3 | 2 | 240 |") != std::string::npos);
    std::string csv = table_row("e8", 8, 3, 2, 240, 1.0, {1, 0, 240}, true);
    CHECK(csv.find("e8,8,3,2,240,") != std::string::npos);
    CHECK(table_header(true).find("label,dim") == 0);
}
