#include "latcode/examples.hpp"

namespace latcode {

namespace {

using Row = std::vector<std::pair<long, long>>;

/// Full (I | A) generator rows from the A-block entries.
std::vector<Row> with_identity(int N, std::vector<Row> a_rows) {
    int k = static_cast<int>(a_rows.size());
    std::vector<Row> rows(k, Row(N, {0, 0}));
    for (int i = 0; i < k; ++i) {
        rows[i][i] = {1, 0};
        for (int j = 0; j < N - k; ++j) rows[i][k + j] = a_rows[i][j];
    }
    return rows;
}

std::vector<PaperExample> build_examples() {
    std::vector<PaperExample> out;

    {
        PaperExample e;
        e.name = "extremal12";
        e.description = "Extremal 5-modular lattice of dimension 12 from a "
                        "self-dual code over F_4 (D=5, p=2, N=6)";
        e.D = 5;
        e.p = 2;
        e.N = 6;
        e.generator = with_identity(6, {{{0, 1}, {1, 0}, {0, 1}},
                                        {{0, 0}, {1, 1}, {0, 1}},
                                        {{1, 1}, {1, 1}, {1, 0}}});
        e.mu = 4;
        e.kissing = 60;
        e.level = 5;
        e.even = false;
        e.theta = {1, 0, 0, 0, 60, 288, 520, 960, 1980, 3680};
        e.chi = 1.6048;
        out.push_back(std::move(e));
    }
    {
        PaperExample e;
        e.name = "q8_1";
        e.description = "Q8(1): 5-modular lattice of dimension 8 with minimum 4 "
                        "(D=5, p=2, N=4)";
        e.D = 5;
        e.p = 2;
        e.N = 4;
        e.generator = with_identity(4, {{{1, 1}, {0, 1}},
                                        {{0, 1}, {1, 1}}});
        e.note = "Listed both as even and as the unique 5-modular odd lattice in "
                 "its source; the computed parity is reported, not asserted.";
        e.mu = 4;
        e.kissing = 120;
        e.level = 5;
        e.theta = {1, 0, 0, 0, 120, 0, 240, 0, 600, 0};
        e.chi = 1.2970;
        out.push_back(std::move(e));
    }
    {
        PaperExample e;
        e.name = "o6";
        e.description = "O^(6): 6-modular lattice of dimension 8 with minimum 3 "
                        "(D=6, p=7, N=4)";
        e.D = 6;
        e.p = 7;
        e.N = 4;
        e.generator = with_identity(4, {{{2, 1}, {2, 6}},
                                        {{2, 6}, {5, 6}}});
        e.note = "Source text says w is in F_25 with w^2 = 2; the residue field "
                 "of 7 in Q(sqrt 6) is F_49 with w^2 = 6.";
        e.mu = 3;
        e.level = 6;
        e.even = false;
        e.theta = {1, 0, 0, 16, 24, 48, 128, 144, 216, 400};
        e.chi = 1.1753;
        out.push_back(std::move(e));
    }
    {
        PaperExample e;
        e.name = "o3";
        e.description = "O^(3): 3-modular lattice of dimension 12 with minimum 3 "
                        "(D=3, p=5, N=6)";
        e.D = 3;
        e.p = 5;
        e.N = 6;
        e.generator = with_identity(6, {{{1, 1}, {2, 2}, {2, 0}},
                                        {{1, 2}, {2, 0}, {2, 4}},
                                        {{3, 4}, {1, 1}, {1, 2}}});
        e.mu = 3;
        e.level = 3;
        e.even = false;
        e.theta = {1, 0, 0, 64, 372, 960, 1984, 5184, 10428, 16192};
        e.chi = 1.5806;
        out.push_back(std::move(e));
    }
    {
        PaperExample e;
        e.name = "o2";
        e.description = "O^(2): odd Barnes-Wall lattice, 2-modular of dimension "
                        "16 with minimum 3 (D=2, p=5, N=8)";
        e.D = 2;
        e.p = 5;
        e.N = 8;
        e.generator = with_identity(8, {{{1, 2}, {1, 4}, {3, 4}, {3, 4}},
                                        {{3, 1}, {2, 0}, {0, 0}, {4, 3}},
                                        {{3, 3}, {0, 0}, {2, 0}, {4, 4}},
                                        {{2, 3}, {2, 3}, {1, 3}, {1, 0}}});
        e.note = "The printed entry '4a+4' is transcribed as 4w+4; with that "
                 "reading the code is self-dual.";
        e.mu = 3;
        e.level = 2;
        e.even = false;
        out.push_back(std::move(e));
    }
    {
        PaperExample e;
        e.name = "e8";
        e.description = "E8: unimodular lattice of dimension 8 from a ternary "
                        "code (D=-3, p=3, N=4)";
        e.D = -3;
        e.p = 3;
        e.N = 4;
        e.generator = with_identity(4, {{{2, 0}, {1, 0}},
                                        {{2, 0}, {2, 0}}});
        e.mu = 2;
        e.kissing = 240;
        e.unimodular = true;
        e.even = true;
        e.theta = {1, 0, 240, 0, 2160, 0, 6720};
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<PaperExample>& paper_examples() {
    static const std::vector<PaperExample> examples = build_examples();
    return examples;
}

const PaperExample& find_example(const std::string& name) {
    for (const auto& e : paper_examples())
        if (e.name == name) return e;
    throw InvalidInput("unknown example '" + name + "'");
}

ConstructionInput example_input(const PaperExample& ex) {
    QuadField field = make_field(ex.D);
    FiniteField F = FiniteField::residue_field(field, ex.p);
    std::vector<std::vector<FFElem>> G;
    G.reserve(ex.generator.size());
    for (const auto& row : ex.generator) {
        std::vector<FFElem> r;
        r.reserve(row.size());
        for (auto [s, t] : row) r.push_back(F.make(s, t));
        G.push_back(std::move(r));
    }
    LinearCode code = standard_form(F, std::move(G));
    return make_input(field, ex.p, std::move(code));
}

}  // namespace latcode
