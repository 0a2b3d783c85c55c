// Acceptance suite: each numbered check prints exactly one PASS/FAIL line.
// Exit status is nonzero when any check fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "latcode/analysis.hpp"
#include "latcode/examples.hpp"
#include "oracle.hpp"

using namespace latcode;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << number << "] " << label;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

void run(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, label, pass, detail);
}

bool close(double a, double b, double tol) { return std::abs(a - b) < tol; }

LinearCode random_code(const FiniteField& F, int N, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(0, F.q() - 1);
    LinearCode C;
    C.F = F;
    C.N = N;
    C.k = k;
    C.A.assign(k, std::vector<FFElem>(N - k, F.zero()));
    for (auto& row : C.A)
        for (auto& e : row) e = F.element(pick(rng));
    return C;
}

bool theta_matches(const LatticeDesc& latt, const std::vector<std::int64_t>& expect,
                   std::string& detail) {
    ThetaPrefix th = theta_prefix(latt.gram, static_cast<int>(expect.size()) - 1);
    for (std::size_t m = 0; m < expect.size(); ++m)
        if (th.counts[m] != expect[m]) {
            std::ostringstream os;
            os << "theta[" << m << "] = " << th.counts[m] << ", expected " << expect[m];
            detail = os.str();
            return false;
        }
    return true;
}

double chi_of(const LatticeDesc& latt, long d, int M) {
    return weak_secrecy_gain(theta_prefix(latt.gram, M), d, latt.dim, 1e-4).chi;
}

}  // namespace

int main() {
    run(1, "dim-12 extremal lattice: dim, integral, odd, 5-modular, mu=4, kissing=60",
        [](std::string& detail) {
            LatticeDesc latt = build_lattice(example_input(find_example("extremal12")));
            if (latt.dim != 12) return detail = "wrong dim", false;
            if (!is_integral(latt)) return detail = "not integral", false;
            if (parity(latt) != Parity::Odd) return detail = "not odd", false;
            if (modularity_certificate(latt, 5).verdict != CertVerdict::Certified)
                return detail = "5-modularity not certified", false;
            ShortVectors sv = shortest_vectors(latt.gram);
            if (sv.mu != 4 || sv.kissing != 60) {
                detail = "mu=" + std::to_string(sv.mu) + " ks=" + std::to_string(sv.kissing);
                return false;
            }
            return true;
        });

    run(2, "Q8(1): mu=4, kissing=120, theta row, chi=1.2970",
        [](std::string& detail) {
            LatticeDesc latt = build_lattice(example_input(find_example("q8_1")));
            ShortVectors sv = shortest_vectors(latt.gram);
            if (sv.mu != 4 || sv.kissing != 120) return detail = "wrong minimum data", false;
            if (!theta_matches(latt, {1, 0, 0, 0, 120, 0, 240, 0, 600, 0}, detail)) return false;
            double chi = chi_of(latt, 5, 18);
            if (!close(chi, 1.2970, 5e-4)) return detail = "chi=" + std::to_string(chi), false;
            return true;
        });

    run(3, "O^(6): mu=3 twice over, theta row, chi=1.1753, 6-modular",
        [](std::string& detail) {
            ConstructionInput in = example_input(find_example("o6"));
            LatticeDesc latt = build_lattice(in);
            if (shortest_vectors(latt.gram).mu != 3) return detail = "enumerated mu != 3", false;
            if (minimum_via_code(in) != 3) return detail = "code-formula mu != 3", false;
            if (!theta_matches(latt, {1, 0, 0, 16, 24, 48, 128, 144, 216, 400}, detail))
                return false;
            double chi = chi_of(latt, 6, 16);
            if (!close(chi, 1.1753, 5e-4)) return detail = "chi=" + std::to_string(chi), false;
            return modularity_certificate(latt, 6).verdict == CertVerdict::Certified;
        });

    run(4, "O^(3): mu=3, 3-modular, theta row, chi=1.5806",
        [](std::string& detail) {
            LatticeDesc latt = build_lattice(example_input(find_example("o3")));
            if (shortest_vectors(latt.gram).mu != 3) return detail = "mu != 3", false;
            if (modularity_certificate(latt, 3).verdict != CertVerdict::Certified)
                return detail = "3-modularity not certified", false;
            if (!theta_matches(latt, {1, 0, 0, 64, 372, 960, 1984, 5184, 10428, 16192},
                               detail))
                return false;
            double chi = chi_of(latt, 3, 14);
            if (!close(chi, 1.5806, 5e-4)) return detail = "chi=" + std::to_string(chi), false;
            return true;
        });

    run(5, "O^(2): dim 16, mu=3, 2-modular (theta computed to M=6)",
        [](std::string& detail) {
            ConstructionInput in = example_input(find_example("o2"));
            LatticeDesc latt = build_lattice(in);
            if (latt.dim != 16) return detail = "wrong dim", false;
            if (shortest_vectors(latt.gram).mu != 3) return detail = "mu != 3", false;
            if (minimum_via_code(in) != 3) return detail = "code-formula mu != 3", false;
            ThetaPrefix th = theta_prefix(latt.gram, 6);
            if (th.counts[0] != 1 || th.counts[1] != 0 || th.counts[2] != 0)
                return detail = "theta prefix malformed", false;
            return modularity_certificate(latt, 2).verdict == CertVerdict::Certified;
        });

    run(6, "E8: unimodular, even, mu=2, kissing=240, theta 1+240q^2+2160q^4",
        [](std::string& detail) {
            LatticeDesc latt = build_lattice(example_input(find_example("e8")));
            if (!is_unimodular(latt)) return detail = "not unimodular", false;
            if (rat_det(latt.gram) != 1) return detail = "det != 1", false;
            if (parity(latt) != Parity::Even) return detail = "not even", false;
            ShortVectors sv = shortest_vectors(latt.gram);
            if (sv.mu != 2 || sv.kissing != 240) return detail = "wrong minimum data", false;
            if (!theta_matches(latt, {1, 0, 240, 0, 2160}, detail)) return false;
            std::vector<std::int64_t> box = oracle_theta_box(latt.gram, 4);
            ThetaPrefix th = theta_prefix(latt.gram, 4);
            for (int m = 0; m <= 4; ++m)
                if (box[m] != th.counts[m]) return detail = "box oracle disagrees", false;
            return true;
        });

    run(7, "50 random codes: exact discriminant formula",
        [](std::string& detail) {
            struct Pick {
                long D, p;
            };
            // F_4, F_9, F_25 as residue fields, plus the ramified ternary case
            std::vector<Pick> picks = {{5, 2}, {2, 3}, {2, 5}, {-3, 3}};
            int done = 0;
            std::mt19937_64 rng(202);
            while (done < 50) {
                const Pick& pk = picks[done % picks.size()];
                QuadField field = make_field(pk.D);
                FiniteField F = FiniteField::residue_field(field, pk.p);
                int N = 1 + static_cast<int>(rng() % 5);
                int k = static_cast<int>(rng() % (N + 1));
                LinearCode C = random_code(F, N, k, rng());
                LatticeDesc latt = build_lattice(make_input(field, pk.p, C));
                if (!check_volume(latt)) {
                    detail = "discriminant mismatch at case " + std::to_string(done);
                    return false;
                }
                ++done;
            }
            return true;
        });

    run(8, "integrality iff self-orthogonality on 50 + 50 random codes",
        [](std::string& detail) {
            struct Pick {
                long D, p;
            };
            std::vector<Pick> picks = {{5, 2}, {2, 3}, {2, 5}, {-3, 3}};
            std::mt19937_64 rng(303);
            int so_done = 0, nso_done = 0;
            while (so_done < 50) {
                const Pick& pk = picks[so_done % picks.size()];
                QuadField field = make_field(pk.D);
                FiniteField F = FiniteField::residue_field(field, pk.p);
                int N = 4 + static_cast<int>(rng() % 2);
                int k = 1 + static_cast<int>(rng() % (N / 2));
                LinearCode C;
                try {
                    C = search_self_orthogonal(F, N, k, rng());
                } catch (const SearchFailed&) {
                    continue;
                }
                LatticeDesc latt = build_lattice(make_input(field, pk.p, C));
                if (!is_integral(latt)) {
                    detail = "self-orthogonal code gave a non-integral lattice";
                    return false;
                }
                ++so_done;
            }
            while (nso_done < 50) {
                const Pick& pk = picks[nso_done % picks.size()];
                QuadField field = make_field(pk.D);
                FiniteField F = FiniteField::residue_field(field, pk.p);
                int N = 2 + static_cast<int>(rng() % 4);
                int k = 1 + static_cast<int>(rng() % N);
                if (k > N) continue;
                LinearCode C = random_code(F, N, k, rng());
                if (is_self_orthogonal(C)) continue;
                LatticeDesc latt = build_lattice(make_input(field, pk.p, C));
                if (is_integral(latt)) {
                    detail = "non-self-orthogonal code gave an integral lattice";
                    return false;
                }
                ++nso_done;
            }
            return true;
        });

    run(9, "20 searched self-dual codes: certified modular, parity matches prediction",
        [](std::string& detail) {
            struct Pick {
                long D, p;
            };
            // inert primes across d = 2, 3, 5, 6, 7, 11
            std::vector<Pick> picks = {{2, 3}, {2, 5}, {3, 5}, {3, 7}, {5, 2},
                                       {5, 3}, {5, 7}, {6, 7}, {7, 5}, {11, 3}};
            for (const Pick& pk : picks) {
                for (std::uint64_t seed : {1ULL, 2ULL}) {
                    QuadField field = make_field(pk.D);
                    FiniteField F = FiniteField::residue_field(field, pk.p);
                    LinearCode C = search_self_dual(F, 4, seed);
                    ConstructionInput in = make_input(field, pk.p, C);
                    LatticeDesc latt = build_lattice(in);
                    if (modularity_certificate(latt, pk.D).verdict != CertVerdict::Certified) {
                        detail = "not certified at d=" + std::to_string(pk.D) +
                                 " p=" + std::to_string(pk.p);
                        return false;
                    }
                    bool even = parity(latt) == Parity::Even;
                    if (even != predict_evenness(in)) {
                        detail = "parity prediction wrong at d=" + std::to_string(pk.D) +
                                 " p=" + std::to_string(pk.p);
                        return false;
                    }
                }
            }
            return true;
        });

    run(10, "20 random lattices of dim <= 8: theta equals box-oracle counts",
        [](std::string& detail) {
            struct Pick {
                long D, p;
            };
            std::vector<Pick> picks = {{5, 2}, {2, 3}, {-3, 3}, {2, 5}};
            std::mt19937_64 rng(404);
            int done = 0;
            while (done < 20) {
                const Pick& pk = picks[done % picks.size()];
                QuadField field = make_field(pk.D);
                FiniteField F = FiniteField::residue_field(field, pk.p);
                int N = 1 + static_cast<int>(rng() % 4);  // dim up to 8
                int k = static_cast<int>(rng() % (N + 1));
                LinearCode C = random_code(F, N, k, rng());
                LatticeDesc latt = build_lattice(make_input(field, pk.p, C));
                int M = 3 + static_cast<int>(rng() % 4);  // M <= 6
                ThetaPrefix th = theta_prefix(latt.gram, M);
                std::vector<std::int64_t> box = oracle_theta_box(latt.gram, M);
                for (int m = 0; m <= M; ++m)
                    if (th.counts[m] != box[m]) {
                        detail = "mismatch at case " + std::to_string(done) +
                                 ", m=" + std::to_string(m);
                        return false;
                    }
                ++done;
            }
            return true;
        });

    if (g_failures == 0) {
        std::cout << "all acceptance checks passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance check(s) failed" << std::endl;
    return 1;
}
