#include "latcode/codes.hpp"

#include <cmath>
#include <istream>
#include <random>
#include <sstream>

namespace latcode {

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long balanced(long s, long p) {
    s = mod_pos(s, p);
    if (p > 2 && s > (p - 1) / 2) s -= p;
    return s;
}

long inv_mod(long a, long p) {
    a = mod_pos(a, p);
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    long r = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool ff_irreducible(long p, long m1, long m0) {
    // x^2 - m1 x - m0 has no root mod p
    for (long x = 0; x < p; ++x)
        if (mod_pos(x * x - m1 * x - m0, p) == 0) return false;
    return true;
}

FFElem FiniteField::make(long s, long t) const {
    if (f == 1 && mod_pos(t, p) != 0)
        throw InvalidInput("w-component in a prime field");
    return {mod_pos(s, p), mod_pos(t, p)};
}

FFElem FiniteField::add(const FFElem& x, const FFElem& y) const {
    return {mod_pos(x.s + y.s, p), mod_pos(x.t + y.t, p)};
}

FFElem FiniteField::sub(const FFElem& x, const FFElem& y) const {
    return {mod_pos(x.s - y.s, p), mod_pos(x.t - y.t, p)};
}

FFElem FiniteField::neg(const FFElem& x) const {
    return {mod_pos(-x.s, p), mod_pos(-x.t, p)};
}

FFElem FiniteField::mul(const FFElem& x, const FFElem& y) const {
    // (s1 + t1 w)(s2 + t2 w) with w^2 = m1 w + m0
    long s = x.s * y.s + x.t * y.t * m0;
    long t = x.s * y.t + x.t * y.s + x.t * y.t * m1;
    return {mod_pos(s, p), mod_pos(t, p)};
}

FFElem FiniteField::inv(const FFElem& x) const {
    if (x.s == 0 && x.t == 0) throw DivisionByZero("inverse of zero field element");
    if (f == 1 || x.t == 0) return {inv_mod(x.s, p), 0};
    // (s + t w)^-1 = (s + t m1 - t w) / N, N = (s + t w)(s + t m1 - t w)
    FFElem c = {mod_pos(x.s + x.t * m1, p), mod_pos(-x.t, p)};
    FFElem n = mul(x, c);  // norm, lies in F_p
    long ninv = inv_mod(n.s, p);
    return {mod_pos(c.s * ninv, p), mod_pos(c.t * ninv, p)};
}

FFElem FiniteField::element(long i) const { return {mod_pos(i, p), f == 1 ? 0 : mod_pos(i / p, p)}; }

std::string FiniteField::to_string(const FFElem& x) const {
    if (x.t == 0) return std::to_string(x.s);
    return std::to_string(x.s) + "+" + std::to_string(x.t) + "*w";
}

FFElem FiniteField::parse(const std::string& text) const {
    long s = 0, t = 0;
    auto plus = text.find('+');
    try {
        if (plus == std::string::npos && text.find('w') == std::string::npos) {
            s = std::stol(text);
        } else {
            std::string left = plus == std::string::npos ? "" : text.substr(0, plus);
            std::string right = plus == std::string::npos ? text : text.substr(plus + 1);
            auto star = right.find("*w");
            if (star == std::string::npos) throw ParseError("");
            s = left.empty() ? 0 : std::stol(left);
            t = std::stol(right.substr(0, star));
        }
    } catch (const std::exception&) {
        throw ParseError("bad field element: '" + text + "'");
    }
    if (f == 1 && t % p != 0) throw ParseError("w in a prime-field code: '" + text + "'");
    return make(s, t);
}

FiniteField FiniteField::residue_field(const QuadField& field, long p) {
    PrimeSplit split = splitting_type(field, p);
    FiniteField F;
    F.p = p;
    F.field = field;
    if (split.kind == SplitKind::Ramified) {
        F.f = 1;
        // v reduces to the repeated root of its minimal polynomial
        long c1 = 0, c0 = 0;
        if (mod_pos(field.D, 4) == 1) {
            c1 = 1;
            c0 = (field.D - 1) / 4;
        } else {
            c0 = field.D;
        }
        for (long x = 0; x < p; ++x)
            if (mod_pos(x * x - c1 * x - c0, p) == 0) {
                F.rho_v = {x, 0};
                break;
            }
        return F;
    }
    if (split.kind == SplitKind::Split)
        throw UnsupportedSplitting("no residue field for a split prime");
    F.f = 2;
    if (p == 2) {
        // d = 5 mod 8: w is the image of v, w^2 = w + 1-style modulus
        F.m1 = mod_pos(1, 2);
        F.m0 = mod_pos(-(field.D - 1) / 4, 2);
        F.omega_lift = field.ok_gen;
        F.rho_v = F.omega();
    } else {
        // w^2 = D mod p, lift w -> sqrt(D)
        F.m1 = 0;
        F.m0 = mod_pos(field.D, p);
        F.omega_lift = field.sqrt_d();
        if (mod_pos(field.D, 4) == 1) {
            // rho(v) = (1 + w) / 2
            long h = inv_mod(2, p);
            F.rho_v = {h, h};
        } else {
            F.rho_v = F.omega();
        }
    }
    if (!ff_irreducible(F.p, F.m1, F.m0))
        throw InternalInconsistency("reducible residue-field modulus");
    return F;
}

FiniteField FiniteField::prime_field(long p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    FiniteField F;
    F.p = p;
    F.f = 1;
    return F;
}

std::vector<std::vector<FFElem>> LinearCode::generator_rows() const {
    std::vector<std::vector<FFElem>> rows(k, std::vector<FFElem>(N, F.zero()));
    for (int i = 0; i < k; ++i) {
        rows[i][i] = F.one();
        for (int j = 0; j < N - k; ++j) rows[i][k + j] = A[i][j];
    }
    return rows;
}

std::vector<FFElem> LinearCode::encode(const std::vector<FFElem>& message) const {
    std::vector<FFElem> word(N, F.zero());
    for (int i = 0; i < k; ++i) {
        word[i] = message[i];
        for (int j = 0; j < N - k; ++j)
            word[k + j] = F.add(word[k + j], F.mul(message[i], A[i][j]));
    }
    return word;
}

bool LinearCode::contains(const std::vector<FFElem>& word) const {
    std::vector<FFElem> message(word.begin(), word.begin() + k);
    auto expect = encode(message);
    for (int i = 0; i < N; ++i)
        if (!(expect[i] == word[i])) return false;
    return true;
}

std::vector<std::vector<FFElem>> LinearCode::codewords() const {
    double total = std::pow(static_cast<double>(F.q()), k);
    if (total > 1e7) throw PreconditionFailed("too many codewords to enumerate");
    std::vector<std::vector<FFElem>> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<long> idx(k, 0);
    std::vector<FFElem> message(k, F.zero());
    for (;;) {
        for (int i = 0; i < k; ++i) message[i] = F.element(idx[i]);
        out.push_back(encode(message));
        int pos = 0;
        while (pos < k && ++idx[pos] == F.q()) idx[pos++] = 0;
        if (pos == k) break;
    }
    if (k == 0) out = {std::vector<FFElem>(N, F.zero())};
    return out;
}

LinearCode standard_form(const FiniteField& F, std::vector<std::vector<FFElem>> G) {
    int rows = static_cast<int>(G.size());
    int N = rows ? static_cast<int>(G[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < N && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!(G[i][c] == F.zero())) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(G[r], G[piv]);
        FFElem d = F.inv(G[r][c]);
        for (int j = 0; j < N; ++j) G[r][j] = F.mul(G[r][j], d);
        for (int i = 0; i < rows; ++i) {
            if (i == r || G[i][c] == F.zero()) continue;
            FFElem f = G[i][c];
            for (int j = 0; j < N; ++j) G[i][j] = F.sub(G[i][j], F.mul(f, G[r][j]));
        }
        if (c != r)
            throw NotSystematic("pivot of row " + std::to_string(r) +
                                " falls in column " + std::to_string(c));
        ++r;
    }
    if (r < rows) throw RankDeficient("generator matrix has rank " + std::to_string(r) +
                                      " < " + std::to_string(rows));
    LinearCode C;
    C.F = F;
    C.N = N;
    C.k = rows;
    C.A.assign(rows, std::vector<FFElem>(N - rows, F.zero()));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < N - rows; ++j) C.A[i][j] = G[i][rows + j];
    return C;
}

LinearCode dual_code(const LinearCode& C) {
    // (-A^T | I_{N-k}) generates the dual; re-standardize
    int n = C.N, k = C.k;
    std::vector<std::vector<FFElem>> H(n - k, std::vector<FFElem>(n, C.F.zero()));
    for (int i = 0; i < n - k; ++i) {
        for (int j = 0; j < k; ++j) H[i][j] = C.F.neg(C.A[j][i]);
        H[i][k + i] = C.F.one();
    }
    return standard_form(C.F, std::move(H));
}

bool is_self_orthogonal(const LinearCode& C) {
    // G G^T = 0, i.e. I + A A^T = 0
    for (int i = 0; i < C.k; ++i)
        for (int j = i; j < C.k; ++j) {
            FFElem dot = (i == j) ? C.F.one() : C.F.zero();
            for (int l = 0; l < C.N - C.k; ++l)
                dot = C.F.add(dot, C.F.mul(C.A[i][l], C.A[j][l]));
            if (!(dot == C.F.zero())) return false;
        }
    return true;
}

bool is_self_dual(const LinearCode& C) {
    return 2 * C.k == C.N && is_self_orthogonal(C);
}

QElem lift_elem(const FiniteField& F, const FFElem& c) {
    long s = balanced(c.s, F.p);
    if (F.f == 1) return F.field.from_rat(Rat(s));
    long t = balanced(c.t, F.p);
    return F.field.from_rat(Rat(s)) + Rat(t) * F.omega_lift;
}

std::vector<QElem> lift(const LinearCode& C, const std::vector<FFElem>& codeword) {
    std::vector<QElem> out;
    out.reserve(codeword.size());
    for (const auto& c : codeword) out.push_back(lift_elem(C.F, c));
    return out;
}

std::vector<std::vector<QElem>> lift_matrix(const LinearCode& C) {
    std::vector<std::vector<QElem>> out(C.k);
    for (int i = 0; i < C.k; ++i)
        for (int j = 0; j < C.N - C.k; ++j) out[i].push_back(lift_elem(C.F, C.A[i][j]));
    return out;
}

FFElem rho_elem(const FiniteField& F, const QElem& x) {
    auto [s, t] = F.field.ok_coords(x);
    if (!rat_is_integer(s) || !rat_is_integer(t))
        throw InvalidInput("reduction of an element outside O_K");
    long si = mod_pos(static_cast<long>(mpz_fdiv_ui(s.get_num().get_mpz_t(),
                                                    static_cast<unsigned long>(F.p))),
                      F.p);
    long ti = mod_pos(static_cast<long>(mpz_fdiv_ui(t.get_num().get_mpz_t(),
                                                    static_cast<unsigned long>(F.p))),
                      F.p);
    return F.add(F.make(si), F.mul(F.make(ti), F.rho_v));
}

std::vector<FFElem> rho(const FiniteField& F, const std::vector<QElem>& v) {
    std::vector<FFElem> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(rho_elem(F, x));
    return out;
}

namespace {

/// Randomized restart search for k rows of length N-k over F with
/// row_i . row_j = -delta_ij (that is, (I|A) self-orthogonal).
LinearCode search_rows(const FiniteField& F, int N, int k, std::uint64_t seed, long budget) {
    if (k < 0 || k > N - k) throw InvalidInput("need k <= N - k");
    std::mt19937_64 rng(seed);
    long q = F.q();
    int m = N - k;
    std::uniform_int_distribution<long> pick(0, q - 1);
    FFElem minus_one = F.neg(F.one());
    std::vector<std::vector<FFElem>> rows;
    long steps = 0;
    while (steps < budget) {
        rows.clear();
        bool dead = false;
        for (int i = 0; i < k && !dead; ++i) {
            bool found = false;
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                if (++steps >= budget) break;
                std::vector<FFElem> cand(m);
                for (auto& c : cand) c = F.element(pick(rng));
                bool ok = true;
                FFElem selfdot = F.zero();
                for (int j = 0; j < m; ++j) selfdot = F.add(selfdot, F.mul(cand[j], cand[j]));
                if (!(selfdot == minus_one)) ok = false;
                for (const auto& prev : rows) {
                    if (!ok) break;
                    FFElem dot = F.zero();
                    for (int j = 0; j < m; ++j) dot = F.add(dot, F.mul(cand[j], prev[j]));
                    if (!(dot == F.zero())) ok = false;
                }
                if (ok) {
                    rows.push_back(std::move(cand));
                    found = true;
                }
            }
            if (!found) dead = true;
        }
        if (!dead && static_cast<int>(rows.size()) == k) {
            LinearCode C;
            C.F = F;
            C.N = N;
            C.k = k;
            C.A = rows;
            if (!is_self_orthogonal(C))
                throw InternalInconsistency("search produced a bad code");
            return C;
        }
    }
    throw SearchFailed("no self-orthogonal completion within budget");
}

}  // namespace

LinearCode search_self_dual(const FiniteField& F, int N, std::uint64_t seed, long budget) {
    if (N % 2 != 0) throw InvalidInput("self-dual codes need even length");
    LinearCode C = search_rows(F, N, N / 2, seed, budget);
    if (!is_self_dual(C)) throw InternalInconsistency("search result not self-dual");
    return C;
}

LinearCode search_self_orthogonal(const FiniteField& F, int N, int k, std::uint64_t seed,
                                  long budget) {
    return search_rows(F, N, k, seed, budget);
}

std::string code_to_text(const LinearCode& C) {
    std::ostringstream os;
    os << C.F.q() << " " << C.N << " " << C.k << "\n";
    for (const auto& row : C.generator_rows()) {
        for (int j = 0; j < C.N; ++j) {
            if (j) os << " ";
            os << C.F.to_string(row[j]);
        }
        os << "\n";
    }
    return os.str();
}

LinearCode code_from_text(const FiniteField& F, std::istream& in) {
    long q = 0;
    int N = 0, k = 0;
    if (!(in >> q >> N >> k)) throw ParseError("missing 'q N k' header");
    if (q != F.q())
        throw ParseError("code is over F_" + std::to_string(q) + ", expected F_" +
                         std::to_string(F.q()));
    if (k < 0 || N < 0 || k > N) throw ParseError("bad code dimensions");
    std::vector<std::vector<FFElem>> G(k, std::vector<FFElem>(N, F.zero()));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < N; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw ParseError("row " + std::to_string(i + 1) + " is short");
            G[i][j] = F.parse(tok);
        }
    return standard_form(F, std::move(G));
}

}  // namespace latcode
