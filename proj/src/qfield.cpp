#include "latcode/qfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace latcode {

namespace {

void require_same_field(const QElem& x, const QElem& y) {
    if (x.D != y.D)
        throw FieldMismatch("operands live in Q(sqrt(" + std::to_string(x.D) +
                            ")) and Q(sqrt(" + std::to_string(y.D) + "))");
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

QElem operator+(const QElem& x, const QElem& y) {
    require_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.D};
}

QElem operator-(const QElem& x, const QElem& y) {
    require_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.D};
}

QElem operator-(const QElem& x) { return {-x.a, -x.b, x.D}; }

QElem operator*(const QElem& x, const QElem& y) {
    require_same_field(x, y);
    return {x.a * y.a + x.b * y.b * x.D, x.a * y.b + x.b * y.a, x.D};
}

QElem operator*(const Rat& c, const QElem& x) { return {c * x.a, c * x.b, x.D}; }

QElem conj(const QElem& x) { return {x.a, -x.b, x.D}; }

QElem pairing_bar(const QElem& x) { return x.D < 0 ? conj(x) : x; }

Rat trace(const QElem& x) { return 2 * x.a; }

Rat norm(const QElem& x) { return x.a * x.a - x.D * x.b * x.b; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    n = std::labs(n);
    if (n == 0) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

QuadField make_field(long D) {
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw InvalidField("D must be squarefree and not 0 or 1, got " + std::to_string(D));
    QuadField F;
    F.D = D;
    long d = std::labs(D);
    // |disc| = d when D = 1 mod 4 (real d=1, imaginary d=3 mod 4), else 4d
    F.disc = mod_pos(D, 4) == 1 ? Int(d) : Int(4 * d);
    if (mod_pos(D, 4) == 1)
        F.ok_gen = QElem(Rat(1, 2), Rat(1, 2), D);
    else
        F.ok_gen = QElem(0, 1, D);
    return F;
}

QElem QuadField::from_ok_coords(const Rat& s, const Rat& t) const {
    return from_rat(s) + t * ok_gen;
}

std::pair<Rat, Rat> QuadField::ok_coords(const QElem& x) const {
    if (mod_pos(D, 4) == 1) {
        // x = a + b sqrt(D) = (a - b) + 2b * v
        return {x.a - x.b, 2 * x.b};
    }
    return {x.a, x.b};
}

bool QuadField::in_ok(const QElem& x) const {
    auto [s, t] = ok_coords(x);
    return rat_is_integer(s) && rat_is_integer(t);
}

namespace {

int legendre(long a, long p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

PrimeSplit splitting_type(const QuadField& field, long p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    PrimeSplit s;
    s.p = p;
    if (mpz_divisible_ui_p(field.disc.get_mpz_t(), static_cast<unsigned long>(p))) {
        s.kind = SplitKind::Ramified;
        s.f = 1;
        s.e = 2;
        return s;
    }
    s.e = 1;
    if (p == 2) {
        // 2 unramified means D = 1 mod 4; inert iff D = 5 mod 8
        long r = ((field.D % 8) + 8) % 8;
        s.kind = (r == 5) ? SplitKind::Inert : SplitKind::Split;
    } else {
        s.kind = legendre(field.D, p) == -1 ? SplitKind::Inert : SplitKind::Split;
    }
    s.f = (s.kind == SplitKind::Inert) ? 2 : 1;
    return s;
}

QElem IdealZBasis::omega(const QuadField& field, int i) const {
    return field.from_ok_coords(Rat(m[i][0]), Rat(m[i][1]));
}

namespace {

/// Hermite normal form (row style, 2 columns) of an r x 2 integer matrix of
/// full column rank; returns the 2 x 2 upper-triangular-ish basis.
std::array<std::array<Int, 2>, 2> hnf2(std::vector<std::array<Int, 2>> rows) {
    // reduce first column by gcd
    std::array<Int, 2> g = {0, 0};
    bool have = false;
    // euclidean sweep on column 0
    for (;;) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i][0] != 0 && (piv == rows.size() ||
                                    cmp(abs(rows[i][0]), abs(rows[piv][0])) < 0))
                piv = i;
        if (piv == rows.size()) break;
        bool done = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == piv || rows[i][0] == 0) continue;
            Int q = rows[i][0] / rows[piv][0];
            rows[i][0] -= q * rows[piv][0];
            rows[i][1] -= q * rows[piv][1];
            if (rows[i][0] != 0) done = false;
        }
        if (done) {
            g = rows[piv];
            rows.erase(rows.begin() + static_cast<long>(piv));
            have = true;
            break;
        }
    }
    if (!have) throw InternalInconsistency("ideal basis degenerate");
    // now all remaining rows have 0 in column 0; gcd column 1
    Int g1 = 0;
    for (auto& r : rows) g1 = gcd(g1, r[1]);
    if (g1 == 0) throw InternalInconsistency("ideal basis degenerate");
    if (g1 < 0) g1 = -g1;
    if (g[0] < 0) {
        g[0] = -g[0];
        g[1] = -g[1];
    }
    // reduce g[1] mod g1
    Int r = g[1] % g1;
    if (r < 0) r += g1;
    return {{{g[0], r}, {Int(0), g1}}};
}

}  // namespace

IdealZBasis ideal_basis_above(const QuadField& field, long p) {
    PrimeSplit s = splitting_type(field, p);
    if (s.kind == SplitKind::Split)
        throw UnsupportedSplitting("p = " + std::to_string(p) + " splits in Q(sqrt(" +
                                   std::to_string(field.D) + "))");
    IdealZBasis b;
    b.p = p;
    b.f = s.f;
    if (s.kind == SplitKind::Inert) {
        b.m = {{{Int(p), Int(0)}, {Int(0), Int(p)}}};
        return b;
    }
    // ramified: minimal polynomial of v factors as (x - r)^2 mod p, and the
    // prime ideal is (p, v - r)
    long c1, c0;  // v^2 = c1 v + c0
    if (((field.D % 4) + 4) % 4 == 1) {
        c1 = 1;
        c0 = (field.D - 1) / 4;  // v^2 - v + (1-D)/4 = 0
    } else {
        c1 = 0;
        c0 = field.D;
    }
    long r = -1;
    for (long x = 0; x < p; ++x)
        if (((x * x - c1 * x - c0) % p + p) % p == 0) {
            r = x;
            break;
        }
    if (r < 0) throw InternalInconsistency("ramified prime without a root");
    // module generated by p, p*v, (v - r), v*(v - r) in {1, v} coordinates
    // v*(v - r) = v^2 - r v = (c1 - r) v + c0
    std::vector<std::array<Int, 2>> rows = {
        {Int(p), Int(0)},
        {Int(0), Int(p)},
        {Int(-r), Int(1)},
        {Int(c0), Int(c1 - r)},
    };
    b.m = hnf2(std::move(rows));
    if (b.det() != p)
        throw InternalInconsistency("ideal basis has wrong index");
    return b;
}

bool codifferent_contains(const QuadField& field, const QElem& x) {
    return rat_is_integer(trace(x)) && rat_is_integer(trace(x * field.ok_gen));
}

std::array<double, 2> embed(const QElem& x) {
    double a = x.a.get_d(), b = x.b.get_d();
    if (x.D > 0) {
        double s = std::sqrt(static_cast<double>(x.D));
        return {a + b * s, a - b * s};
    }
    double s = std::sqrt(static_cast<double>(-x.D));
    // x = a + b*i*sqrt(d): (sqrt(2) Re, -sqrt(2) Im)
    const double r2 = std::sqrt(2.0);
    return {r2 * a, -r2 * b * s};
}

}  // namespace latcode
