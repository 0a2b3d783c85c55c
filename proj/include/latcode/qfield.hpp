#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "latcode/ratmat.hpp"

namespace latcode {

struct QuadField;

/// Exact element a + b*sqrt(D) of the quadratic field Q(sqrt(D)).
struct QElem {
    Rat a;
    Rat b;
    long D = 0;

    QElem() = default;
    QElem(Rat a_, Rat b_, long D_) : a(std::move(a_)), b(std::move(b_)), D(D_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QElem& o) const { return D == o.D && a == o.a && b == o.b; }
};

QElem operator+(const QElem& x, const QElem& y);
QElem operator-(const QElem& x, const QElem& y);
QElem operator-(const QElem& x);
QElem operator*(const QElem& x, const QElem& y);
QElem operator*(const Rat& c, const QElem& x);

/// Galois conjugate a - b*sqrt(D); for imaginary D this is complex conjugation.
QElem conj(const QElem& x);

/// The conjugate used in the trace pairing b_alpha: identity on totally real
/// fields, complex conjugation on imaginary ones.
QElem pairing_bar(const QElem& x);

Rat trace(const QElem& x);  // 2a
Rat norm(const QElem& x);   // a^2 - D b^2

/// Quadratic field Q(sqrt(D)), D squarefree, with ring of integers Z[v].
struct QuadField {
    long D = 0;    // positive for real, negative for imaginary
    Int disc;      // absolute value of the discriminant
    QElem ok_gen;  // v = (1+sqrt(D))/2 if D = 1 mod 4, else sqrt(D)

    bool imaginary() const { return D < 0; }
    long level() const { return D < 0 ? -D : D; }  // d

    QElem zero() const { return QElem(0, 0, D); }
    QElem one() const { return QElem(1, 0, D); }
    QElem sqrt_d() const { return QElem(0, 1, D); }
    QElem from_rat(const Rat& r) const { return QElem(r, 0, D); }
    /// s + t*v for integer (or rational) coordinates in the {1, v} basis.
    QElem from_ok_coords(const Rat& s, const Rat& t) const;
    /// Coordinates (s, t) of x in the {1, v} basis; exact rationals.
    std::pair<Rat, Rat> ok_coords(const QElem& x) const;
    bool in_ok(const QElem& x) const;
};

QuadField make_field(long D);

enum class SplitKind { Inert, Ramified, Split };

struct PrimeSplit {
    long p = 0;
    SplitKind kind = SplitKind::Inert;
    int f = 2;  // inertia degree
    int e = 1;  // ramification index
};

PrimeSplit splitting_type(const QuadField& field, long p);

/// Z-basis of the unique prime ideal above p, rows in {1, v} coordinates,
/// Hermite normal form. det = p^f.
struct IdealZBasis {
    long p = 0;
    int f = 2;
    std::array<std::array<Int, 2>, 2> m{};

    QElem omega(const QuadField& field, int i) const;
    Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// Only inert and ramified primes are supported; split primes throw
/// UnsupportedSplitting.
IdealZBasis ideal_basis_above(const QuadField& field, long p);

bool codifferent_contains(const QuadField& field, const QElem& x);

/// Real field: (sigma_1(x), sigma_2(x)). Imaginary: (sqrt(2) Re x, -sqrt(2) Im x).
std::array<double, 2> embed(const QElem& x);

bool is_prime(long p);
bool is_squarefree(long n);

}  // namespace latcode
