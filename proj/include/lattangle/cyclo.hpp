#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n), power-basis representation
// reduced modulo the n-th cyclotomic polynomial.

#include <optional>
#include <string>
#include <vector>

#include "lattangle/linalg.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

/// Dense univariate polynomial over Q; index = degree of the monomial.
using QPoly = std::vector<Rational>;

/// n-th cyclotomic polynomial (monic, degree phi(n)); results are cached.
const QPoly& cyclotomic_poly(long n);

/// Maximum order allowed when lifting to a common field (default 10000,
/// overridable via the LATTANGLE_ORDER_CAP environment variable).
long order_cap();

class Cyclo {
public:
    Cyclo() : order_(1), coords_{Rational(0)} {}
    Cyclo(const Rational& q) : order_(1), coords_{q} {}
    Cyclo(long v) : order_(1), coords_{Rational(v)} {}

    /// The complex value e^{2*pi*i*num/den} as a field element.
    static Cyclo root(const RootOfUnity& r);
    static Cyclo zeta(long n, long k = 1) { return root(RootOfUnity(k, n)); }
    /// Build from raw coordinates (length phi(order)); reduces nothing.
    static Cyclo from_coords(long order, QVec coords);

    long order() const { return order_; }
    const QVec& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// Same value expressed in Q(zeta_m); requires order | m.
    Cyclo lifted(long m) const;
    /// Canonical form of minimal order (subfield descent).
    Cyclo reduced() const;

    Cyclo operator-() const;
    Cyclo conj() const { return galois(order_ - 1 == 0 ? 1 : order_ - 1); }
    /// Field automorphism zeta -> zeta^k; requires gcd(k, order) = 1.
    Cyclo galois(long k) const;
    Cyclo inv() const;
    Cyclo pow(long e) const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// Deterministic total order (for canonical sorting of outputs).
    friend bool operator<(const Cyclo& a, const Cyclo& b);

private:
    long order_;
    QVec coords_;  // length phi(order_)
};

inline Cyclo operator*(const Rational& q, const Cyclo& x) { return Cyclo(q) * x; }

/// conj(x) == x, i.e. the value is real.
bool is_real(const Cyclo& x);
/// conj(x) == -x, i.e. the value is purely imaginary (or zero).
bool is_imaginary(const Cyclo& x);

/// Three-way outcome of u = rho * v with rho rational.
struct RatioResult {
    enum Kind { Ratio, None, Indeterminate } kind;
    Rational value;  // meaningful only when kind == Ratio
};
RatioResult rational_ratio(const Cyclo& u, const Cyclo& v);

/// Monic minimal polynomial of x over Q.
QPoly min_poly(const Cyclo& x);

/// If x is a root of unity, return it in reduced fraction-of-turn form.
std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x);

/// Coordinates of x as a Q-linear combination of the given elements, if any.
std::optional<QVec> q_decompose(const Cyclo& x, const std::vector<Cyclo>& basis);
/// Dimension of the Q-span of the given elements.
size_t q_rank(const std::vector<Cyclo>& elems);

}  // namespace lattangle
