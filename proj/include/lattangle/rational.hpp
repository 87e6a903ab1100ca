#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lattangle {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// e^{2*pi*i*num/den}, stored reduced with 0 <= num < den.
struct RootOfUnity {
    long num = 0;
    long den = 1;

    RootOfUnity() = default;
    RootOfUnity(long k, long n) {
        if (n < 1) throw std::invalid_argument("root of unity: order must be positive");
        k %= n;
        if (k < 0) k += n;
        long g = std::gcd(k, n);
        if (g > 1) { k /= g; n /= g; }
        num = k;
        den = n;
    }

    bool is_one() const { return den == 1; }
    long order() const { return den; }

    RootOfUnity inverse() const { return RootOfUnity(den - num, den); }
    RootOfUnity conj() const { return inverse(); }
    RootOfUnity pow(long e) const {
        // num*e may overflow for huge orders; orders here stay tiny.
        long m = (num % den) * (e % den) % den;
        return RootOfUnity(m, den);
    }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        long n = std::lcm(a.den, b.den);
        return RootOfUnity(a.num * (n / a.den) + b.num * (n / b.den), n);
    }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        if (a.den != b.den) return a.den < b.den;
        return a.num < b.num;
    }
};

inline RootOfUnity ru_make(long k, long n) { return RootOfUnity(k, n); }

inline RootOfUnity minus_one() { return RootOfUnity(1, 2); }

// ---- small number theory helpers ----

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, big;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) big.push_back(n / d);
        }
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    std::vector<std::pair<Integer, unsigned>> out;
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Squarefree part of a positive rational (d such that q = d * square).
inline Integer squarefree_part(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("squarefree_part: positive input required");
    Integer n = q.get_num() * q.get_den();
    Integer d = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 == 1) d *= p;
    return d;
}

}  // namespace lattangle
