#pragma once

// Multivariate (Laurent) polynomials with cyclotomic coefficients.
// Variable lists are kept sorted; exponent vectors may contain negative
// entries (created by monomial substitutions, not by the parser).

#include <map>
#include <string>
#include <vector>

#include "lattangle/cyclo.hpp"

namespace lattangle {

class MPoly {
public:
    using Exps = std::vector<long>;

    MPoly() = default;
    static MPoly constant(const Cyclo& c);
    static MPoly variable(const std::string& name);
    static MPoly monomial(const Cyclo& coeff, const std::vector<std::string>& vars,
                          const Exps& exps);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, Cyclo>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclo constant_value() const;  // requires is_constant

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(long e) const;  // e < 0 only for single-term polynomials

    /// Evaluate; every variable must be bound.
    Cyclo eval(const std::map<std::string, Cyclo>& point) const;
    /// Replace mapped variables by polynomials; unmapped variables persist.
    MPoly substitute(const std::map<std::string, MPoly>& map) const;

    /// Re-express over a variable superset (names must include vars()).
    MPoly with_vars(const std::vector<std::string>& names) const;

    /// Parse an integer-coefficient expression with explicit '*' products,
    /// '+', '-', '^' (nonnegative integer powers) and parentheses.
    static MPoly parse(const std::string& expr);

    std::string to_string() const;

private:
    void prune();
    std::vector<std::string> vars_;   // sorted, unique
    std::map<Exps, Cyclo> terms_;     // exps.size() == vars_.size()
};

}  // namespace lattangle
