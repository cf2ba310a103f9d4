#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yforge/symbols.hpp"

namespace yforge {

using Rat = mpq_class;

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("polynomial division is not exact") {}
};
struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Sparse monomial: (symbol id, exponent) pairs sorted by id, exponents > 0.
struct Monomial {
    std::vector<std::pair<SymId, std::uint32_t>> ex;

    static Monomial one() { return {}; }
    static Monomial var(SymId v, std::uint32_t e = 1);
    bool is_one() const { return ex.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(SymId v) const;

    Monomial operator*(const Monomial& o) const;
    // o must divide *this
    Monomial operator/(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return ex == o.ex; }
    std::string str() const;
};

/// Graded lexicographic order; lower symbol ids are more significant.
/// Returns <0, 0, >0 like a three-way compare, larger = later in the order.
int monomial_cmp(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) > 0; }
};

/// Multivariate polynomial over Q, canonical form: terms sorted in strictly
/// decreasing graded-lex order, no zero coefficients.
class Poly {
public:
    struct Term {
        Monomial m;
        Rat c;
    };

    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long n) : Poly(Rat(n)) {}
    static Poly var(SymId v, std::uint32_t e = 1);
    static Poly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(SymId v) const;
    bool contains(SymId v) const;
    std::vector<SymId> vars() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    Poly pow(std::uint32_t e) const;
    bool operator==(const Poly& o) const { return equal(*this, o); }
    static bool equal(const Poly& a, const Poly& b);

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coeff_of(SymId v, std::uint32_t k) const;
    /// Substitute v -> value.
    Poly subst(SymId v, const Poly& value) const;
    /// Rename variables; ids absent from the map are kept.
    Poly rename(const std::map<SymId, SymId>& remap) const;
    /// Evaluate at a full rational point (every variable must be mapped).
    Rat eval(const std::map<SymId, Rat>& point) const;

    Rat rational_content() const;  // gcd of coefficients, sign of leading term
    Monomial monomial_content() const;

    std::string str() const;

    // Builder used by arithmetic: accumulate then normalize once.
    static Poly from_map(std::map<Monomial, Rat, MonomialGreater>&& acc);

private:
    std::vector<Term> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Throws NotDivisible unless den divides num exactly.
Poly poly_divexact(const Poly& num, const Poly& den);
bool poly_divides(const Poly& den, const Poly& num);

/// Exact division by (var_a - var_b), synthetic division in var_a.
Poly poly_divexact_vardiff(const Poly& num, SymId a, SymId b);

/// Gcd over Q[x...], normalized with leading coefficient 1.
Poly poly_gcd(Poly a, Poly b);

/// Convenience: h1, h2 and h3 = -h1-h2 as polynomials.
Poly hbar_poly(int k);
/// sigma2 = h1 h2 + h2 h3 + h1 h3, sigma3 = h1 h2 h3 (with h3 = -h1-h2).
Poly sigma2_poly();
Poly sigma3_poly();

}  // namespace yforge
