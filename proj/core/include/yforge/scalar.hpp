#pragma once

#include <string>

#include "yforge/poly.hpp"

namespace yforge {

/// Exact rational function over Q in the registered symbols, kept in a
/// canonical reduced form: gcd(num, den) = 1 and den has leading coefficient
/// 1 in graded-lex order.  Structural equality is mathematical equality.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long n) : num_(Rat(n)), den_(Rat(1)) {}
    explicit Scalar(const Rat& r) : num_(r), den_(Rat(1)) {}
    explicit Scalar(const Poly& p) : num_(p), den_(Rat(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar var(SymId v) { return Scalar(Poly::var(v)); }
    static Scalar ratio(long num, long den) { return Scalar(Rat(num, den)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar pow(std::uint32_t e) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const {
        return Poly::equal(num_, o.num_) && Poly::equal(den_, o.den_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order for deterministic containers, not a mathematical order.
    static int cmp(const Scalar& a, const Scalar& b);

    Scalar subst(SymId v, const Scalar& value) const;
    Rat eval(const std::map<SymId, Rat>& point) const;  // DivisionByZero if den vanishes

    std::string str() const;

private:
    /// num/den already coprime; only normalizes the leading coefficient.
    static Scalar raw(Poly num, Poly den);
    void reduce();
    Poly num_, den_{Rat(1)};
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

/// hbar_k as a Scalar (k = 3 is -h1-h2).
Scalar hbar(int k);
Scalar sigma2();
Scalar sigma3();

}  // namespace yforge
