#pragma once

#include <vector>

#include "yforge/scalar.hpp"

namespace yforge {

struct PoleAtInfinity : std::runtime_error {
    PoleAtInfinity() : std::runtime_error("rational function has a pole at z = infinity") {}
};

/// Truncated power series with Scalar coefficients: c[0] + c[1] u + ... up to
/// the stored order.  Used both for z^-1 expansions (u = 1/z) and t-series.
class TSeries {
public:
    TSeries() = default;
    explicit TSeries(std::vector<Scalar> c) : c_(std::move(c)) {}
    static TSeries one(int order);
    static TSeries zero(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Scalar& at(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    TSeries truncated(int order) const;

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;
    TSeries operator*(const Scalar& s) const;
    /// Multiplicative inverse; the constant term must be nonzero.
    TSeries inverse() const;
    TSeries operator/(const TSeries& o) const { return *this * o.inverse(); }

    /// log(*this); constant term must be 1.
    TSeries log() const;
    /// exp(*this); constant term must be 0.
    TSeries exp() const;

    bool operator==(const TSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Scalar> c_;
};

/// Expansion of f (a Scalar rational in the symbol z) at z = infinity, as
/// coefficients of z^0, z^-1, ..., z^-order.  Requires deg_z num <= deg_z den.
TSeries series_expand(const Scalar& f, SymId z, int order);

/// Laurent data for P(z) * S(1/z) with P a polynomial in z: positive powers
/// z^maxdeg..z^1 plus the z^-k tail.  Coefficients of z^k for k in
/// [-(order - deg), maxdeg].
struct LaurentSeries {
    int top;                 // largest power of z present
    std::vector<Scalar> c;   // c[i] = coefficient of z^(top - i)
    bool operator==(const LaurentSeries& o) const { return top == o.top && c == o.c; }
};
LaurentSeries poly_times_series(const Scalar& poly_in_z, SymId z, const TSeries& s);

}  // namespace yforge
