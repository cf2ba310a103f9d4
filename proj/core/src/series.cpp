#include "yforge/series.hpp"

namespace yforge {

TSeries TSeries::one(int order) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    c[0] = Scalar(1);
    return TSeries(std::move(c));
}

TSeries TSeries::zero(int order) {
    return TSeries(std::vector<Scalar>(static_cast<std::size_t>(order) + 1));
}

TSeries TSeries::truncated(int order) const {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order && k <= this->order(); ++k) c[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return TSeries(std::move(c));
}

TSeries TSeries::operator+(const TSeries& o) const {
    int n = std::min(order(), o.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = (*this)[k] + o[k];
    return TSeries(std::move(c));
}

TSeries TSeries::operator-(const TSeries& o) const {
    int n = std::min(order(), o.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = (*this)[k] - o[k];
    return TSeries(std::move(c));
}

TSeries TSeries::operator*(const TSeries& o) const {
    int n = std::min(order(), o.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if ((*this)[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o[j].is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
        }
    }
    return TSeries(std::move(c));
}

TSeries TSeries::operator*(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x *= s;
    return TSeries(std::move(c));
}

TSeries TSeries::inverse() const {
    if (c_.empty() || c_[0].is_zero()) throw DivisionByZero();
    int n = order();
    std::vector<Scalar> r(static_cast<std::size_t>(n) + 1);
    Scalar inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Scalar s;
        for (int j = 1; j <= k; ++j) s += (*this)[j] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -(inv0 * s);
    }
    return TSeries(std::move(r));
}

TSeries TSeries::log() const {
    if (c_.empty() || !c_[0].is_one())
        throw std::invalid_argument("TSeries::log requires constant term 1");
    int n = order();
    TSeries x = *this - TSeries::one(n);  // nilpotent part
    TSeries acc = TSeries::zero(n);
    TSeries p = TSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        p = p * x;
        Scalar coef = Scalar(Rat(k % 2 == 1 ? 1 : -1, k));
        acc = acc + p * coef;
    }
    return acc;
}

TSeries TSeries::exp() const {
    if (c_.empty() || !c_[0].is_zero())
        throw std::invalid_argument("TSeries::exp requires constant term 0");
    int n = order();
    TSeries acc = TSeries::one(n);
    TSeries p = TSeries::one(n);
    Rat fact(1);
    for (int k = 1; k <= n; ++k) {
        p = p * (*this);
        fact *= k;
        acc = acc + p * Scalar(Rat(1) / fact);
    }
    return acc;
}

TSeries series_expand(const Scalar& f, SymId z, int order) {
    // f = N(z)/D(z) with coefficients Scalars in the other symbols
    std::uint32_t dn = f.num().degree_in(z), dd = f.den().degree_in(z);
    if (dn > dd) throw PoleAtInfinity();
    // in u = 1/z: f = u^(dd-dn) * (sum N_k u^(dn-k)) / (sum D_k u^(dd-k))
    auto lift = [&](const Poly& p, std::uint32_t deg) {
        std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
        for (std::uint32_t k = 0; k <= deg; ++k) {
            std::uint32_t upow = deg - k;
            if (static_cast<int>(upow) > order) continue;
            c[upow] = Scalar(p.coeff_of(z, k));
        }
        return TSeries(std::move(c));
    };
    TSeries num = lift(f.num(), dn);
    TSeries den = lift(f.den(), dd);
    TSeries q = num / den;
    // shift by u^(dd-dn)
    std::uint32_t shift = dd - dn;
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k + static_cast<int>(shift) <= order; ++k)
        c[static_cast<std::size_t>(k + static_cast<int>(shift))] = q[k];
    return TSeries(std::move(c));
}

LaurentSeries poly_times_series(const Scalar& poly_in_z, SymId z, const TSeries& s) {
    if (!poly_in_z.is_polynomial())
        throw std::invalid_argument("poly_times_series expects a polynomial in z");
    const Poly& p = poly_in_z.num();
    int deg = static_cast<int>(p.degree_in(z));
    int tail = s.order() - deg;  // below this order the product is not exact
    LaurentSeries out;
    out.top = deg;
    out.c.assign(static_cast<std::size_t>(deg + tail) + 1, Scalar());
    for (int k = 0; k <= deg; ++k) {
        Scalar pk = Scalar(p.coeff_of(z, static_cast<std::uint32_t>(k)));
        if (pk.is_zero()) continue;
        // z^k * u^j = z^(k-j)
        for (int j = 0; j <= s.order(); ++j) {
            int zpow = k - j;
            if (zpow < -tail) continue;
            out.c[static_cast<std::size_t>(out.top - zpow)] += pk * s[j];
        }
    }
    return out;
}

}  // namespace yforge
