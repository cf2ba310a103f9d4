#include "yforge/scalar.hpp"

namespace yforge {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

Scalar Scalar::raw(Poly num, Poly den) {
    Scalar s;
    if (num.is_zero()) return s;
    Rat lead = den.leading().c;
    if (lead != 1) {
        Rat inv = 1 / lead;
        num = num * inv;
        den = den * inv;
    }
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    Rat lead = den_.leading().c;
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    // both operands are reduced, so new common factors can only come from
    // the gcd of the denominators
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return raw(num_ + o.num_, den_);
    if (Poly::equal(den_, o.den_)) return Scalar(num_ + o.num_, den_);
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_one()) return raw(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly b1 = poly_divexact(den_, g), d1 = poly_divexact(o.den_, g);
    Poly num = num_ * d1 + o.num_ * b1;
    Poly den = b1 * o.den_;
    Poly h = poly_gcd(num, g);
    if (!h.is_one()) {
        num = poly_divexact(num, h);
        den = poly_divexact(den, h);
    }
    return raw(std::move(num), std::move(den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // cross-cancellation keeps the product reduced without a large gcd
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant()) {
        Poly g1 = poly_gcd(a, d);
        if (!g1.is_one()) {
            a = poly_divexact(a, g1);
            d = poly_divexact(d, g1);
        }
    }
    if (!b.is_constant()) {
        Poly g2 = poly_gcd(c, b);
        if (!g2.is_one()) {
            c = poly_divexact(c, g2);
            b = poly_divexact(b, g2);
        }
    }
    return raw(a * c, b * d);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return Scalar();
    return *this * raw(o.den_, o.num_);
}

Scalar Scalar::pow(std::uint32_t e) const {
    // powers of a reduced fraction stay reduced
    if (e == 0) return Scalar(1);
    if (is_zero()) return Scalar();
    return raw(num_.pow(e), den_.pow(e));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return raw(den_, num_);
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    auto cmp_poly = [](const Poly& x, const Poly& y) -> int {
        const auto& tx = x.terms();
        const auto& ty = y.terms();
        if (tx.size() != ty.size()) return tx.size() < ty.size() ? -1 : 1;
        for (std::size_t i = 0; i < tx.size(); ++i) {
            int c = monomial_cmp(tx[i].m, ty[i].m);
            if (c != 0) return c;
            int cc = ::cmp(tx[i].c, ty[i].c);
            if (cc != 0) return cc;
        }
        return 0;
    };
    int c = cmp_poly(a.num_, b.num_);
    if (c != 0) return c;
    return cmp_poly(a.den_, b.den_);
}

Scalar Scalar::subst(SymId v, const Scalar& value) const {
    // substitute into num and den separately, combining fractions
    auto subst_poly = [&](const Poly& p) -> Scalar {
        Scalar acc;
        std::uint32_t d = p.degree_in(v);
        std::vector<Scalar> powers(d + 1);
        powers[0] = Scalar(1);
        for (std::uint32_t k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
        for (std::uint32_t k = 0; k <= d; ++k) {
            Poly ck = p.coeff_of(v, k);
            if (!ck.is_zero()) acc += Scalar(ck) * powers[k];
        }
        return acc;
    };
    return subst_poly(num_) / subst_poly(den_);
}

Rat Scalar::eval(const std::map<SymId, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw DivisionByZero();
    return num_.eval(point) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.terms().size() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

Scalar hbar(int k) { return Scalar(hbar_poly(k)); }
Scalar sigma2() { return Scalar(sigma2_poly()); }
Scalar sigma3() { return Scalar(sigma3_poly()); }

}  // namespace yforge
