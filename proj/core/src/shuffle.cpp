#include "yforge/shuffle.hpp"

#include <algorithm>
#include <sstream>

namespace yforge {

SymId lambda_sym(int i) { return sym("lam" + std::to_string(i)); }

ShElement::ShElement(int degree, Poly payload) : degree_(degree), payload_(std::move(payload)) {
    if (degree_ < 0) throw std::invalid_argument("negative shuffle degree");
    for (SymId v : payload_.vars())
        if (v > SYM_H2) {
            // payload may only use lam1..lam_degree besides h1, h2
            bool ok = false;
            for (int i = 1; i <= degree_; ++i)
                if (v == lambda_sym(i)) ok = true;
            if (!ok)
                throw std::invalid_argument("payload uses a variable outside lam1..lam_n");
        }
}

ShElement ShElement::unit() { return ShElement(0, Poly(Rat(1))); }
ShElement ShElement::scalar(const Poly& c) { return ShElement(0, c); }

bool ShElement::payload_symmetric() const { return is_symmetric(payload_, degree_); }

ShElement ShElement::operator+(const ShElement& o) const {
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("degree mismatch in shuffle sum");
    return ShElement(is_zero() ? o.degree_ : degree_, payload_ + o.payload_);
}

ShElement ShElement::operator-(const ShElement& o) const { return *this + (-o); }

ShElement ShElement::operator-() const { return ShElement(degree_, -payload_); }

ShElement ShElement::operator*(const Poly& c) const { return ShElement(degree_, payload_ * c); }

bool ShElement::operator==(const ShElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && Poly::equal(payload_, o.payload_);
}

bool is_symmetric(const Poly& p, int nlam) {
    for (int i = 1; i < nlam; ++i) {
        SymId a = lambda_sym(i), b = lambda_sym(i + 1);
        std::map<SymId, SymId> swap{{a, b}, {b, a}};
        if (!Poly::equal(p.rename(swap), p)) return false;
    }
    return true;
}

Poly ShuffleKernel::eval(const Poly& diff) const {
    return (diff - hbar_poly(1) * scale1) * (diff - hbar_poly(2) * scale2) *
           (diff - hbar_poly(3) * scale3);
}

namespace {

// map payload variables lam1..lam_k onto the positions listed in slots
Poly place(const Poly& payload, int k, const std::vector<int>& slots) {
    std::map<SymId, SymId> remap;
    // two-step rename through temporaries to avoid collisions
    for (int i = 0; i < k; ++i) remap[lambda_sym(i + 1)] = sym("lamtmp" + std::to_string(i));
    Poly mid = payload.rename(remap);
    remap.clear();
    for (int i = 0; i < k; ++i)
        remap[sym("lamtmp" + std::to_string(i))] = lambda_sym(slots[static_cast<std::size_t>(i)]);
    return mid.rename(remap);
}

}  // namespace

ShElement shuffle_mul(const ShElement& f, const ShElement& g, const ShuffleKernel& kernel) {
    int n = f.degree(), m = g.degree();
    if (f.is_zero() || g.is_zero()) return ShElement(n + m, Poly());
    if (n == 0) return ShElement(m, f.payload() * g.payload());
    if (m == 0) return ShElement(n, f.payload() * g.payload());
    int N = n + m;

    Poly total;
    // subsets A of size n as sorted index lists
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::vector<int> A = idx, B;
        for (int p = 1; p <= N; ++p)
            if (std::find(A.begin(), A.end(), p) == A.end()) B.push_back(p);

        // small numeric factors first: kernel on split pairs, plus the
        // unsplit vandermonde factors so every term sits over the full
        // prod_{s<t} (lam_s - lam_t); split pairs with s > t flip sign
        Poly factors(Rat(1));
        int inversions = 0;
        for (int s : A)
            for (int t : B) {
                Poly diff = Poly::var(lambda_sym(s)) - Poly::var(lambda_sym(t));
                factors *= kernel.eval(diff);
                if (s > t) ++inversions;
            }
        for (int s = 1; s <= N; ++s)
            for (int t = s + 1; t <= N; ++t) {
                bool s_in_A = std::find(A.begin(), A.end(), s) != A.end();
                bool t_in_A = std::find(A.begin(), A.end(), t) != A.end();
                if (s_in_A == t_in_A) factors *= Poly::var(lambda_sym(s)) - Poly::var(lambda_sym(t));
            }
        Poly term = place(f.payload(), n, A) * place(g.payload(), m, B) * factors;
        if (inversions % 2 == 1) term = -term;
        total += term;

        // next subset in lexicographic order
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - (n - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j2 = i + 1; j2 < n; ++j2)
            idx[static_cast<std::size_t>(j2)] = idx[static_cast<std::size_t>(j2 - 1)] + 1;
    }

    // clear the common denominator one linear factor at a time
    for (int s = 1; s <= N && !total.is_zero(); ++s)
        for (int t = s + 1; t <= N; ++t)
            total = poly_divexact_vardiff(total, lambda_sym(s), lambda_sym(t));
    return ShElement(N, std::move(total));
}

ShElement sh_commutator(const ShElement& f, const ShElement& g, const ShuffleKernel& kernel) {
    return shuffle_mul(f, g, kernel) - shuffle_mul(g, f, kernel);
}

ShElement sh_anticommutator(const ShElement& f, const ShElement& g, const ShuffleKernel& kernel) {
    return shuffle_mul(f, g, kernel) + shuffle_mul(g, f, kernel);
}

ShElement e_gen(int r) {
    if (r < 0) throw std::invalid_argument("e_gen needs r >= 0");
    return ShElement(1, Poly::var(lambda_sym(1), static_cast<std::uint32_t>(r)));
}

namespace {

ShuffleResidual make_residual(Poly residual, std::string what) {
    ShuffleResidual r;
    r.residual = std::move(residual);
    r.ok = r.residual.is_zero();
    r.describe = std::move(what);
    return r;
}

}  // namespace

ShuffleResidual check_y1(int i, int j, const ShuffleKernel& kernel) {
    auto br = [&](int a, int b) { return sh_commutator(e_gen(a), e_gen(b), kernel); };
    ShElement lhs = br(i + 3, j) - br(i + 2, j + 1) * Poly(Rat(3)) +
                    br(i + 1, j + 2) * Poly(Rat(3)) - br(i, j + 3) +
                    (br(i + 1, j) - br(i, j + 1)) * sigma2_poly();
    ShElement rhs = -(sh_anticommutator(e_gen(i), e_gen(j), kernel) * sigma3_poly());
    std::ostringstream os;
    os << "(Y1) i=" << i << " j=" << j;
    return make_residual((lhs - rhs).payload(), os.str());
}

ShuffleResidual check_serre(int i1, int i2, int i3, const ShuffleKernel& kernel) {
    int v[3] = {i1, i2, i3};
    int perm[3] = {0, 1, 2};
    ShElement acc(3, Poly());
    do {
        int a = v[perm[0]], b = v[perm[1]], c = v[perm[2]];
        acc = acc + sh_commutator(e_gen(a), sh_commutator(e_gen(b), e_gen(c + 1), kernel), kernel);
    } while (std::next_permutation(perm, perm + 3));
    std::ostringstream os;
    os << "(Y6) i=(" << i1 << "," << i2 << "," << i3 << ")";
    return make_residual(acc.payload(), os.str());
}

ShuffleResidual check_commutator_closed_form(int a, int b) {
    ShElement lhs = sh_commutator(e_gen(a), e_gen(b));
    Poly l1 = Poly::var(lambda_sym(1)), l2 = Poly::var(lambda_sym(2));
    Poly anti = l1.pow(static_cast<std::uint32_t>(a)) * l2.pow(static_cast<std::uint32_t>(b)) -
                l1.pow(static_cast<std::uint32_t>(b)) * l2.pow(static_cast<std::uint32_t>(a));
    Poly rhs = poly_divexact(anti, l1 - l2) * sigma3_poly() * Rat(-2);
    std::ostringstream os;
    os << "commutator closed form a=" << a << " b=" << b;
    return make_residual(lhs.payload() - rhs, os.str());
}

ShuffleResidual check_y4_conjugation(int j, int order) {
    std::ostringstream os;
    os << "(Y4) conjugation j=" << j << " order=" << order;
    if (order <= 0) return make_residual(Poly(), os.str() + " (vacuous)");

    SymId z = sym("z");
    Poly lam = Poly::var(lambda_sym(1));
    Poly zp = Poly::var(z);
    // P(z, w) = (z - w + h1)(z - w + h2)(z - w + h3)
    auto P = [&](const Poly& x, const Poly& y) {
        return (x - y + hbar_poly(1)) * (x - y + hbar_poly(2)) * (x - y + hbar_poly(3));
    };
    // conjugation factor prod (z - lam - h_k)/(z - lam + h_k) = -P(lam,z)/P(z,lam)
    Scalar conj = Scalar(-P(lam, zp)) / Scalar(P(zp, lam));
    TSeries psi_action = series_expand(conj, z, order);

    Poly lamj = lam.pow(static_cast<std::uint32_t>(j));
    LaurentSeries lhs = poly_times_series(Scalar(P(zp, lam) * lamj), z, psi_action);
    Poly rhs = -P(lam, zp) * lamj;  // polynomial in z, degree 3 in z

    Poly residual;
    for (std::size_t k = 0; k < lhs.c.size(); ++k) {
        int zpow = lhs.top - static_cast<int>(k);
        Poly want = zpow >= 0 ? rhs.coeff_of(z, static_cast<std::uint32_t>(zpow)) : Poly();
        if (!lhs.c[k].is_polynomial())
            throw std::logic_error("conjugation series coefficient is not polynomial");
        Poly diff = lhs.c[k].num() - want;
        residual += diff * diff;
    }
    return make_residual(residual, os.str());
}

std::string DrinfeldTerm::str() const {
    std::ostringstream os;
    bool lead = true;
    for (int t : psi_args) {
        if (!lead) os << "*";
        os << "psi(lam" << t << ")";
        lead = false;
    }
    if (!lead) os << " * ";
    os << "[" << payload.str() << "]";
    if (!denom.empty()) os << " / " << denom;
    os << "  (|A|=" << a << ")";
    return os.str();
}

std::vector<DrinfeldTerm> drinfeld_terms(const ShElement& P) {
    int n = P.degree();
    std::vector<DrinfeldTerm> out;
    for (int a = 0; a <= n; ++a) {
        DrinfeldTerm t;
        t.a = a;
        for (int b = a + 1; b <= n; ++b) t.psi_args.push_back(b);
        t.payload = P.payload();
        if (a < n && a > 0) {
            std::ostringstream os;
            os << "fac(lam" << (a + 1) << ".." << n << " | lam1.." << a << ")";
            t.denom = os.str();
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DrinfeldTerm> drinfeld_coproduct_deg1(const ShElement& P) {
    if (P.degree() > 1) throw DegreeUnsupported();
    return drinfeld_terms(P);
}

}  // namespace yforge
