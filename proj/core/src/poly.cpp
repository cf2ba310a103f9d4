#include "yforge/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace yforge {

Monomial Monomial::var(SymId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.ex.emplace_back(v, e);
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : ex) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(SymId v) const {
    for (auto& [w, e] : ex)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.ex.reserve(ex.size() + o.ex.size());
    std::size_t i = 0, j = 0;
    while (i < ex.size() && j < o.ex.size()) {
        if (ex[i].first < o.ex[j].first)
            r.ex.push_back(ex[i++]);
        else if (ex[i].first > o.ex[j].first)
            r.ex.push_back(o.ex[j++]);
        else {
            r.ex.emplace_back(ex[i].first, ex[i].second + o.ex[j].second);
            ++i, ++j;
        }
    }
    for (; i < ex.size(); ++i) r.ex.push_back(ex[i]);
    for (; j < o.ex.size(); ++j) r.ex.push_back(o.ex[j]);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    std::size_t i = 0;
    for (auto& [v, e] : o.ex) {
        while (i < ex.size() && ex[i].first < v) ++i;
        if (i == ex.size() || ex[i].first != v || ex[i].second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, e] : ex) {
        std::uint32_t sub = 0;
        if (j < o.ex.size() && o.ex[j].first == v) sub = o.ex[j++].second;
        if (sub > e) throw NotDivisible();
        if (e > sub) r.ex.emplace_back(v, e - sub);
    }
    if (j != o.ex.size()) throw NotDivisible();
    return r;
}

std::string Monomial::str() const {
    if (ex.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : ex) {
        if (!first) os << "*";
        first = false;
        os << sym_name(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic with smaller ids more significant
    std::size_t i = 0, j = 0;
    while (i < a.ex.size() && j < b.ex.size()) {
        if (a.ex[i].first != b.ex[j].first)
            return a.ex[i].first < b.ex[j].first ? 1 : -1;  // extra power of an earlier var wins
        if (a.ex[i].second != b.ex[j].second)
            return a.ex[i].second < b.ex[j].second ? -1 : 1;
        ++i, ++j;
    }
    if (i < a.ex.size()) return 1;
    if (j < b.ex.size()) return -1;
    return 0;
}

Poly::Poly(const Rat& c) {
    if (c != 0) terms_.push_back({Monomial::one(), c});
}

Poly Poly::var(SymId v, std::uint32_t e) { return term(Monomial::var(v, e), Rat(1)); }

Poly Poly::term(const Monomial& m, const Rat& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
}

const Poly::Term& Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
}

std::uint32_t Poly::degree_in(SymId v) const {
    std::uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.degree_in(v));
    return d;
}

bool Poly::contains(SymId v) const {
    for (auto& t : terms_)
        if (t.m.degree_in(v) > 0) return true;
    return false;
}

std::vector<SymId> Poly::vars() const {
    std::vector<SymId> vs;
    for (auto& t : terms_)
        for (auto& [v, e] : t.m.ex)
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

Poly Poly::from_map(std::map<Monomial, Rat, MonomialGreater>&& acc) {
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = monomial_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    // scaling a sorted polynomial by one monomial keeps it sorted, so the
    // product is a balanced merge of |smaller| shifted copies of the larger
    const Poly& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Poly& small = terms_.size() >= o.terms_.size() ? o : *this;
    std::vector<Poly> parts;
    parts.reserve(small.terms_.size());
    for (auto& t : small.terms_) {
        Poly p;
        p.terms_.reserve(big.terms_.size());
        for (auto& b : big.terms_) p.terms_.push_back({b.m * t.m, b.c * t.c});
        parts.push_back(std::move(p));
    }
    while (parts.size() > 1) {
        std::vector<Poly> next;
        next.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return parts[0];
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r(Rat(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Poly::equal(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

Poly Poly::coeff_of(SymId v, std::uint32_t k) const {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& t : terms_) {
        if (t.m.degree_in(v) != k) continue;
        acc[t.m / Monomial::var(v, k)] += t.c;
    }
    return from_map(std::move(acc));
}

Poly Poly::subst(SymId v, const Poly& value) const {
    Poly r;
    std::uint32_t d = degree_in(v);
    std::vector<Poly> powers(d + 1);
    powers[0] = Poly(Rat(1));
    for (std::uint32_t k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
    for (std::uint32_t k = 0; k <= d; ++k) {
        Poly ck = coeff_of(v, k);
        if (!ck.is_zero()) r += ck * powers[k];
    }
    return r;
}

Poly Poly::rename(const std::map<SymId, SymId>& remap) const {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& t : terms_) {
        Monomial m;
        for (auto& [v, e] : t.m.ex) {
            auto it = remap.find(v);
            m = m * Monomial::var(it == remap.end() ? v : it->second, e);
        }
        acc[m] += t.c;
    }
    return from_map(std::move(acc));
}

Rat Poly::eval(const std::map<SymId, Rat>& point) const {
    Rat r(0);
    for (auto& t : terms_) {
        Rat v = t.c;
        for (auto& [s, e] : t.m.ex) {
            auto it = point.find(s);
            if (it == point.end()) throw std::invalid_argument("eval: unbound symbol " + sym_name(s));
            for (std::uint32_t k = 0; k < e; ++k) v *= it->second;
        }
        r += v;
    }
    return r;
}

Rat Poly::rational_content() const {
    if (is_zero()) return Rat(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading().c < 0) c = -c;
    return c;
}

Monomial Poly::monomial_content() const {
    if (is_zero()) return Monomial::one();
    Monomial g = terms_[0].m;
    for (auto& t : terms_) {
        if (g.is_one()) break;
        Monomial ng;
        for (auto& [v, e] : g.ex) {
            std::uint32_t o = t.m.degree_in(v);
            if (std::min(e, o) > 0) ng.ex.emplace_back(v, std::min(e, o));
        }
        g = ng;
    }
    return g;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rat a = t.c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (t.m.is_one())
            os << a.get_str();
        else if (a == 1)
            os << t.m.str();
        else
            os << a.get_str() << "*" << t.m.str();
    }
    return os.str();
}

Poly poly_divexact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return {};
    std::map<Monomial, Rat, MonomialGreater> q;
    Poly rem = num;
    const auto& dl = den.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        if (!rl.m.divisible_by(dl.m)) throw NotDivisible();
        Monomial qm = rl.m / dl.m;
        Rat qc = rl.c / dl.c;
        q[qm] += qc;
        rem -= Poly::term(qm, qc) * den;
    }
    return Poly::from_map(std::move(q));
}

Poly poly_divexact_vardiff(const Poly& num, SymId a, SymId b) {
    if (num.is_zero()) return {};
    std::uint32_t d = num.degree_in(a);
    if (d == 0) throw NotDivisible();
    // num = sum c_k a^k; synthetic division by (a - b):
    // q_{k-1} = c_k + b * q_k (q_d = 0), remainder c_0 + b * q_0 must vanish
    std::vector<Poly> c(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) c[k] = num.coeff_of(a, k);
    Poly bmono = Poly::var(b);
    std::vector<Poly> q(d);
    q[d - 1] = c[d];
    for (std::uint32_t k = d - 1; k >= 1; --k) q[k - 1] = c[k] + bmono * q[k];
    if (!(c[0] + bmono * q[0]).is_zero()) throw NotDivisible();
    Poly r;
    for (std::uint32_t k = 0; k < d; ++k)
        if (!q[k].is_zero()) r += q[k] * Poly::var(a, k);
    return r;
}

bool poly_divides(const Poly& den, const Poly& num) {
    if (den.is_zero()) return num.is_zero();
    if (num.is_zero()) return true;
    Poly rem = num;
    const auto& dl = den.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        if (!rl.m.divisible_by(dl.m)) return false;
        Monomial qm = rl.m / dl.m;
        Rat qc = rl.c / dl.c;
        rem -= Poly::term(qm, qc) * den;
    }
    return true;
}

namespace {

// a as a dense vector of coefficient polynomials in the main variable v
std::vector<Poly> coeff_vec(const Poly& a, SymId v) {
    std::vector<Poly> c(a.degree_in(v) + 1);
    for (std::uint32_t k = 0; k < c.size(); ++k) c[k] = a.coeff_of(v, k);
    return c;
}

Poly from_coeff_vec(const std::vector<Poly>& c, SymId v) {
    Poly r;
    for (std::uint32_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) r += c[k] * Poly::var(v, k);
    return r;
}

Poly content_wrt(const Poly& a, SymId v) {
    Poly g;
    for (std::uint32_t k = 0; k <= a.degree_in(v); ++k) {
        Poly c = a.coeff_of(v, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of f by g in variable v (g nonzero in v)
Poly pseudo_rem(const Poly& f, const Poly& g, SymId v) {
    std::vector<Poly> fc = coeff_vec(f, v);
    std::vector<Poly> gc = coeff_vec(g, v);
    std::size_t dg = gc.size() - 1;
    const Poly& glead = gc[dg];
    while (fc.size() >= gc.size()) {
        std::size_t df = fc.size() - 1;
        Poly flead = fc[df];
        // lc(g) * f - lc(f) * v^(df-dg) * g
        for (auto& c : fc) c = c * glead;
        for (std::size_t k = 0; k <= dg; ++k) fc[k + df - dg] -= flead * gc[k];
        while (!fc.empty() && fc.back().is_zero()) fc.pop_back();
        if (fc.empty()) break;
        if (fc.size() - 1 >= df) throw std::logic_error("pseudo_rem did not reduce degree");
    }
    return from_coeff_vec(fc, v);
}

Poly normalize_monic(Poly p) {
    if (p.is_zero()) return p;
    Rat inv = 1 / p.leading().c;
    return p * inv;
}

// symmetric remainder in (-xi/2, xi/2]
mpz_class smod(const mpz_class& a, const mpz_class& xi) {
    mpz_class r = a % xi;
    if (r < 0) r += xi;
    if (2 * r > xi) r -= xi;
    return r;
}

mpz_class max_norm_int(const Poly& p) {
    mpz_class m(0);
    for (auto& t : p.terms()) {
        mpz_class a = abs(t.c.get_num());
        if (a > m) m = a;
    }
    return m;
}

Poly eval_at_int(const Poly& p, SymId v, const mpz_class& xi) {
    std::uint32_t d = p.degree_in(v);
    std::vector<mpz_class> powers(d + 1);
    powers[0] = 1;
    for (std::uint32_t k = 1; k <= d; ++k) powers[k] = powers[k - 1] * xi;
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& t : p.terms()) {
        std::uint32_t k = t.m.degree_in(v);
        acc[t.m / Monomial::var(v, k)] += t.c * Rat(powers[k]);
    }
    return Poly::from_map(std::move(acc));
}

Poly poly_smod(const Poly& p, const mpz_class& xi) {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& t : p.terms()) {
        mpz_class r = smod(t.c.get_num(), xi);
        if (r != 0) acc[t.m] += Rat(r);
    }
    return Poly::from_map(std::move(acc));
}

// exact division of every integer coefficient by d
Poly poly_int_scale(const Poly& p, const mpz_class& d) {
    std::map<Monomial, Rat, MonomialGreater> acc;
    for (auto& t : p.terms()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), t.c.get_num().get_mpz_t(), d.get_mpz_t());
        acc[t.m] += Rat(q);
    }
    return Poly::from_map(std::move(acc));
}

Poly int_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class g(0);
    for (auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num().get_mpz_t());
    if (p.leading().c < 0) g = -g;
    return poly_int_scale(p, g);
}

mpz_class int_content(const Poly& p) {
    mpz_class g(0);
    for (auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num().get_mpz_t());
    return g;
}

// Heuristic gcd over Z (Char-Geddes-Gonnet): strip integer content, evaluate
// one variable at a large integer, recurse on the image, reconstruct the
// candidate xi-adically, take its primitive part and verify by division.
// Returns the full integer gcd (content included), or nullopt on failure.
std::optional<Poly> heugcd(Poly f, Poly g, int depth) {
    if (depth > 24) return std::nullopt;
    mpz_class cf = int_content(f), cg = int_content(g);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    f = poly_int_scale(f, f.leading().c < 0 ? mpz_class(-cf) : cf);
    g = poly_int_scale(g, g.leading().c < 0 ? mpz_class(-cg) : cg);

    std::vector<SymId> uni = f.vars();
    for (SymId v : g.vars())
        if (std::find(uni.begin(), uni.end(), v) == uni.end()) uni.push_back(v);
    if (uni.empty()) return Poly(Rat(c));  // both are 1 after content strip
    SymId v = uni.back();

    mpz_class fn = max_norm_int(f), gn = max_norm_int(g);
    mpz_class xi = 2 * (fn < gn ? fn : gn) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly ff = eval_at_int(f, v, xi), gg = eval_at_int(g, v, xi);
        if (!ff.is_zero() && !gg.is_zero()) {
            std::optional<Poly> hh = heugcd(ff, gg, depth + 1);
            if (hh && !hh->is_zero()) {
                Poly h, cursor = *hh;
                std::uint32_t i = 0;
                bool ok = true;
                while (!cursor.is_zero()) {
                    Poly digit = poly_smod(cursor, xi);
                    if (!digit.is_zero()) h += digit * Poly::term(Monomial::var(v, i), Rat(1));
                    Poly diff = cursor - digit;
                    cursor = diff.is_zero() ? Poly() : poly_int_scale(diff, xi);
                    if (++i > 512) {
                        ok = false;
                        break;
                    }
                }
                if (ok && !h.is_zero()) {
                    h = int_primitive(h);
                    if (poly_divides(h, f) && poly_divides(h, g)) return h * Rat(c);
                }
            }
        }
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
        mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
        xi = 73794 * xi * root / 27011;
    }
    return std::nullopt;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (Poly::equal(a, b)) return normalize_monic(a);
    // pull out monomial content; rational content is a unit over Q
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg;
    for (auto& [v, e] : ma.ex) {
        std::uint32_t o = mb.degree_in(v);
        if (std::min(e, o) > 0) mg.ex.emplace_back(v, std::min(e, o));
    }
    a = poly_divexact(a, Poly::term(ma, Rat(1)));
    b = poly_divexact(b, Poly::term(mb, Rat(1)));
    if (a.is_constant() || b.is_constant()) return normalize_monic(Poly::term(mg, Rat(1)));

    // if no variable is common the gcd reduces to the monomial part
    std::vector<SymId> va = a.vars(), vb = b.vars();
    std::vector<SymId> common;
    for (SymId v : va)
        if (std::find(vb.begin(), vb.end(), v) != vb.end()) common.push_back(v);
    if (common.empty()) return normalize_monic(Poly::term(mg, Rat(1)));

    // heuristic gcd first; clear rational denominators to land in Z[x...]
    {
        Poly ai = a * (Rat(1) / a.rational_content());
        Poly bi = b * (Rat(1) / b.rational_content());
        std::optional<Poly> h = heugcd(ai, bi, 0);
        if (h) return normalize_monic(*h * Poly::term(mg, Rat(1)));
    }

    // fallback: primitive PRS in the common variable of smallest max degree
    SymId v = common[0];
    std::uint32_t bestdeg = std::max(a.degree_in(v), b.degree_in(v));
    for (SymId w : common) {
        std::uint32_t d = std::max(a.degree_in(w), b.degree_in(w));
        if (d < bestdeg) v = w, bestdeg = d;
    }
    Poly ca = content_wrt(a, v), cb = content_wrt(b, v);
    Poly g_cont = poly_gcd(ca, cb);
    Poly f = poly_divexact(a, ca), g = poly_divexact(b, cb);
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    // primitive PRS
    while (true) {
        Poly r = pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        Poly cr = content_wrt(r, v);
        f = g;
        g = poly_divexact(r, cr);
    }
    Poly cg = content_wrt(g, v);
    Poly pp = poly_divexact(g, cg);
    if (!poly_divides(pp, a) || !poly_divides(pp, b))
        throw std::logic_error("poly_gcd: PRS produced a non-divisor");
    return normalize_monic(pp * g_cont * Poly::term(mg, Rat(1)));
}

Poly hbar_poly(int k) {
    switch (k) {
        case 1: return Poly::var(SYM_H1);
        case 2: return Poly::var(SYM_H2);
        case 3: return -Poly::var(SYM_H1) - Poly::var(SYM_H2);
        default: throw std::invalid_argument("hbar index must be 1, 2 or 3");
    }
}

Poly sigma2_poly() {
    Poly h1 = hbar_poly(1), h2 = hbar_poly(2), h3 = hbar_poly(3);
    return h1 * h2 + h2 * h3 + h1 * h3;
}

Poly sigma3_poly() { return hbar_poly(1) * hbar_poly(2) * hbar_poly(3); }

}  // namespace yforge
