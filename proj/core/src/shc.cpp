#include "yforge/shc.hpp"

#include "yforge/walg.hpp"

#include <algorithm>
#include <sstream>

namespace yforge {

bool SHGen::operator<(const SHGen& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (l != o.l) return l < o.l;
    return k < o.k;
}

bool SHGen::operator==(const SHGen& o) const { return kind == o.kind && l == o.l && k == o.k; }

std::string SHGen::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::F1: os << "f(1," << l << ")"; break;
        case Kind::Fm1: os << "f(-1," << l << ")"; break;
        case Kind::F0: os << "f(0," << l << ")"; break;
        case Kind::C: os << "c" << l << "^(" << k << ")"; break;
        case Kind::B: os << "B(" << l << ")"; break;
    }
    return os.str();
}

std::string word_str(const SHWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i].str();
    return os.str();
}

SHElement SHElement::one() {
    SHElement e;
    e.terms_[{}] = Scalar(1);
    return e;
}

SHElement SHElement::gen(const SHGen& g) {
    SHElement e;
    e.terms_[{g}] = Scalar(1);
    return e;
}

SHElement SHElement::operator+(const SHElement& o) const {
    SHElement r = *this;
    for (auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

SHElement SHElement::operator-(const SHElement& o) const { return *this + o * Scalar(-1); }

SHElement SHElement::operator*(const SHElement& o) const {
    SHElement r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            SHWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            Scalar c = c1 * c2;
            auto it = r.terms_.find(w);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(w), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

SHElement SHElement::operator*(const Scalar& c) const {
    SHElement r;
    if (c.is_zero()) return r;
    for (auto& [w, x] : terms_) r.terms_[w] = x * c;
    return r;
}

std::string SHElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") " << word_str(w);
    }
    return os.str();
}

SHElement sh_word_commutator(const SHElement& a, const SHElement& b) { return a * b - b * a; }

SHElement B_element(int l) {
    using K = SHGen::Kind;
    if (l == 0) {
        // B_0 = G_1 = [f_{1,1}, f_{-1,0}]
        return sh_word_commutator(SHElement::gen({K::F1, 1, 0}), SHElement::gen({K::Fm1, 0, 0}));
    }
    Rat fact(1);
    for (int i = 2; i <= std::abs(l) - 1; ++i) fact *= i;  // (|l|-1)!
    SHElement e;
    if (l < 0) {
        e = SHElement::gen({K::F1, 0, 0});
        for (int i = 1; i < -l; ++i) e = sh_word_commutator(SHElement::gen({K::F1, 1, 0}), e);
    } else {
        e = SHElement::gen({K::Fm1, 0, 0});
        for (int i = 1; i < l; ++i) e = sh_word_commutator(e, SHElement::gen({K::Fm1, 1, 0}));
    }
    return e * Scalar(Rat(1) / fact);
}

void SHTensor::add(const std::vector<SHWord>& legs, const Scalar& c) {
    if (static_cast<int>(legs.size()) != rank_) throw std::invalid_argument("tensor rank mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(legs);
    if (it == terms_.end()) {
        terms_.emplace(legs, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SHTensor SHTensor::operator+(const SHTensor& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("tensor rank mismatch");
    SHTensor r = *this;
    for (auto& [legs, c] : o.terms_) r.add(legs, c);
    return r;
}

SHTensor SHTensor::operator*(const Scalar& c) const {
    SHTensor r(rank_);
    if (c.is_zero()) return r;
    for (auto& [legs, x] : terms_) r.terms_[legs] = x * c;
    return r;
}

SHTensor SHTensor::operator*(const SHTensor& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("tensor rank mismatch");
    SHTensor r(rank_);
    for (auto& [l1, c1] : terms_)
        for (auto& [l2, c2] : o.terms_) {
            std::vector<SHWord> legs(static_cast<std::size_t>(rank_));
            for (int i = 0; i < rank_; ++i) {
                legs[static_cast<std::size_t>(i)] = l1[static_cast<std::size_t>(i)];
                legs[static_cast<std::size_t>(i)].insert(legs[static_cast<std::size_t>(i)].end(),
                                                         l2[static_cast<std::size_t>(i)].begin(),
                                                         l2[static_cast<std::size_t>(i)].end());
            }
            r.add(legs, c1 * c2);
        }
    return r;
}

std::string SHTensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [legs, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") ";
        for (std::size_t i = 0; i < legs.size(); ++i)
            os << (i ? " (x) " : "") << word_str(legs[i]);
    }
    return os.str();
}

SHTensor coproduct_c(const SHGen& g, int tail_lmax) {
    using K = SHGen::Kind;
    SHTensor t(2);
    auto primitive = [&]() {
        t.add({{g}, {}}, Scalar(1));
        t.add({{}, {g}}, Scalar(1));
    };
    switch (g.kind) {
        case K::C:
            primitive();
            return t;
        case K::B:
            primitive();
            if (g.l == 0) {
                for (int k = 1; k <= 3; ++k) {
                    SHGen c0{K::C, 0, k};
                    t.add({{c0}, {c0}}, hbar(k));
                }
            }
            return t;
        case K::F0:
            if (g.l != 1) throw UnsupportedGenerator();
            primitive();
            for (int l = 1; l <= tail_lmax; ++l)
                t.add({{SHGen{K::B, l, 0}}, {SHGen{K::B, -l, 0}}}, sigma3() * Scalar(l));
            return t;
        default:
            throw UnsupportedGenerator();
    }
}

SHTensor coproduct_on_leg(const SHTensor& t, int leg, int tail_lmax) {
    SHTensor out(t.rank() + 1);
    for (auto& [legs, c] : t.terms()) {
        // expand the chosen leg's word multiplicatively
        SHTensor expanded(2);
        expanded.add({{}, {}}, Scalar(1));
        for (auto& g : legs[static_cast<std::size_t>(leg)])
            expanded = expanded * coproduct_c(g, tail_lmax);
        for (auto& [pair_legs, pc] : expanded.terms()) {
            std::vector<SHWord> new_legs;
            for (int i = 0; i < t.rank(); ++i) {
                if (i == leg) {
                    new_legs.push_back(pair_legs[0]);
                    new_legs.push_back(pair_legs[1]);
                } else {
                    new_legs.push_back(legs[static_cast<std::size_t>(i)]);
                }
            }
            out.add(new_legs, c * pc);
        }
    }
    return out;
}

std::vector<TSeries> phi_coeffs(int color, int l_max, int t_order) {
    // log((1 + t(a - h))/(1 + t a)) as a t-series with polynomial-in-a
    // coefficients; phi_l = (-1)^{l+1} [a^l]
    SymId a = sym("a");
    Scalar h = hbar(color);
    auto log1p = [&](const Scalar& x) {
        // log(1 + t x): coefficient of t^j is (-1)^{j+1} x^j / j
        TSeries s = TSeries::zero(t_order);
        Scalar xp(1);
        for (int j = 1; j <= t_order; ++j) {
            xp *= x;
            s.at(j) = xp * Scalar(Rat(j % 2 == 1 ? 1 : -1, j));
        }
        return s;
    };
    TSeries f = log1p(Scalar::var(a) - h) - log1p(Scalar::var(a));
    std::vector<TSeries> out;
    for (int l = 0; l <= l_max; ++l) {
        TSeries phi = TSeries::zero(t_order);
        for (int j = 0; j <= t_order; ++j) {
            const Scalar& cj = f[j];
            if (cj.is_zero()) continue;
            if (!cj.is_polynomial()) throw std::logic_error("phi extraction hit a denominator");
            Poly co = cj.num().coeff_of(a, static_cast<std::uint32_t>(l));
            if (!co.is_zero()) phi.at(j) = Scalar(co) * Scalar(l % 2 == 0 ? -1 : 1);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

std::vector<TSeries> Phi_coeffs(int l_max, int t_order) {
    std::vector<TSeries> out;
    for (int l = 0; l <= l_max; ++l) out.push_back(TSeries::zero(t_order));
    for (int k = 1; k <= 3; ++k) {
        auto plus = phi_coeffs(k, l_max, t_order);
        // phi with -h_k: reuse the defining ratio with h -> -h by symmetry
        // log((1+t(a+h))/(1+ta)) = -[log((1+t(a-h))/(1+ta)) with a -> a+h]...
        // compute directly instead
        SymId a = sym("a");
        Scalar h = hbar(k);
        auto log1p = [&](const Scalar& x) {
            TSeries s = TSeries::zero(t_order);
            Scalar xp(1);
            for (int j = 1; j <= t_order; ++j) {
                xp *= x;
                s.at(j) = xp * Scalar(Rat(j % 2 == 1 ? 1 : -1, j));
            }
            return s;
        };
        TSeries f = log1p(Scalar::var(a) + h) - log1p(Scalar::var(a));
        for (int l = 0; l <= l_max; ++l) {
            TSeries minus = TSeries::zero(t_order);
            for (int j = 0; j <= t_order; ++j) {
                const Scalar& cj = f[j];
                if (cj.is_zero()) continue;
                Poly co = cj.num().coeff_of(a, static_cast<std::uint32_t>(l));
                if (!co.is_zero()) minus.at(j) = Scalar(co) * Scalar(l % 2 == 0 ? -1 : 1);
            }
            out[static_cast<std::size_t>(l)] =
                out[static_cast<std::size_t>(l)] + plus[static_cast<std::size_t>(l)] - minus;
        }
    }
    return out;
}

CentralValues specialize_r(int r1, int r2, int r3, int imax,
                           const std::array<std::vector<Scalar>, 3>& mu) {
    int rs[3] = {r1, r2, r3};
    CentralValues cv;
    for (int k = 1; k <= 3; ++k) {
        auto& mus = mu[static_cast<std::size_t>(k - 1)];
        if (static_cast<int>(mus.size()) != rs[k - 1])
            throw std::invalid_argument("one mu per framing direction required");
        auto& col = cv.c[static_cast<std::size_t>(k - 1)];
        col.assign(static_cast<std::size_t>(imax) + 1, Scalar(0));
        col[0] = Scalar(rs[k - 1]);
        for (int i = 1; i <= imax; ++i) {
            Scalar p(0);
            for (auto& m : mus) p += m.pow(static_cast<std::uint32_t>(i));
            col[static_cast<std::size_t>(i)] = p;
        }
    }
    return cv;
}

Scalar mu_from_charge(int color, const Scalar& charge) {
    if (color == 2) return hbar(1) * hbar(3) * charge + hbar(2);
    if (color == 3) return hbar(1) * hbar(2) * charge;
    throw std::invalid_argument("charge dictionary covers colors 2 and 3");
}

Scalar charge_from_mu(int color, const Scalar& mu) {
    if (color == 2) return (mu - hbar(2)) / (hbar(1) * hbar(3));
    if (color == 3) return mu / (hbar(1) * hbar(2));
    // no convention pinned for color 1; place the highest weight at zero
    return Scalar(0);
}

TruncOp f01_single(SpacePtr space, std::size_t boson, const Scalar& mu) {
    SpacePtr sp = space;
    int color = space->color(boson);
    Scalar eta = sigma3() / hbar(color);
    Scalar half_eta2 = eta * eta * Scalar(Rat(1, 2));
    Scalar half_s3 = sigma3() * Scalar(Rat(1, 2));
    Scalar mu_eta = mu * eta;
    return TruncOp(sp, sp, 0, [sp, boson, half_eta2, half_s3, mu_eta](const FockState& s) {
        FockVector out(sp);
        FockVector unit = FockVector::basis(sp, s);
        int L = s.level();
        // (eta^2/2) sum_{k,l>=1} b_{-l-k} b_l b_k
        for (int k = 1; k <= L; ++k) {
            FockVector vk = apply_boson_mode(unit, boson, k);
            if (vk.is_zero()) continue;
            for (int l = 1; l <= L; ++l) {
                FockVector vl = apply_boson_mode(vk, boson, l);
                if (vl.is_zero()) continue;
                out += apply_boson_mode(vl, boson, -(l + k)) * half_eta2;
            }
        }
        // (eta^2/2) sum_{k,l>=1} b_{-l} b_{-k} b_{l+k}
        for (int l = 1; l <= L; ++l)
            for (int k = 1; l + k <= L; ++k) {
                FockVector v = apply_boson_mode(unit, boson, l + k);
                if (v.is_zero()) continue;
                v = apply_boson_mode(v, boson, -k);
                out += apply_boson_mode(v, boson, -l) * half_eta2;
            }
        // (sigma3/2) sum (l-1) b_{-l} b_l  +  mu eta sum b_{-l} b_l
        for (int l = 1; l <= L; ++l) {
            FockVector v = apply_boson_mode(unit, boson, l);
            if (v.is_zero()) continue;
            v = apply_boson_mode(v, boson, -l);
            out += v * (half_s3 * Scalar(l - 1) + mu_eta);
        }
        return out;
    });
}

namespace {

TruncOp boson_mode_sum(SpacePtr space, int l) {
    SpacePtr sp = space;
    return TruncOp(sp, sp, -l, [sp, l](const FockState& s) {
        FockVector out(sp);
        FockVector unit = FockVector::basis(sp, s);
        for (std::size_t b = 0; b < sp->nbosons(); ++b) out += apply_boson_mode(unit, b, l);
        return out;
    });
}

TruncOp make_f01(SpacePtr space, const std::vector<Scalar>& mus) {
    SpacePtr sp = space;
    std::vector<TruncOp> singles;
    for (std::size_t b = 0; b < space->nbosons(); ++b)
        singles.push_back(f01_single(space, b, mus[b]));
    auto singles_ptr = std::make_shared<std::vector<TruncOp>>(std::move(singles));
    Scalar s3 = sigma3();
    return TruncOp(sp, sp, 0, [sp, singles_ptr, s3](const FockState& s) {
        FockVector out(sp);
        for (auto& op : *singles_ptr) out += op.column(s);
        // coproduct tail: sigma3 sum_{i<j} sum_{l>=1} l b^(i)_l b^(j)_{-l}
        FockVector unit = FockVector::basis(sp, s);
        int L = s.level();
        for (std::size_t i = 0; i < sp->nbosons(); ++i)
            for (std::size_t j = i + 1; j < sp->nbosons(); ++j)
                for (int l = 1; l <= L; ++l) {
                    FockVector v = apply_boson_mode(unit, i, l);
                    if (v.is_zero()) continue;
                    out += apply_boson_mode(v, j, -l) * (s3 * Scalar(l));
                }
        return out;
    });
}

void build_towers(ShcRep& rep) {
    rep.f1.clear();
    rep.fm1.clear();
    rep.f1.push_back(boson_mode_sum(rep.space, -1));
    rep.fm1.push_back(boson_mode_sum(rep.space, 1));
    for (int l = 1; l <= rep.lmax; ++l) {
        rep.f1.push_back(TruncOp::commutator(rep.f01, rep.f1.back()));
        rep.fm1.push_back(TruncOp::commutator(rep.fm1.back(), rep.f01));
    }
}

}  // namespace

TruncOp ShcRep::b_mode(int l) const { return boson_mode_sum(space, l); }

ShcRep fock_rep(int color, const Scalar& mu, int lmax) {
    ShcRep rep;
    rep.colors = {color};
    rep.mu = {mu};
    rep.lmax = lmax;
    rep.space = make_space({{color}}, {charge_from_mu(color, mu)});
    rep.f01 = make_f01(rep.space, rep.mu);
    int rs[3] = {0, 0, 0};
    rs[color - 1] = 1;
    std::array<std::vector<Scalar>, 3> mus;
    mus[static_cast<std::size_t>(color - 1)].push_back(mu);
    rep.cv = specialize_r(rs[0], rs[1], rs[2], lmax + 1, mus);
    build_towers(rep);
    return rep;
}

ShcRep tensor_rep(const std::vector<int>& colors, const std::vector<Scalar>& mus, int lmax) {
    if (colors.size() != mus.size() || colors.empty())
        throw std::invalid_argument("one mu per boson required");
    ShcRep rep;
    rep.colors = colors;
    rep.mu = mus;
    rep.lmax = lmax;
    std::vector<BosonSpec> bosons;
    std::vector<Scalar> charges;
    int rs[3] = {0, 0, 0};
    std::array<std::vector<Scalar>, 3> mu_by_color;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        bosons.push_back({colors[i]});
        charges.push_back(charge_from_mu(colors[i], mus[i]));
        rs[colors[i] - 1] += 1;
        mu_by_color[static_cast<std::size_t>(colors[i] - 1)].push_back(mus[i]);
    }
    rep.space = make_space(std::move(bosons), std::move(charges));
    rep.f01 = make_f01(rep.space, rep.mu);
    rep.cv = specialize_r(rs[0], rs[1], rs[2], lmax + 1, mu_by_color);
    build_towers(rep);
    return rep;
}

TruncOp g_comm(const ShcRep& rep, int l, int k) {
    return TruncOp::commutator(rep.f1[static_cast<std::size_t>(l)],
                               rep.fm1[static_cast<std::size_t>(k)]);
}

std::vector<TruncOp> g_values(const ShcRep& rep, int l_max) {
    std::vector<TruncOp> out;
    for (int l = 0; l <= l_max; ++l) out.push_back(g_comm(rep, l, 0));
    return out;
}

SMat SMat::zero(std::size_t n) {
    SMat m;
    m.n = n;
    m.a.assign(n * n, Scalar());
    return m;
}

SMat SMat::identity(std::size_t n) {
    SMat m = zero(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

SMat SMat::operator+(const SMat& o) const {
    SMat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

SMat SMat::operator-(const SMat& o) const {
    SMat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

SMat SMat::operator*(const SMat& o) const {
    SMat r = zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

SMat SMat::operator*(const Scalar& c) const {
    SMat r = *this;
    for (auto& x : r.a) x *= c;
    return r;
}

bool SMat::is_zero() const {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

SMat mat_of(const TruncOp& op, const LevelBasis& basis) {
    SMat m = SMat::zero(basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        FockVector v = op.column(basis.states[j]);
        for (auto& [s, c] : v.terms()) {
            auto i = basis.index_of(s);
            if (!i) throw std::logic_error("mat_of: operator leaves the basis window");
            m.at(*i, j) = c;
        }
    }
    return m;
}

SMat mat_of_truncated(const TruncOp& op, const LevelBasis& basis) {
    SMat m = SMat::zero(basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        FockVector v = op.column(basis.states[j]);
        for (auto& [s, c] : v.terms()) {
            auto i = basis.index_of(s);
            if (i) m.at(*i, j) = c;
        }
    }
    return m;
}

std::vector<SMat> mat_series_log(const std::vector<SMat>& s) {
    int order = static_cast<int>(s.size()) - 1;
    std::size_t n = s[0].n;
    std::vector<SMat> x;  // s - 1
    for (auto& m : s) x.push_back(m);
    x[0] = SMat::zero(n);  // constant term must be the identity
    std::vector<SMat> acc(static_cast<std::size_t>(order) + 1, SMat::zero(n));
    std::vector<SMat> p(static_cast<std::size_t>(order) + 1, SMat::zero(n));
    p[0] = SMat::identity(n);
    for (int k = 1; k <= order; ++k) {
        // p *= x (truncated convolution)
        std::vector<SMat> np(static_cast<std::size_t>(order) + 1, SMat::zero(n));
        for (int i = 0; i <= order; ++i) {
            if (p[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 1; i + j <= order; ++j)
                np[static_cast<std::size_t>(i + j)] =
                    np[static_cast<std::size_t>(i + j)] +
                    p[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
        }
        p = std::move(np);
        Scalar coef(Rat(k % 2 == 1 ? 1 : -1, k));
        for (int i = 0; i <= order; ++i)
            acc[static_cast<std::size_t>(i)] =
                acc[static_cast<std::size_t>(i)] + p[static_cast<std::size_t>(i)] * coef;
    }
    return acc;
}

GenIdentityReport check_generating_identity(const ShcRep& rep, int N) {
    GenIdentityReport rep_out;
    int order = rep.lmax + 1;
    if (order < 5) {
        rep_out.detail = "need lmax >= 4";
        return rep_out;
    }
    LevelBasis basis = LevelBasis::build(rep.space, N);
    std::size_t n = basis.states.size();

    // S(t) = 1 - sigma3 sum_l G_l t^{l+1}, G_l = [f_{1,l}, f_{-1,0}]
    std::vector<SMat> S(static_cast<std::size_t>(order) + 1, SMat::zero(n));
    S[0] = SMat::identity(n);
    for (int l = 0; l <= rep.lmax; ++l)
        S[static_cast<std::size_t>(l + 1)] = mat_of(g_comm(rep, l, 0), basis) * (-sigma3());

    // scalar factor from the three central exponentials
    TSeries cfac = TSeries::one(order);
    for (int k = 1; k <= 3; ++k) {
        auto phis = phi_coeffs(k, rep.lmax + 1, order);
        TSeries expo = TSeries::zero(order);
        for (int i = 0; i <= rep.lmax + 1; ++i) {
            Scalar ci = rep.cv.at(k, i);
            if (ci.is_zero()) continue;
            Scalar sign(i % 2 == 0 ? -1 : 1);
            expo = expo + phis[static_cast<std::size_t>(i)] * (ci * sign);
        }
        cfac = cfac * expo.exp();
    }
    TSeries logc = cfac.log();

    std::vector<SMat> M = mat_series_log(S);
    for (int j = 1; j <= order; ++j)
        M[static_cast<std::size_t>(j)] =
            M[static_cast<std::size_t>(j)] - SMat::identity(n) * logc[j];

    auto Phis = Phi_coeffs(3, order);

    // in the Fock model f_{0,0} is the degree operator: the lambda_t product
    // contributes 2 sigma3 n at t^3, exactly Phi_0's leading term
    SMat level = SMat::zero(n);
    for (std::size_t i = 0; i < n; ++i) level.at(i, i) = Scalar(basis.states[i].level());

    rep_out.low_orders_zero =
        M[1].is_zero() && M[2].is_zero() && (M[3] - level * Phis[0][3]).is_zero();

    SMat f01m = mat_of(rep.f01, basis);
    rep_out.f01_matches = (M[4] - f01m * Phis[1][4] - level * Phis[0][4]).is_zero();

    // solve f_{0,2} from t^5 and test the ladder relation on safe columns
    Scalar lead = Phis[2][5];
    if (lead.is_zero()) {
        rep_out.detail = "Phi_2 leading coefficient vanished";
        return rep_out;
    }
    SMat f02 = (M[5] - f01m * Phis[1][5] - level * Phis[0][5]) * lead.inverse();
    bool ok = true;
    for (int k = 0; k + 2 <= rep.lmax && ok; ++k) {
        SMat F1k = mat_of_truncated(rep.f1[static_cast<std::size_t>(k)], basis);
        SMat F1k2 = mat_of_truncated(rep.f1[static_cast<std::size_t>(k + 2)], basis);
        SMat diff = f02 * F1k - F1k * f02 - F1k2;
        // f_{1,*} raises the level by one: compare columns with level <= N-1
        for (std::size_t j = 0; j < n && ok; ++j) {
            if (basis.states[j].level() > N - 1) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!diff.at(i, j).is_zero()) {
                    ok = false;
                    break;
                }
        }
    }
    rep_out.f02_relation_ok = ok;
    return rep_out;
}

std::vector<RelationCheck> check_relations_on_rep(const ShcRep& rep, int lmax, int N) {
    std::vector<RelationCheck> out;
    LevelBasis basis = LevelBasis::build(rep.space, N);
    auto push = [&](const std::string& name, bool pass) { out.push_back({name, pass}); };

    for (int k = 0; k + 1 <= lmax; ++k) {
        std::ostringstream os;
        os << "[f01, f(1," << k << ")] = f(1," << k + 1 << ")";
        push(os.str(), TruncOp::commutator(rep.f01, rep.f1[static_cast<std::size_t>(k)])
                           .equal_on(basis, rep.f1[static_cast<std::size_t>(k + 1)]));
        std::ostringstream os2;
        os2 << "[f01, f(-1," << k << ")] = -f(-1," << k + 1 << ")";
        push(os2.str(),
             TruncOp::commutator(rep.f01, rep.fm1[static_cast<std::size_t>(k)])
                 .equal_on(basis, TruncOp::scaled(rep.fm1[static_cast<std::size_t>(k + 1)],
                                                  Scalar(-1))));
    }

    // G depends on l + k only  (Y3 under f(1,l) -> e_l, G -> psi)
    for (int total = 0; total <= lmax; ++total) {
        TruncOp base = g_comm(rep, total, 0);
        bool ok = true;
        for (int l = 0; l <= total; ++l) {
            int k = total - l;
            if (!g_comm(rep, l, k).equal_on(basis, base)) ok = false;
        }
        std::ostringstream os;
        os << "[f(1,l), f(-1,k)] = G_" << total << " for every split";
        push(os.str(), ok);
    }

    // (Y0): the G_l commute
    {
        bool ok = true;
        for (int i = 0; i <= lmax && ok; ++i)
            for (int j = i + 1; j <= lmax && ok; ++j)
                if (!TruncOp::commutator(g_comm(rep, i, 0), g_comm(rep, j, 0)).is_zero_on(basis))
                    ok = false;
        push("(Y0) [G_i, G_j] = 0", ok);
    }

    // psi_l = (-1)^{l+1} G_l: the G series lives in t = -1/z, so the Cartan
    // generators of the Yangian presentation pick up the alternating sign
    auto psi = [&](int l) {
        return TruncOp::scaled(g_comm(rep, l, 0), Scalar(l % 2 == 0 ? -1 : 1));
    };
    // (Y4'): [psi_0, e_j] = [psi_1, e_j] = 0, [psi_2, e_j] = 2 e_j
    // (Y5'): same with f_j and -2
    {
        bool ok = true;
        int jmax = std::max(0, lmax - 2);
        for (int j = 0; j <= jmax && ok; ++j) {
            auto& e = rep.f1[static_cast<std::size_t>(j)];
            auto& f = rep.fm1[static_cast<std::size_t>(j)];
            if (!TruncOp::commutator(psi(0), e).is_zero_on(basis)) ok = false;
            if (!TruncOp::commutator(psi(1), e).is_zero_on(basis)) ok = false;
            if (!TruncOp::commutator(psi(2), e).equal_on(basis, TruncOp::scaled(e, Scalar(2))))
                ok = false;
            if (!TruncOp::commutator(psi(0), f).is_zero_on(basis)) ok = false;
            if (!TruncOp::commutator(psi(1), f).is_zero_on(basis)) ok = false;
            if (!TruncOp::commutator(psi(2), f).equal_on(basis, TruncOp::scaled(f, Scalar(-2))))
                ok = false;
        }
        push("(Y4')(Y5') low Cartan relations", ok);
    }
    return out;
}

std::vector<RelationCheck> check_heisenberg(const ShcRep& rep, int lmax, int N) {
    std::vector<RelationCheck> out;
    LevelBasis basis = LevelBasis::build(rep.space, N);
    bool scalar_ok = true, match_ok = true;
    for (int l = 1; l <= lmax; ++l)
        for (int m = -lmax; m <= lmax; ++m) {
            if (m == 0) continue;
            TruncOp c = TruncOp::commutator(rep.b_mode(l), rep.b_mode(m));
            if (l + m == 0) {
                if (!c.scalar_on(basis)) scalar_ok = false;
            } else {
                if (!c.is_zero_on(basis)) scalar_ok = false;
            }
        }
    out.push_back({"[B_l, B_m] scalar, zero unless l+m=0", scalar_ok});
    for (int l = 1; l <= std::min(lmax, 3); ++l) {
        if (!evaluate_word_element(rep, B_element(-l)).equal_on(basis, rep.b_mode(-l)))
            match_ok = false;
        if (!evaluate_word_element(rep, B_element(l)).equal_on(basis, rep.b_mode(l)))
            match_ok = false;
    }
    out.push_back({"B_element words act as the boson modes", match_ok});
    return out;
}

TruncOp evaluate_word_element(const ShcRep& rep, const SHElement& e) {
    using K = SHGen::Kind;
    TruncOp acc = TruncOp::zero(rep.space, rep.space, 0);
    bool first = true;
    for (auto& [w, c] : e.terms()) {
        TruncOp term = TruncOp::identity(rep.space);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            TruncOp g = TruncOp::identity(rep.space);
            switch (it->kind) {
                case K::F1: g = rep.f1.at(static_cast<std::size_t>(it->l)); break;
                case K::Fm1: g = rep.fm1.at(static_cast<std::size_t>(it->l)); break;
                case K::B: g = rep.b_mode(it->l); break;
                case K::C: g = TruncOp::scaled(TruncOp::identity(rep.space), rep.cv.at(it->k, it->l)); break;
                default: throw UnsupportedGenerator();
            }
            term = TruncOp::composed(g, term);
        }
        term = TruncOp::scaled(term, c);
        if (first) {
            acc = term;
            first = false;
        } else {
            // grading may differ between words; sum via explicit columns
            TruncOp lhs = acc, rhs = term;
            SpacePtr sp = rep.space;
            acc = TruncOp(sp, sp, lhs.grading(), [lhs, rhs](const FockState& s) {
                return lhs.column(s) + rhs.column(s);
            });
        }
    }
    return acc;
}

WRewriteReport check_w_rewriting(int N) {
    // two-boson module in symbolic charges, colors (2, 3)
    SymId q2s = sym("qc2"), q3s = sym("qc3");
    Scalar q2 = Scalar::var(q2s), q3 = Scalar::var(q3s);
    Scalar mu2 = mu_from_charge(2, q2), mu3 = mu_from_charge(3, q3);
    SpacePtr sp = make_space({{2}, {3}}, {q2, q3});
    Scalar s3 = sigma3();
    TruncOp f01(sp, sp, 0, [sp, mu2, mu3, s3](const FockState& s) {
        FockVector out = f01_single(sp, 0, mu2).column(s);
        out += f01_single(sp, 1, mu3).column(s);
        FockVector unit = FockVector::basis(sp, s);
        for (int l = 1; l <= s.level(); ++l) {
            FockVector v = apply_boson_mode(unit, 0, l);
            if (v.is_zero()) continue;
            out += apply_boson_mode(v, 1, -l) * (s3 * Scalar(l));
        }
        return out;
    });

    WFieldSet ws = build_w011(sp);
    FieldPtr W1 = ws.W1, W2 = ws.W2, W3 = ws.W3;
    // step 1: (sigma3/4) sum_l |l| W1_{-l} W1_l
    TruncOp t1(sp, sp, 0, [sp, W1](const FockState& s) {
        FockVector out(sp);
        FockVector unit = FockVector::basis(sp, s);
        for (int l = 1; l <= s.level(); ++l) {
            FockVector v = W1->apply_mode(l, unit);
            if (v.is_zero()) continue;
            out += W1->apply_mode(-l, v) * Scalar(2 * l);
        }
        return out;
    });
    // step 2: the weight-3 combination; the two (h2 - h3)-graded
    // coefficients are the engine-verified values
    Scalar h2 = hbar(2), h3 = hbar(3);
    FieldPtr combo = lin_field({
        {(h3 - h2) * Scalar(Rat(1, 24)), W3},
        {h2 * h3, nprod_field(W1, W2)},
        {h2 * h2 * h3 * h3 * Scalar(Rat(1, 6)), nprod_field(W1, nprod_field(W1, W1))},
        {h2 * h3 * (h2 - h3) * Scalar(Rat(1, 4)), nprod_field(W1, derivative_field(W1, 1))},
        {(h2 - h3) * Scalar(Rat(1, 4)), derivative_field(W2, 1)},
    });
    TruncOp c2 = TruncOp::field_mode(sp, combo, 0);

    TruncOp residual = TruncOp::sum(
        TruncOp::sum(f01, TruncOp::scaled(t1, -(s3 * Scalar(Rat(1, 4))))),
        TruncOp::scaled(c2, Scalar(-1)));

    WRewriteReport rep;
    LevelBasis basis = LevelBasis::build(sp, N);
    auto c = residual.scalar_on(basis);
    if (c) {
        rep.is_scalar = true;
        rep.sector_constant = *c;
    }
    return rep;
}

bool check_coassociativity(int tail_lmax) {
    using K = SHGen::Kind;
    std::vector<SHGen> gens{{K::C, 0, 1}, {K::C, 2, 3}, {K::B, 1, 0}, {K::B, -2, 0},
                            {K::B, 0, 0}, {K::F0, 1, 0}};
    for (auto& g : gens) {
        SHTensor d = coproduct_c(g, tail_lmax);
        SHTensor left = coproduct_on_leg(d, 0, tail_lmax);
        SHTensor right = coproduct_on_leg(d, 1, tail_lmax);
        if (!(left == right)) return false;
    }
    return true;
}

}  // namespace yforge
