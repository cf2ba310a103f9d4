#include "yforge/fock.hpp"

#include <algorithm>
#include <sstream>

namespace yforge {

FockSpace::FockSpace(std::vector<BosonSpec> bosons, std::vector<Scalar> charges, BosonNorm mode)
    : bosons_(std::move(bosons)), charges_(std::move(charges)), mode_(mode) {
    if (bosons_.size() != charges_.size())
        throw std::invalid_argument("one charge per boson required");
    for (auto& b : bosons_)
        if (b.color < 1 || b.color > 3) throw std::invalid_argument("boson color must be 1..3");
}

Scalar FockSpace::norm(std::size_t b) const { return -(hbar(bosons_[b].color) / sigma3()); }

Scalar FockSpace::contraction(std::size_t b, int m) const {
    if (m <= 0) throw std::logic_error("contraction takes the positive mode");
    Scalar kappa = mode_ == BosonNorm::standard ? Scalar(m) : Scalar(1);
    return norm(b) * kappa;
}

std::shared_ptr<const FockSpace> FockSpace::shifted(const std::vector<Scalar>& delta) const {
    if (delta.size() != charges_.size()) throw std::invalid_argument("charge shift size mismatch");
    std::vector<Scalar> q = charges_;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += delta[i];
    return std::make_shared<FockSpace>(bosons_, std::move(q), mode_);
}

bool FockSpace::operator==(const FockSpace& o) const {
    if (bosons_.size() != o.bosons_.size() || mode_ != o.mode_) return false;
    for (std::size_t i = 0; i < bosons_.size(); ++i) {
        if (bosons_[i].color != o.bosons_[i].color) return false;
        if (!(charges_[i] == o.charges_[i])) return false;
    }
    return true;
}

SpacePtr make_space(std::vector<BosonSpec> bosons, std::vector<Scalar> charges, BosonNorm mode) {
    return std::make_shared<FockSpace>(std::move(bosons), std::move(charges), mode);
}

int FockState::level() const {
    int l = 0;
    for (auto& p : parts)
        for (int n : p) l += n;
    return l;
}

std::string FockState::str() const {
    std::ostringstream os;
    os << "|";
    for (std::size_t b = 0; b < parts.size(); ++b) {
        if (b) os << ";";
        for (std::size_t i = 0; i < parts[b].size(); ++i) os << (i ? "," : "") << parts[b][i];
    }
    os << ">";
    return os.str();
}

FockVector FockVector::basis(SpacePtr space, FockState s) {
    FockVector v(std::move(space));
    v.terms_[std::move(s)] = Scalar(1);
    return v;
}

FockVector FockVector::vacuum(SpacePtr space) {
    std::size_t n = space->nbosons();
    return basis(std::move(space), FockState::vacuum(n));
}

int FockVector::max_level() const {
    int l = 0;
    for (auto& [s, c] : terms_) l = std::max(l, s.level());
    return l;
}

void FockVector::add_term(const FockState& s, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& o) const {
    if (!(*space_ == *o.space_)) throw ChargeMismatch();
    FockVector r = *this;
    for (auto& [s, c] : o.terms_) r.add_term(s, c);
    return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
    if (!(*space_ == *o.space_)) throw ChargeMismatch();
    FockVector r = *this;
    for (auto& [s, c] : o.terms_) r.add_term(s, -c);
    return r;
}

FockVector FockVector::operator*(const Scalar& c) const {
    FockVector r(space_);
    if (c.is_zero()) return r;
    for (auto& [s, x] : terms_) r.terms_[s] = x * c;
    return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (!(*space_ == *o.space_)) throw ChargeMismatch();
    for (auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

bool FockVector::operator==(const FockVector& o) const {
    if (!(*space_ == *o.space_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [s, c] : terms_) {
        if (!(s == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

FockVector apply_boson_mode(const FockVector& v, std::size_t boson, int m) {
    const auto& space = *v.space();
    FockVector out(v.space());
    for (auto& [s, c] : v.terms()) {
        if (m < 0) {
            FockState t = s;
            auto& p = t.parts[boson];
            p.insert(std::upper_bound(p.begin(), p.end(), -m, std::greater<int>()), -m);
            out.add_term(t, c);
        } else if (m == 0) {
            out.add_term(s, c * space.charge(boson));
        } else {
            const auto& p = s.parts[boson];
            int count = static_cast<int>(std::count(p.begin(), p.end(), m));
            if (count == 0) continue;
            FockState t = s;
            auto& tp = t.parts[boson];
            tp.erase(std::find(tp.begin(), tp.end(), m));
            out.add_term(t, c * space.contraction(boson, m) * Scalar(count));
        }
    }
    return out;
}

Scalar derivative_mode_factor(int h, int n, int m) {
    Scalar f(1);
    for (int i = 0; i < n; ++i) f *= Scalar(h + m + i);
    if (n % 2 == 1) f = -f;
    return f;
}

FockVector Field::apply_mode(int m, const FockVector& v) const {
    if (!cache_modes()) return compute_mode(m, v);
    FockVector out(v.space());
    for (auto& [s, c] : v.terms()) out += mode_on_state(m, s, v.space()) * c;
    return out;
}

FockVector Field::mode_on_state(int m, const FockState& s, const SpacePtr& space) const {
    ModeKey key{space.get(), m, s};
    {
        std::lock_guard lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    FockVector v = compute_mode(m, FockVector::basis(space, s));
    std::lock_guard lk(mu_);
    return cache_.emplace(std::move(key), std::move(v)).first->second;
}

namespace {

class BosonField final : public Field {
public:
    explicit BosonField(std::size_t b) : b_(b) {}
    int weight() const override { return 1; }

protected:
    FockVector compute_mode(int m, const FockVector& v) const override {
        return apply_boson_mode(v, b_, m);
    }
    bool cache_modes() const override { return false; }

private:
    std::size_t b_;
};

class DerivField final : public Field {
public:
    DerivField(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
        if (n_ < 0) throw std::invalid_argument("derivative order must be >= 0");
    }
    int weight() const override { return f_->weight() + n_; }

protected:
    FockVector compute_mode(int m, const FockVector& v) const override {
        // (d^n O)_m = (-1)^n prod_{i=0}^{n-1} (h_O + m + i) O_m
        return f_->apply_mode(m, v) * derivative_mode_factor(f_->weight(), n_, m);
    }
    bool cache_modes() const override { return false; }

private:
    FieldPtr f_;
    int n_;
};

class NProdField final : public Field {
public:
    NProdField(FieldPtr l, FieldPtr r) : l_(std::move(l)), r_(std::move(r)) {}
    int weight() const override { return l_->weight() + r_->weight(); }

protected:
    FockVector compute_mode(int m, const FockVector& v) const override {
        // (O1 O2)_m = sum_{n <= -h1} O1_n O2_{m-n} + sum_{n > -h1} O2_{m-n} O1_n;
        // on a level-bounded vector only finitely many n act
        FockVector out(v.space());
        if (v.is_zero()) return out;
        int L = v.max_level();
        int h1 = l_->weight();
        for (int n = m - L; n <= -h1; ++n) {
            FockVector mid = r_->apply_mode(m - n, v);
            if (mid.is_zero()) continue;
            out += l_->apply_mode(n, mid);
        }
        for (int n = -h1 + 1; n <= L; ++n) {
            FockVector mid = l_->apply_mode(n, v);
            if (mid.is_zero()) continue;
            out += r_->apply_mode(m - n, mid);
        }
        return out;
    }

private:
    FieldPtr l_, r_;
};

class LinField final : public Field {
public:
    explicit LinField(std::vector<std::pair<Scalar, FieldPtr>> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("empty field sum");
        for (auto& [c, f] : terms_)
            if (f->weight() != terms_[0].second->weight())
                throw std::invalid_argument("field sum mixes conformal weights");
    }
    int weight() const override { return terms_[0].second->weight(); }

protected:
    FockVector compute_mode(int m, const FockVector& v) const override {
        FockVector out(v.space());
        for (auto& [c, f] : terms_) out += f->apply_mode(m, v) * c;
        return out;
    }

private:
    std::vector<std::pair<Scalar, FieldPtr>> terms_;
};

}  // namespace

FieldPtr boson_field(std::size_t boson) { return std::make_shared<BosonField>(boson); }
FieldPtr derivative_field(FieldPtr f, int n) {
    return std::make_shared<DerivField>(std::move(f), n);
}
FieldPtr nprod_field(FieldPtr left, FieldPtr right) {
    return std::make_shared<NProdField>(std::move(left), std::move(right));
}
FieldPtr lin_field(std::vector<std::pair<Scalar, FieldPtr>> terms) {
    return std::make_shared<LinField>(std::move(terms));
}

namespace {

// canonical position class: creations, then zero modes, then annihilators
int mode_class(const NormalOrderedExpr::Mode& m) {
    if (m.second < 0) return 0;
    if (m.second == 0) return 1;
    return 2;
}

bool mode_before(const NormalOrderedExpr::Mode& a, const NormalOrderedExpr::Mode& b) {
    int ca = mode_class(a), cb = mode_class(b);
    if (ca != cb) return ca < cb;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

}  // namespace

NormalOrderedExpr NormalOrderedExpr::lone(const std::vector<Mode>& modes, const Scalar& coeff) {
    NormalOrderedExpr e;
    if (!coeff.is_zero()) e.terms_[modes] = coeff;
    return e;
}

bool NormalOrderedExpr::is_normal_ordered() const {
    for (auto& [modes, c] : terms_)
        for (std::size_t i = 0; i + 1 < modes.size(); ++i)
            if (mode_before(modes[i + 1], modes[i])) return false;
    return true;
}

NormalOrderedExpr NormalOrderedExpr::of_product(const FockSpace& space,
                                                const std::vector<Mode>& modes,
                                                const Scalar& coeff) {
    if (coeff.is_zero()) return {};
    for (std::size_t i = 0; i + 1 < modes.size(); ++i) {
        if (!mode_before(modes[i + 1], modes[i])) continue;
        std::vector<Mode> swapped = modes;
        std::swap(swapped[i], swapped[i + 1]);
        NormalOrderedExpr r = of_product(space, swapped, coeff);
        // same boson, opposite nonzero modes: contraction term [b_m, b_-m]
        if (modes[i].first == modes[i + 1].first && modes[i].second != 0 &&
            modes[i].second + modes[i + 1].second == 0) {
            std::vector<Mode> rest;
            for (std::size_t j = 0; j < modes.size(); ++j)
                if (j != i && j != i + 1) rest.push_back(modes[j]);
            Scalar contraction = space.contraction(modes[i].first, std::abs(modes[i].second));
            if (modes[i].second < 0) contraction = -contraction;
            r = r + of_product(space, rest, coeff * contraction);
        }
        return r;
    }
    return lone(modes, coeff);
}

NormalOrderedExpr NormalOrderedExpr::operator+(const NormalOrderedExpr& o) const {
    NormalOrderedExpr r = *this;
    for (auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NormalOrderedExpr NormalOrderedExpr::operator*(const Scalar& c) const {
    NormalOrderedExpr r;
    if (c.is_zero()) return r;
    for (auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

FockVector NormalOrderedExpr::apply(const FockVector& v) const {
    FockVector out(v.space());
    for (auto& [modes, c] : terms_) {
        FockVector cur = v * c;
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
            cur = apply_boson_mode(cur, it->first, it->second);
            if (cur.is_zero()) break;
        }
        out += cur;
    }
    return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

void enumerate_states(const SpacePtr& space, std::size_t b, int remaining, FockState& cur,
                      std::vector<FockState>& out) {
    if (b + 1 == space->nbosons()) {
        for (auto& p : partitions_of(remaining)) {
            cur.parts[b] = p;
            out.push_back(cur);
        }
        return;
    }
    for (int take = remaining; take >= 0; --take)
        for (auto& p : partitions_of(take)) {
            cur.parts[b] = p;
            enumerate_states(space, b + 1, remaining - take, cur, out);
        }
}

}  // namespace

LevelBasis LevelBasis::build(SpacePtr space, int max_level) {
    LevelBasis basis;
    basis.space = space;
    basis.max_level = max_level;
    if (space->nbosons() == 0) {
        basis.states.push_back(FockState{});
        return basis;
    }
    FockState cur = FockState::vacuum(space->nbosons());
    for (int level = 0; level <= max_level; ++level)
        enumerate_states(space, 0, level, cur, basis.states);
    return basis;
}

std::optional<std::size_t> LevelBasis::index_of(const FockState& s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return i;
    return std::nullopt;
}

TruncOp::TruncOp(SpacePtr src, SpacePtr dst, int grading, ColumnFn col)
    : src_(std::move(src)), dst_(std::move(dst)), grading_(grading), col_(std::move(col)),
      cache_(std::make_shared<Cache>()) {}

FockVector TruncOp::column(const FockState& s) const {
    if (!col_) throw std::logic_error("uninitialized operator");
    {
        std::lock_guard lk(cache_->mu);
        auto it = cache_->map.find(s);
        if (it != cache_->map.end()) return it->second;
    }
    FockVector v = col_(s);
    std::lock_guard lk(cache_->mu);
    return cache_->map.emplace(s, std::move(v)).first->second;
}

FockVector TruncOp::apply(const FockVector& v) const {
    if (!(*v.space() == *src_)) throw ChargeMismatch();
    FockVector out(dst_);
    for (auto& [s, c] : v.terms()) out += column(s) * c;
    return out;
}

TruncOp TruncOp::identity(SpacePtr space) {
    SpacePtr sp = space;
    return TruncOp(sp, sp, 0, [sp](const FockState& s) { return FockVector::basis(sp, s); });
}

TruncOp TruncOp::zero(SpacePtr src, SpacePtr dst, int grading) {
    SpacePtr d = dst;
    return TruncOp(src, d, grading, [d](const FockState&) { return FockVector(d); });
}

TruncOp TruncOp::field_mode(SpacePtr space, FieldPtr f, int m) {
    SpacePtr sp = space;
    return TruncOp(sp, sp, -m, [sp, f, m](const FockState& s) {
        return f->apply_mode(m, FockVector::basis(sp, s));
    });
}

TruncOp TruncOp::sum(const TruncOp& a, const TruncOp& b) {
    if (!(*a.src_ == *b.src_) || !(*a.dst_ == *b.dst_))
        throw std::invalid_argument("operator sum: sector mismatch");
    if (a.grading_ != b.grading_)
        throw std::invalid_argument("operator sum: grading mismatch");
    auto ca = std::make_shared<TruncOp>(a), cb = std::make_shared<TruncOp>(b);
    return TruncOp(a.src_, a.dst_, a.grading_,
                   [ca, cb](const FockState& s) { return ca->column(s) + cb->column(s); });
}

TruncOp TruncOp::scaled(const TruncOp& a, const Scalar& c) {
    auto ca = std::make_shared<TruncOp>(a);
    Scalar cc = c;
    return TruncOp(a.src_, a.dst_, a.grading_,
                   [ca, cc](const FockState& s) { return ca->column(s) * cc; });
}

TruncOp TruncOp::composed(const TruncOp& after, const TruncOp& first) {
    if (!(*first.dst_ == *after.src_))
        throw std::invalid_argument("operator composition: sector mismatch");
    auto ca = std::make_shared<TruncOp>(after), cf = std::make_shared<TruncOp>(first);
    return TruncOp(first.src_, after.dst_, after.grading_ + first.grading_,
                   [ca, cf](const FockState& s) { return ca->apply(cf->column(s)); });
}

TruncOp TruncOp::commutator(const TruncOp& a, const TruncOp& b) {
    return sum(composed(a, b), scaled(composed(b, a), Scalar(-1)));
}

bool TruncOp::is_zero_on(const LevelBasis& basis) const {
    for (auto& s : basis.states)
        if (!column(s).is_zero()) return false;
    return true;
}

bool TruncOp::equal_on(const LevelBasis& basis, const TruncOp& o) const {
    for (auto& s : basis.states)
        if (!(column(s) == o.column(s))) return false;
    return true;
}

std::optional<Scalar> TruncOp::scalar_on(const LevelBasis& basis) const {
    std::optional<Scalar> c;
    for (auto& s : basis.states) {
        FockVector v = column(s);
        Scalar diag;
        for (auto& [t, x] : v.terms()) {
            if (t == s)
                diag = x;
            else
                return std::nullopt;
        }
        if (!c)
            c = diag;
        else if (!(*c == diag))
            return std::nullopt;
    }
    return c;
}

MatrixOp MatrixOp::assemble(const TruncOp& op, int max_level) {
    MatrixOp m;
    m.src = LevelBasis::build(op.src(), max_level);
    m.dst = LevelBasis::build(op.dst(), max_level);
    m.grading = op.grading();
    m.safe_level = max_level;
    m.cols.resize(m.src.states.size());
    for (std::size_t j = 0; j < m.src.states.size(); ++j) {
        FockVector v = op.column(m.src.states[j]);
        for (auto& [s, c] : v.terms()) {
            auto i = m.dst.index_of(s);
            if (i) m.cols[j].emplace_back(*i, c);
        }
    }
    return m;
}

MatrixOp commutator_matrix(const MatrixOp& a, const MatrixOp& b, int max_level) {
    if (!(*a.src.space == *b.src.space) || !(*a.dst.space == *b.dst.space) ||
        !(*a.src.space == *a.dst.space))
        throw std::invalid_argument("commutator_matrix: sector mismatch");
    int margin = std::max(std::abs(a.grading), std::abs(b.grading));
    int safe = std::min({a.safe_level, b.safe_level, max_level}) - margin;
    if (safe < 0) throw TruncationInsufficient();

    LevelBasis basis = LevelBasis::build(a.src.space, safe);
    MatrixOp out;
    out.src = basis;
    out.dst = basis;
    out.grading = a.grading + b.grading;
    out.safe_level = safe;
    out.cols.resize(basis.states.size());

    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        std::map<std::size_t, Scalar> acc;
        auto add_path = [&](const MatrixOp& first, const MatrixOp& after, int sign) {
            auto jf = first.src.index_of(basis.states[j]);
            if (!jf) throw TruncationInsufficient();
            for (auto& [mid, c1] : first.cols[*jf]) {
                auto ja = after.src.index_of(first.dst.states[mid]);
                if (!ja) throw TruncationInsufficient();
                for (auto& [fin, c2] : after.cols[*ja]) {
                    auto idx = basis.index_of(after.dst.states[fin]);
                    if (!idx) continue;  // beyond the restricted window
                    acc[*idx] += c1 * c2 * Scalar(sign);
                }
            }
        };
        add_path(b, a, 1);
        add_path(a, b, -1);
        for (auto& [i, c] : acc)
            if (!c.is_zero()) out.cols[j].emplace_back(i, c);
    }
    return out;
}

VertexOp::VertexOp(SpacePtr src, std::vector<Scalar> alpha)
    : src_(std::move(src)), alpha_(std::move(alpha)) {
    if (alpha_.size() != src_->nbosons())
        throw std::invalid_argument("one vertex charge per boson required");
    std::vector<Scalar> delta(alpha_.size());
    for (std::size_t b = 0; b < alpha_.size(); ++b)
        delta[b] = alpha_[b] * hbar(src_->color(b)) / sigma3();
    dst_ = src_->shifted(delta);
}

namespace {

struct VertexPiece {
    int zpow;  // creation weight - annihilation weight on this boson
    Scalar coeff;
    std::vector<int> partition;  // resulting boson partition, descending
};

// expansion of T exp(alpha sum_{n<0} b_n/n z^-n) exp(alpha sum_{n>0} b_n/n z^-n)
// restricted to one boson and one source partition
std::vector<VertexPiece> vertex_boson_pieces(const FockSpace& space, std::size_t b,
                                             const Scalar& alpha, const std::vector<int>& parts,
                                             int max_zpow) {
    std::vector<std::pair<int, int>> counts;  // (mode n, multiplicity)
    for (int n : parts) {
        if (!counts.empty() && counts.back().first == n)
            ++counts.back().second;
        else
            counts.emplace_back(n, 1);
    }
    struct Ann {
        int weight;
        Scalar coeff;
        std::vector<int> kept;
    };
    // annihilation side: terms (alpha/n)^k / k! b_n^k, and b_n^k knocks out k
    // matching parts with a falling-factorial count of ways
    std::vector<Ann> anns{{0, Scalar(1), {}}};
    for (auto& [n, count] : counts) {
        std::vector<Ann> next;
        for (auto& a : anns) {
            Scalar powstep(1);
            Rat fact(1);
            for (int k = 0; k <= count; ++k) {
                if (k > 0) {
                    powstep *= (alpha / Scalar(n)) * space.contraction(b, n);
                    fact *= k;
                }
                Rat ways(1);
                for (int i = 0; i < k; ++i) ways *= (count - i);
                Ann na;
                na.weight = a.weight + n * k;
                na.coeff = a.coeff * powstep * Scalar(ways / fact);
                na.kept = a.kept;
                for (int i = 0; i < count - k; ++i) na.kept.push_back(n);
                next.push_back(std::move(na));
            }
        }
        anns = std::move(next);
    }
    // creation side: any multiset of modes, coefficient prod (-alpha/m)^j / j!
    std::vector<VertexPiece> out;
    for (auto& a : anns) {
        int max_create = max_zpow + a.weight;
        for (int w = 0; w <= max_create; ++w) {
            for (auto& mu : partitions_of(w)) {
                Scalar c = a.coeff;
                std::size_t i = 0;
                while (i < mu.size()) {
                    std::size_t j = i;
                    while (j < mu.size() && mu[j] == mu[i]) ++j;
                    int mult = static_cast<int>(j - i);
                    Rat fact(1);
                    for (int k2 = 2; k2 <= mult; ++k2) fact *= k2;
                    c *= (-(alpha / Scalar(mu[i]))).pow(static_cast<std::uint32_t>(mult)) *
                         Scalar(Rat(1) / fact);
                    i = j;
                }
                if (c.is_zero()) continue;
                VertexPiece piece;
                piece.zpow = w - a.weight;
                piece.coeff = c;
                piece.partition = a.kept;
                for (int m : mu) piece.partition.push_back(m);
                std::sort(piece.partition.begin(), piece.partition.end(), std::greater<int>());
                out.push_back(std::move(piece));
            }
        }
    }
    return out;
}

}  // namespace

TruncOp VertexOp::block(int p) const {
    SpacePtr src = src_, dst = dst_;
    std::vector<Scalar> alpha = alpha_;
    return TruncOp(src, dst, p, [src, dst, alpha, p](const FockState& s) {
        FockVector out(dst);
        int L = s.level();
        struct Partial {
            int zpow;
            Scalar coeff;
            FockState state;
        };
        std::vector<Partial> acc{{0, Scalar(1), FockState::vacuum(s.parts.size())}};
        for (std::size_t b = 0; b < s.parts.size(); ++b) {
            auto pieces = vertex_boson_pieces(*src, b, alpha[b], s.parts[b], p + L);
            std::vector<Partial> next;
            for (auto& partial : acc)
                for (auto& piece : pieces) {
                    if (partial.zpow + piece.zpow > p + L) continue;
                    Partial np = partial;
                    np.zpow += piece.zpow;
                    np.coeff = np.coeff * piece.coeff;
                    if (np.coeff.is_zero()) continue;
                    np.state.parts[b] = piece.partition;
                    next.push_back(std::move(np));
                }
            acc = std::move(next);
        }
        for (auto& partial : acc)
            if (partial.zpow == p) out.add_term(partial.state, partial.coeff);
        return out;
    });
}

}  // namespace yforge
