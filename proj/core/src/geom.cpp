#include "yforge/geom.hpp"

#include <json.hpp>

#include <sstream>

namespace yforge {

namespace {

SymId zsym() { return sym("z"); }

TSeries factor_series(const Scalar& num, const Scalar& den, int order) {
    return series_expand(num / den, zsym(), order);
}

Scalar zvar() { return Scalar::var(zsym()); }

}  // namespace

TSeries psi_eigen_series(const ChernData& cd, int order) {
    TSeries s = TSeries::one(order);
    Scalar z = zvar();
    for (int k = 1; k <= 3; ++k)
        for (auto& mu : cd.mu[static_cast<std::size_t>(k - 1)])
            s = s * factor_series(z - mu + hbar(k), z - mu, order);
    for (auto& lam : cd.lam)
        for (int k = 1; k <= 3; ++k)
            s = s * factor_series(z - lam - hbar(k), z - lam + hbar(k), order);
    return s;
}

TSeries cartan_conj_factor(const std::vector<Scalar>& roots, int order) {
    TSeries s = TSeries::one(order);
    Scalar z = zvar();
    for (auto& nu : roots)
        for (int k = 1; k <= 3; ++k)
            s = s * factor_series(z - nu - hbar(k), z - nu + hbar(k), order);
    return s;
}

namespace {

ChernData symbolic_roots(int n, const std::array<int, 3>& r) {
    ChernData cd;
    for (int d = 1; d <= n; ++d) cd.lam.push_back(Scalar::var(sym("gl" + std::to_string(d))));
    for (int k = 1; k <= 3; ++k)
        for (int a = 1; a <= r[static_cast<std::size_t>(k - 1)]; ++a)
            cd.mu[static_cast<std::size_t>(k - 1)].push_back(
                Scalar::var(sym("gm" + std::to_string(k) + "_" + std::to_string(a))));
    return cd;
}

}  // namespace

bool check_fl(int n1, int n2, const std::array<int, 3>& r, int order) {
    ChernData full = symbolic_roots(n1 + n2, r);
    ChernData tail = full;
    std::vector<Scalar> head(full.lam.begin(), full.lam.begin() + n1);
    tail.lam.erase(tail.lam.begin(), tail.lam.begin() + n1);
    TSeries lhs = psi_eigen_series(full, order);
    TSeries rhs = psi_eigen_series(tail, order) * cartan_conj_factor(head, order);
    return lhs == rhs;
}

bool check_euler_switch(int n, const std::array<int, 3>& r) {
    ChernData cd = symbolic_roots(n, r);
    Scalar lam = Scalar::var(sym("gl0"));
    // left side: the displayed Hom-difference Euler factors
    Scalar lhs(1);
    for (auto& li : cd.lam)
        for (int k = 1; k <= 3; ++k) lhs *= (li - lam + hbar(k)) / (lam - li + hbar(k));
    for (int k = 1; k <= 3; ++k)
        for (auto& mu : cd.mu[static_cast<std::size_t>(k - 1)])
            lhs *= (mu - lam - hbar(k)) / (lam - mu);
    // right side: the signed psi product evaluated at lam
    Scalar rhs(1);
    for (int k = 1; k <= 3; ++k)
        for (auto& mu : cd.mu[static_cast<std::size_t>(k - 1)])
            rhs *= (lam - mu + hbar(k)) / (lam - mu);
    for (auto& li : cd.lam)
        for (int k = 1; k <= 3; ++k) rhs *= (lam - li - hbar(k)) / (lam - li + hbar(k));
    int sign_exp = 3 * n + r[0] + r[1] + r[2];
    if (sign_exp % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

QMat QMat::zero(std::size_t r, std::size_t c) {
    QMat m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r * c, Rat(0));
    return m;
}

QMat QMat::identity(std::size_t n) {
    QMat m = zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    QMat m = zero(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

QMat QMat::operator+(const QMat& o) const {
    QMat m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
    return m;
}

QMat QMat::operator-(const QMat& o) const {
    QMat m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
    return m;
}

bool QMat::is_zero() const {
    for (auto& x : a)
        if (x != 0) return false;
    return true;
}

std::size_t qmat_rank(QMat m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Rat inv = 1 / m.at(rank, col);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

QuiverRep QuiverRep::zero(int n, const std::array<int, 3>& r) {
    QuiverRep rep;
    rep.n = n;
    rep.r = r;
    std::size_t un = static_cast<std::size_t>(n);
    rep.B1 = rep.B2 = rep.B3 = QMat::zero(un, un);
    rep.I12 = QMat::zero(un, static_cast<std::size_t>(r[2]));
    rep.I13 = QMat::zero(un, static_cast<std::size_t>(r[1]));
    rep.I23 = QMat::zero(un, static_cast<std::size_t>(r[0]));
    rep.J12 = QMat::zero(static_cast<std::size_t>(r[2]), un);
    rep.J13 = QMat::zero(static_cast<std::size_t>(r[1]), un);
    rep.J23 = QMat::zero(static_cast<std::size_t>(r[0]), un);
    rep.name = "zero";
    return rep;
}

bool check_critical(const QuiverRep& rep) {
    auto comm = [](const QMat& a, const QMat& b) { return a * b - b * a; };
    if (!(comm(rep.B1, rep.B2) + rep.I12 * rep.J12).is_zero()) return false;
    if (!(comm(rep.B1, rep.B3) + rep.I13 * rep.J13).is_zero()) return false;
    if (!(comm(rep.B2, rep.B3) + rep.I23 * rep.J23).is_zero()) return false;
    if (!(rep.J12 * rep.B3).is_zero()) return false;
    if (!(rep.J13 * rep.B2).is_zero()) return false;
    if (!(rep.J23 * rep.B1).is_zero()) return false;
    if (!(rep.B3 * rep.I12).is_zero()) return false;
    if (!(rep.B2 * rep.I13).is_zero()) return false;
    if (!(rep.B1 * rep.I23).is_zero()) return false;
    return true;
}

namespace {

std::size_t rank_of_cols(std::size_t un, const std::vector<QMat>& cs) {
    QMat m = QMat::zero(un, cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t i = 0; i < un; ++i) m.at(i, j) = cs[j].at(i, 0);
    return qmat_rank(std::move(m));
}

// Krylov saturation: grow the span of the seed columns until it is stable
// under every generator; terminates since the rank is bounded by n.
void saturate(std::size_t un, std::vector<QMat>& accepted, const QMat& seed,
              const std::vector<const QMat*>& gens) {
    std::vector<QMat> queue;
    for (std::size_t j = 0; j < seed.cols; ++j) {
        QMat c = QMat::zero(un, 1);
        for (std::size_t i = 0; i < un; ++i) c.at(i, 0) = seed.at(i, j);
        queue.push_back(std::move(c));
    }
    while (!queue.empty()) {
        QMat c = std::move(queue.back());
        queue.pop_back();
        if (c.is_zero()) continue;
        std::size_t before = rank_of_cols(un, accepted);
        accepted.push_back(c);
        if (rank_of_cols(un, accepted) == before) {
            accepted.pop_back();
            continue;
        }
        for (auto* g : gens) queue.push_back(*g * accepted.back());
    }
}

bool closure_spans(const QuiverRep& rep,
                   const std::vector<std::pair<const QMat*, std::vector<const QMat*>>>& seeds) {
    std::size_t un = static_cast<std::size_t>(rep.n);
    if (un == 0) return true;
    std::vector<QMat> all;
    for (auto& [seed, gens] : seeds) {
        std::vector<QMat> span;
        saturate(un, span, *seed, gens);
        for (auto& c : span) all.push_back(c);
    }
    return rank_of_cols(un, all) == un;
}

}  // namespace

bool stab_n(const QuiverRep& rep) {
    std::vector<const QMat*> all{&rep.B1, &rep.B2, &rep.B3};
    std::vector<std::pair<const QMat*, std::vector<const QMat*>>> seeds{
        {&rep.I12, all}, {&rep.I13, all}, {&rep.I23, all}};
    return closure_spans(rep, seeds);
}

bool stab_d(const QuiverRep& rep) {
    std::vector<std::pair<const QMat*, std::vector<const QMat*>>> seeds{
        {&rep.I12, {&rep.B1, &rep.B2}},
        {&rep.I13, {&rep.B1, &rep.B3}},
        {&rep.I23, {&rep.B2, &rep.B3}}};
    return closure_spans(rep, seeds);
}

namespace {

QMat col_vec(std::size_t n, std::size_t k) {
    QMat m = QMat::zero(n, 1);
    m.at(k, 0) = 1;
    return m;
}

QMat diag(const std::vector<int>& d) {
    QMat m = QMat::zero(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

QMat jordan_nilpotent(std::size_t n) {
    QMat m = QMat::zero(n, n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    return m;
}

QMat ones_col(std::size_t n) {
    QMat m = QMat::zero(n, 1);
    for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = 1;
    return m;
}

// place the two "surviving" loops and the cyclic framing map for one color
QuiverRep cyclic_instance(int n, int color, bool jordan, const std::string& name) {
    std::array<int, 3> r{0, 0, 0};
    r[static_cast<std::size_t>(color - 1)] = 1;
    QuiverRep rep = QuiverRep::zero(n, r);
    std::size_t un = static_cast<std::size_t>(n);
    QMat a = jordan ? jordan_nilpotent(un) : QMat::zero(un, un);
    QMat b = jordan ? QMat::zero(un, un) : [&] {
        std::vector<int> d(un);
        for (std::size_t i = 0; i < un; ++i) d[i] = static_cast<int>(i) + 1;
        return diag(d);
    }();
    QMat seed = jordan ? col_vec(un, 0) : ones_col(un);
    // color 3: loops B1, B2 and framing I12; color 2: B1, B3, I13;
    // color 1: B2, B3, I23
    if (color == 3) {
        rep.B1 = a;
        rep.B2 = b;
        rep.I12 = seed;
    } else if (color == 2) {
        rep.B1 = a;
        rep.B3 = b;
        rep.I13 = seed;
    } else {
        rep.B2 = a;
        rep.B3 = b;
        rep.I23 = seed;
    }
    rep.name = name;
    return rep;
}

}  // namespace

std::vector<QuiverRep> critical_sample_library() {
    std::vector<QuiverRep> out;
    // trivial representations in assorted framings
    out.push_back(QuiverRep::zero(0, {0, 0, 1}));
    out.back().name = "zero n=0";
    out.push_back(QuiverRep::zero(1, {0, 0, 1}));
    out.back().name = "zero n=1 r3=1";
    out.push_back(QuiverRep::zero(2, {1, 1, 1}));
    out.back().name = "zero n=2 r=(1,1,1)";
    // one-dimensional instances: scalars always commute
    for (int color = 1; color <= 3; ++color) {
        std::array<int, 3> r{0, 0, 0};
        r[static_cast<std::size_t>(color - 1)] = 1;
        QuiverRep rep = QuiverRep::zero(1, r);
        QMat one = QMat::identity(1);
        if (color == 3) {
            rep.B1 = one;
            rep.B2 = one + one;
            rep.I12 = one;
        } else if (color == 2) {
            rep.B1 = one;
            rep.B3 = one + one;
            rep.I13 = one;
        } else {
            rep.B2 = one;
            rep.B3 = one + one;
            rep.I23 = one;
        }
        rep.name = "cyclic vector n=1 color " + std::to_string(color);
        out.push_back(std::move(rep));
    }
    // diagonal and Jordan Krylov families for every color and n <= 4
    for (int color = 1; color <= 3; ++color)
        for (int n = 2; n <= 4; ++n) {
            out.push_back(cyclic_instance(n, color, false,
                                          "diag n=" + std::to_string(n) + " color " +
                                              std::to_string(color)));
            if (n <= 3)
                out.push_back(cyclic_instance(n, color, true,
                                              "jordan n=" + std::to_string(n) + " color " +
                                                  std::to_string(color)));
        }
    // a non-stable critical point with a genuine I J correction
    {
        QuiverRep rep = QuiverRep::zero(2, {0, 0, 1});
        rep.B1 = QMat::zero(2, 2);
        rep.B1.at(0, 1) = 1;
        rep.B2 = diag({0, 1});
        rep.I12 = col_vec(2, 0);
        rep.J12 = QMat::zero(1, 2);
        rep.J12.at(0, 1) = -1;
        rep.name = "rank-one IJ correction, not stable";
        out.push_back(std::move(rep));
    }
    // two framing directions fed simultaneously
    {
        QuiverRep rep = QuiverRep::zero(2, {0, 1, 1});
        rep.I12 = col_vec(2, 0);
        rep.I13 = col_vec(2, 1);
        rep.name = "two framing columns n=2";
        out.push_back(std::move(rep));
        QuiverRep rep3 = QuiverRep::zero(3, {1, 1, 1});
        rep3.I12 = col_vec(3, 0);
        rep3.I13 = col_vec(3, 1);
        rep3.I23 = col_vec(3, 2);
        rep3.name = "three framing columns n=3";
        out.push_back(std::move(rep3));
    }
    return out;
}

QuiverRep off_critical_witness() {
    // B3 feeds the second basis vector, so the three-loop span is full while
    // the (B1, B2) Krylov space is not; B3 I12 != 0 leaves the critical locus
    QuiverRep rep = QuiverRep::zero(2, {0, 0, 1});
    rep.B3 = jordan_nilpotent(2);
    rep.I12 = col_vec(2, 0);
    rep.name = "off-critical witness";
    return rep;
}

namespace {

nlohmann::json mat_to_json(const QMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

QMat mat_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    QMat m = QMat::zero(rows, cols);
    if (j.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("matrix column count mismatch");
        for (std::size_t jj = 0; jj < cols; ++jj) {
            Rat v(j[i][jj].get<std::string>());
            v.canonicalize();
            m.at(i, jj) = v;
        }
    }
    return m;
}

}  // namespace

std::string quiver_to_json(const QuiverRep& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["name"] = rep.name;
    j["B1"] = mat_to_json(rep.B1);
    j["B2"] = mat_to_json(rep.B2);
    j["B3"] = mat_to_json(rep.B3);
    j["I12"] = mat_to_json(rep.I12);
    j["I13"] = mat_to_json(rep.I13);
    j["I23"] = mat_to_json(rep.I23);
    j["J12"] = mat_to_json(rep.J12);
    j["J13"] = mat_to_json(rep.J13);
    j["J23"] = mat_to_json(rep.J23);
    return j.dump(2);
}

QuiverRep quiver_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    QuiverRep rep;
    rep.n = j.at("n").get<int>();
    auto r = j.at("r");
    rep.r = {r[0].get<int>(), r[1].get<int>(), r[2].get<int>()};
    rep.name = j.value("name", "");
    std::size_t un = static_cast<std::size_t>(rep.n);
    rep.B1 = mat_from_json(j.at("B1"), un, un);
    rep.B2 = mat_from_json(j.at("B2"), un, un);
    rep.B3 = mat_from_json(j.at("B3"), un, un);
    rep.I12 = mat_from_json(j.at("I12"), un, static_cast<std::size_t>(rep.r[2]));
    rep.I13 = mat_from_json(j.at("I13"), un, static_cast<std::size_t>(rep.r[1]));
    rep.I23 = mat_from_json(j.at("I23"), un, static_cast<std::size_t>(rep.r[0]));
    rep.J12 = mat_from_json(j.at("J12"), static_cast<std::size_t>(rep.r[2]), un);
    rep.J13 = mat_from_json(j.at("J13"), static_cast<std::size_t>(rep.r[1]), un);
    rep.J23 = mat_from_json(j.at("J23"), static_cast<std::size_t>(rep.r[0]), un);
    return rep;
}

}  // namespace yforge
