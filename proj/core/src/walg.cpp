#include "yforge/walg.hpp"

#include <algorithm>
#include <sstream>

namespace yforge {

namespace {

std::size_t find_color(const FockSpace& space, int color, std::size_t skip = 0) {
    std::size_t seen = 0;
    for (std::size_t b = 0; b < space.nbosons(); ++b)
        if (space.color(b) == color) {
            if (seen == skip) return b;
            ++seen;
        }
    throw std::invalid_argument("space lacks a boson of the required color");
}

}  // namespace

WFieldSet build_w002(SpacePtr space) {
    std::size_t b1 = find_color(*space, 3, 0), b2 = find_color(*space, 3, 1);
    WFieldSet ws;
    ws.space = space;
    FieldPtr f1 = boson_field(b1), f2 = boson_field(b2);
    ws.btilde = lin_field({{Scalar(1), f1}, {Scalar(-1), f2}});
    ws.W1 = lin_field({{Scalar(1), f1}, {Scalar(1), f2}});
    // W2 = -(h1 h2/4)(bb) - (h3/2) db
    ws.W2 = lin_field({{-(hbar(1) * hbar(2)) * Scalar(Rat(1, 4)), nprod_field(ws.btilde, ws.btilde)},
                       {-(hbar(3) * Scalar(Rat(1, 2))), derivative_field(ws.btilde, 1)}});
    return ws;
}

WFieldSet build_w011(SpacePtr space, bool flip_orientation) {
    std::size_t bc2 = find_color(*space, 2), bc3 = find_color(*space, 3);
    WFieldSet ws;
    ws.space = space;
    FieldPtr f2 = boson_field(bc2), f3 = boson_field(bc3);
    Scalar sgn = flip_orientation ? Scalar(-1) : Scalar(1);
    // btilde = h3 b(2) - h2 b(3), decoupled from W1
    ws.btilde = lin_field({{sgn * hbar(3), f2}, {-(sgn * hbar(2)), f3}});
    ws.W1 = lin_field({{Scalar(1), f2}, {Scalar(1), f3}});
    FieldPtr bb = nprod_field(ws.btilde, ws.btilde);
    ws.W2 = lin_field({{Scalar(Rat(1, 2)), bb}, {Scalar(Rat(1, 2)), derivative_field(ws.btilde, 1)}});
    ws.W3 = lin_field({{Scalar(4), nprod_field(ws.btilde, bb)},
                       {Scalar(6), nprod_field(ws.btilde, derivative_field(ws.btilde, 1))},
                       {Scalar(1), derivative_field(ws.btilde, 2)}});
    return ws;
}

FieldPtr null_field(const WFieldSet& ws, const Rat& cubic_coeff) {
    if (!ws.W3) throw std::invalid_argument("null field needs the three-generator configuration");
    FieldPtr w2 = ws.W2, w3 = ws.W3;
    return lin_field({
        {Scalar(1), nprod_field(w3, w3)},
        {Scalar(Rat(-1) * cubic_coeff), nprod_field(w2, nprod_field(w2, w2))},
        {Scalar(-76), nprod_field(derivative_field(w2, 1), derivative_field(w2, 1))},
        {Scalar(-112), nprod_field(derivative_field(w2, 2), w2)},
        {Scalar(Rat(32, 3)), derivative_field(w2, 4)},
    });
}

HwTriple hw_eigenvalues(const Scalar& q1, const Scalar& q2) {
    Scalar q = (q1 - q2) / hbar(1);
    HwTriple t;
    t.w1 = -(q1 / (hbar(1) * hbar(3))) - q2 / (hbar(1) * hbar(2));
    t.w2 = q * (q + Scalar(1)) * Scalar(Rat(1, 2));
    t.w3 = Scalar(-2) * q * (q + Scalar(1)) * (Scalar(2) * q + Scalar(1));
    return t;
}

Scalar zhu_constraint_residual(const HwTriple& t) {
    return t.w3 * t.w3 - Scalar(16) * t.w2 * t.w2 * (Scalar(8) * t.w2 + Scalar(1));
}

Scalar w011_charge_color2(const Scalar& q1) { return -(q1 / (hbar(1) * hbar(3))); }
Scalar w011_charge_color3(const Scalar& q2) { return -(q2 / (hbar(1) * hbar(2))); }

namespace {

Scalar zero_mode_eigenvalue(const FieldPtr& f, const SpacePtr& space) {
    FockVector vac = FockVector::vacuum(space);
    FockVector img = f->apply_mode(0, vac);
    if (img.is_zero()) return Scalar(0);
    Scalar out;
    for (auto& [s, c] : img.terms()) {
        if (!(s == FockState::vacuum(space->nbosons())))
            throw std::logic_error("zero mode does not preserve the highest-weight vector");
        out = c;
    }
    return out;
}

}  // namespace

HwTriple hw_from_fields(const WFieldSet& ws) {
    HwTriple t;
    t.w1 = zero_mode_eigenvalue(ws.W1, ws.space);
    t.w2 = zero_mode_eigenvalue(ws.W2, ws.space);
    t.w3 = ws.W3 ? zero_mode_eigenvalue(ws.W3, ws.space) : Scalar(0);
    return t;
}

std::vector<BosonSpec> screening_bosons(int r1, int r2, int r3) {
    std::vector<BosonSpec> out;
    for (int i = 0; i < r3; ++i) out.push_back({3});
    for (int i = 0; i < r2; ++i) out.push_back({2});
    for (int i = 0; i < r1; ++i) out.push_back({1});
    return out;
}

std::vector<ScreeningCurrent> screening_set(int r1, int r2, int r3) {
    auto bosons = screening_bosons(r1, r2, r3);
    std::size_t m = bosons.size();
    if (m < 1) throw std::invalid_argument("need at least one boson");
    std::vector<ScreeningCurrent> out;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        int ca = bosons[j].color, cb = bosons[j + 1].color;
        ScreeningCurrent s;
        s.position = j;
        s.alpha.assign(m, Scalar(0));
        std::ostringstream label;
        if (ca == 3 && cb == 3) {
            s.alpha[j] = -hbar(1);
            s.alpha[j + 1] = hbar(1);
            label << "S33_" << (j + 1);
        } else if (ca == 3 && cb == 2) {
            s.alpha[j] = -hbar(2);
            s.alpha[j + 1] = hbar(3);
            label << "S32_" << (j + 1);
        } else if (ca == 2 && cb == 2) {
            s.alpha[j] = -hbar(3);
            s.alpha[j + 1] = hbar(3);
            label << "S22_" << (j + 1);
        } else if (ca == 2 && cb == 1) {
            s.alpha[j] = -hbar(1);
            s.alpha[j + 1] = hbar(2);
            label << "S21_" << (j + 1);
        } else if (ca == 1 && cb == 1) {
            s.alpha[j] = -hbar(2);
            s.alpha[j + 1] = hbar(2);
            label << "S11_" << (j + 1);
        } else {
            throw std::logic_error("unexpected color pair in screening order");
        }
        s.label = label.str();
        out.push_back(std::move(s));
    }
    return out;
}

Calibration calibrate_screening(const ScreeningCurrent& s, const WFieldSet& ws, int N) {
    VertexOp v(ws.space, s.alpha);
    Scalar h_src = zero_mode_eigenvalue(ws.W2, v.src());
    Scalar h_dst = zero_mode_eigenvalue(ws.W2, v.dst());
    Calibration cal;
    cal.raw_offset = h_src - h_dst;
    if (!cal.raw_offset.is_polynomial() || !cal.raw_offset.num().is_constant()) return cal;
    Rat val = cal.raw_offset.is_zero() ? Rat(0) : cal.raw_offset.num().leading().c;
    if (val.get_den() != 1) return cal;
    cal.offset = static_cast<int>(val.get_num().get_si());

    // the candidate must make S0 commute with the W2 modes
    TruncOp s0 = v.block(*cal.offset);
    LevelBasis basis = LevelBasis::build(ws.space, N);
    for (int m = -1; m <= 1; ++m) {
        TruncOp w2_src = TruncOp::field_mode(v.src(), ws.W2, m);
        TruncOp w2_dst = TruncOp::field_mode(v.dst(), ws.W2, m);
        if (!intertwiner_commutator(w2_dst, s0, w2_src).is_zero_on(basis))
            throw NoConsistentOffset();
    }
    return cal;
}

TruncOp intertwiner_commutator(const TruncOp& a_dst, const TruncOp& s, const TruncOp& a_src) {
    return TruncOp::sum(TruncOp::composed(a_dst, s),
                        TruncOp::scaled(TruncOp::composed(s, a_src), Scalar(-1)));
}

namespace {

struct WWord {
    std::vector<std::pair<int, int>> letters;  // (which W, mode n >= 1), applied as W_{i,-n}
    std::string str() const {
        std::ostringstream os;
        for (auto& [i, n] : letters) os << "W" << i << ",-" << n << " ";
        os << "|0>";
        return os.str();
    }
};

void enumerate_words(int budget, int max_w, std::vector<std::pair<int, int>>& cur,
                     std::vector<WWord>& out) {
    out.push_back({cur});
    for (int i = 1; i <= max_w; ++i)
        for (int n = 1; n <= budget; ++n) {
            cur.emplace_back(i, n);
            enumerate_words(budget - n, max_w, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<KernelCheckRow> kernel_check(const ScreeningCurrent& s, const WFieldSet& ws, int N) {
    VertexOp v(ws.space, s.alpha);
    Calibration cal = calibrate_screening(s, ws, N);
    if (!cal.offset) throw NonIntegralExponent(cal.raw_offset.str());
    TruncOp s0 = v.block(*cal.offset);

    std::vector<WWord> words;
    std::vector<std::pair<int, int>> cur;
    enumerate_words(N, ws.W3 ? 3 : 2, cur, words);

    std::vector<KernelCheckRow> rows;
    for (auto& w : words) {
        FockVector vec = FockVector::vacuum(ws.space);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            const FieldPtr& f = it->first == 1 ? ws.W1 : (it->first == 2 ? ws.W2 : ws.W3);
            vec = f->apply_mode(-it->second, vec);
        }
        if (vec.is_zero()) continue;  // not a state, nothing to check
        rows.push_back({w.str(), s0.apply(vec).is_zero()});
    }
    return rows;
}

bool screening_kills_raw_boson(const ScreeningCurrent& s, const WFieldSet& ws) {
    VertexOp v(ws.space, s.alpha);
    Calibration cal = calibrate_screening(s, ws, 2);
    if (!cal.offset) throw NonIntegralExponent(cal.raw_offset.str());
    TruncOp s0 = v.block(*cal.offset);
    FockVector raw = apply_boson_mode(FockVector::vacuum(ws.space), s.position, -1);
    return s0.apply(raw).is_zero();
}

VirasoroReport check_virasoro(const WFieldSet& ws, int mmax, int N) {
    VirasoroReport rep;
    LevelBasis basis = LevelBasis::build(ws.space, N);
    auto L = [&](int m) { return TruncOp::field_mode(ws.space, ws.W2, m); };

    // c from [L2, L-2] = 4 L0 + c/2, cross-checked against [L1, L-1] = 2 L0
    TruncOp c11 = TruncOp::commutator(L(1), L(-1));
    TruncOp r11 = TruncOp::sum(c11, TruncOp::scaled(L(0), Scalar(-2)));
    if (!r11.is_zero_on(basis)) {
        rep.detail = "[L1, L-1] != 2 L0";
        return rep;
    }
    TruncOp c22 = TruncOp::commutator(L(2), L(-2));
    TruncOp r22 = TruncOp::sum(c22, TruncOp::scaled(L(0), Scalar(-4)));
    auto c_half = r22.scalar_on(basis);
    if (!c_half) {
        rep.detail = "[L2, L-2] - 4 L0 is not scalar";
        return rep;
    }
    Scalar c = *c_half * Scalar(2);
    rep.central_charge = c;

    for (int m = -mmax; m <= mmax; ++m)
        for (int n = -mmax; n <= mmax; ++n) {
            TruncOp lhs = TruncOp::commutator(L(m), L(n));
            TruncOp rhs = TruncOp::scaled(L(m + n), Scalar(m - n));
            if (m + n == 0) {
                Scalar central = c * Scalar(Rat(1, 12)) * Scalar(Rat(m) * Rat(m) * Rat(m) - Rat(m));
                rhs = TruncOp::sum(rhs, TruncOp::scaled(TruncOp::identity(ws.space), central));
            }
            if (!lhs.equal_on(basis, rhs)) {
                std::ostringstream os;
                os << "virasoro relation fails at m=" << m << " n=" << n;
                rep.detail = os.str();
                return rep;
            }
        }
    rep.ok = true;
    return rep;
}

bool check_w1_decoupled(const WFieldSet& ws, int mmax, int N) {
    LevelBasis basis = LevelBasis::build(ws.space, N);
    std::vector<FieldPtr> others{ws.W2};
    if (ws.W3) others.push_back(ws.W3);
    for (int m = -mmax; m <= mmax; ++m)
        for (int n = -mmax; n <= mmax; ++n)
            for (auto& f : others) {
                TruncOp a = TruncOp::field_mode(ws.space, ws.W1, m);
                TruncOp b = TruncOp::field_mode(ws.space, f, n);
                if (!TruncOp::commutator(a, b).is_zero_on(basis)) return false;
            }
    return true;
}

}  // namespace yforge
