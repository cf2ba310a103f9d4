#pragma once

#include <array>
#include <string>
#include <vector>

#include "yforge/fock.hpp"
#include "yforge/series.hpp"

namespace yforge {

struct UnsupportedGenerator : std::runtime_error {
    UnsupportedGenerator() : std::runtime_error("coproduct is tabulated on the generating set only") {}
};

// ---------------------------------------------------------------------------
// formal layer: words in the generators and small tensors of words
// ---------------------------------------------------------------------------

struct SHGen {
    enum class Kind { F1, Fm1, F0, C, B } kind;
    int l = 0;  // mode/index; for B, l = 0 stands for the element B_0 = G_1
    int k = 0;  // color, C only
    bool operator<(const SHGen& o) const;
    bool operator==(const SHGen& o) const;
    std::string str() const;
};

using SHWord = std::vector<SHGen>;
std::string word_str(const SHWord& w);

/// Formal Scalar-linear combination of words.
class SHElement {
public:
    static SHElement zero() { return {}; }
    static SHElement one();
    static SHElement gen(const SHGen& g);

    SHElement operator+(const SHElement& o) const;
    SHElement operator-(const SHElement& o) const;
    SHElement operator*(const SHElement& o) const;  // word concatenation
    SHElement operator*(const Scalar& c) const;
    bool operator==(const SHElement& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SHWord, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<SHWord, Scalar> terms_;
};

SHElement sh_word_commutator(const SHElement& a, const SHElement& b);

/// B_{-l} = ad(f_{1,1})^{l-1}(f_{1,0})/(l-1)!  and
/// B_l = (f_{-1,0}) ad(f_{-1,1})^{l-1}/(l-1)!  as nested-commutator words.
SHElement B_element(int l);

/// Formal tensor with a fixed number of legs.
class SHTensor {
public:
    explicit SHTensor(int rank) : rank_(rank) {}
    int rank() const { return rank_; }
    void add(const std::vector<SHWord>& legs, const Scalar& c);
    SHTensor operator+(const SHTensor& o) const;
    SHTensor operator*(const Scalar& c) const;
    /// leg-wise concatenation product
    SHTensor operator*(const SHTensor& o) const;
    bool operator==(const SHTensor& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    const std::map<std::vector<SHWord>, Scalar>& terms() const { return terms_; }
    std::string str() const;

private:
    int rank_;
    std::map<std::vector<SHWord>, Scalar> terms_;
};

/// The coproduct on the generating set {c_l^(k), B_l, B_0, f_{0,1}}; the
/// Heisenberg tail of f_{0,1} is truncated at tail_lmax (higher terms act by
/// zero on the truncations the tensor is evaluated on).
SHTensor coproduct_c(const SHGen& g, int tail_lmax);

/// Apply the coproduct to one leg of a tensor, extending multiplicatively
/// over words of generating-set elements.
SHTensor coproduct_on_leg(const SHTensor& t, int leg, int tail_lmax);

// ---------------------------------------------------------------------------
// the phi / Phi generating series
// ---------------------------------------------------------------------------

/// phi_l(t, h_color) for l = 0..l_max, each truncated at t_order, extracted
/// from exp(sum (-1)^{l+1} a^l phi_l) = (1 + t(a - h))/(1 + t a).
std::vector<TSeries> phi_coeffs(int color, int l_max, int t_order);

/// Phi_l(t) from the six-factor ratio, same extraction.
std::vector<TSeries> Phi_coeffs(int l_max, int t_order);

// ---------------------------------------------------------------------------
// Fock representations
// ---------------------------------------------------------------------------

/// Central values c_i^(k); index_of mu symbols declared per configuration.
struct CentralValues {
    // c[k-1][i] for k = 1..3, i = 0..imax
    std::array<std::vector<Scalar>, 3> c;
    const Scalar& at(int k, int i) const { return c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)]; }
};

/// Power-sum specialization: c_0^(k) = r_k, c_i^(k) = p_i(mu^(k)_1..mu^(k)_rk).
CentralValues specialize_r(int r1, int r2, int r3, int imax,
                           const std::array<std::vector<Scalar>, 3>& mu);

/// One SH representation: the generator towers as exact operators.
struct ShcRep {
    SpacePtr space;
    std::vector<int> colors;
    std::vector<Scalar> mu;  // Chern root per boson
    int lmax = 0;
    TruncOp f01;
    std::vector<TruncOp> f1;   // f_{1,l}, raises the level
    std::vector<TruncOp> fm1;  // f_{-1,l}, lowers the level
    CentralValues cv;

    TruncOp b_mode(int l) const;  // B_l acting as the sum of boson modes
};

/// The single-boson f_{0,1}: the cubic sum, the (l-1) ladder term and the
/// mu-weighted number operator, with h-coefficients set by the boson color.
TruncOp f01_single(SpacePtr space, std::size_t boson, const Scalar& mu);

/// Chern-root dictionary of the two-boson comparison: mu^(2) = h1 h3 q + h2,
/// mu^(3) = h1 h2 q.  (The shift belongs to the first factor; with it the
/// W-mode rewriting of f_{0,1} closes with constant coefficients.)
Scalar mu_from_charge(int color, const Scalar& charge);
Scalar charge_from_mu(int color, const Scalar& mu);

/// V_{0,0,1}-type module for a single boson of the given color.
ShcRep fock_rep(int color, const Scalar& mu, int lmax);

/// m-boson module via the iterated coproduct: f_{0,1} picks up the
/// l b_l (x) b_{-l} tail over ordered factor pairs.
ShcRep tensor_rep(const std::vector<int>& colors, const std::vector<Scalar>& mus, int lmax);

/// G_{l+k} as the commutator [f_{1,l}, f_{-1,k}].
TruncOp g_comm(const ShcRep& rep, int l, int k);

/// The Cartan family G_0..G_lmax of a representation.
std::vector<TruncOp> g_values(const ShcRep& rep, int l_max);

// ---------------------------------------------------------------------------
// the generating-function identity on a truncation
// ---------------------------------------------------------------------------

struct SMat {
    std::size_t n = 0;
    std::vector<Scalar> a;  // row-major
    static SMat zero(std::size_t n);
    static SMat identity(std::size_t n);
    Scalar& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    SMat operator+(const SMat& o) const;
    SMat operator-(const SMat& o) const;
    SMat operator*(const SMat& o) const;
    SMat operator*(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const SMat& o) const { return n == o.n && a == o.a; }
};

/// Square matrix of a level-preserving operator on the basis.
SMat mat_of(const TruncOp& op, const LevelBasis& basis);
/// Same, dropping image entries beyond the basis window (graded operators).
SMat mat_of_truncated(const TruncOp& op, const LevelBasis& basis);

/// log of a matrix t-series with constant term I.
std::vector<SMat> mat_series_log(const std::vector<SMat>& s);

struct GenIdentityReport {
    bool low_orders_zero = false;   // t^1..t^3 of the reduced log vanish
    bool f01_matches = false;       // t^4 recovers f_{0,1}
    bool f02_relation_ok = false;   // solved f_{0,2} satisfies [f_{0,2}, f_{1,k}] = f_{1,k+2}
    std::string detail;
};

/// Order-by-order comparison of 1 - sigma3 sum G_l t^{l+1} (from commutators)
/// against the c-side exponentials, solving for f_{0,l}, l >= 2, along the way.
GenIdentityReport check_generating_identity(const ShcRep& rep, int N);

// ---------------------------------------------------------------------------
// relation suites
// ---------------------------------------------------------------------------

struct RelationCheck {
    std::string name;
    bool pass = false;
};

/// The defining relations on a truncation: ladder relations for f_{0,1},
/// split-independence of G, and the low Cartan relations (Y0)(Y4')(Y5').
std::vector<RelationCheck> check_relations_on_rep(const ShcRep& rep, int lmax, int N);

/// [B_l, B_m] is scalar, zero unless l + m = 0; and the B_element words
/// evaluate to the boson modes.
std::vector<RelationCheck> check_heisenberg(const ShcRep& rep, int lmax, int N);

/// Evaluate a formal SHElement in a representation (words in f_{1,l}, f_{-1,l}).
TruncOp evaluate_word_element(const ShcRep& rep, const SHElement& e);

/// Coassociativity of the coproduct on the generating set.
bool check_coassociativity(int tail_lmax);

struct WRewriteReport {
    bool is_scalar = false;
    Scalar sector_constant;  // the constant c, a function of the charges
};

/// The two-boson f_{0,1} minus its W-mode combination: the |l|-weighted
/// W1 W1 sum, the five-term weight-3 combination and the mode corrections.
/// On every level <= N the residual must be the sector constant.
WRewriteReport check_w_rewriting(int N);

}  // namespace yforge
