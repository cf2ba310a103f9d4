#pragma once

#include <array>
#include <string>
#include <vector>

#include "yforge/series.hpp"

namespace yforge {

/// Chern roots of the tautological and framing bundles: lam_d for V_n,
/// mu_a^(k) for E_{r_k}.
struct ChernData {
    std::vector<Scalar> lam;
    std::array<std::vector<Scalar>, 3> mu;
};

/// Expansion at z = infinity of
///   prod_k prod_a (z - mu_a^(k) + h_k)/(z - mu_a^(k))
///   prod_d prod_k (z - lam_d - h_k)/(z - lam_d + h_k).
TSeries psi_eigen_series(const ChernData& cd, int order);

/// prod_t prod_k (z - nu_t - h_k)/(z - nu_t + h_k), expanded at infinity.
TSeries cartan_conj_factor(const std::vector<Scalar>& roots, int order);

/// The tautological-class restriction identity: the full series over n
/// roots divided by the series over the last n2 roots equals the
/// conjugation factor of the first n1 roots, exactly to the given order.
bool check_fl(int n1, int n2, const std::array<int, 3>& r, int order);

/// Euler-class bookkeeping: the Hom-difference factors against the signed
/// psi product, as an identity of rational functions.
bool check_euler_switch(int n, const std::array<int, 3>& r);

// ---------------------------------------------------------------------------
// framed quiver representations over Q
// ---------------------------------------------------------------------------

struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    static QMat zero(std::size_t r, std::size_t c);
    static QMat identity(std::size_t n);
    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    bool is_zero() const;
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// Rank via fraction-free row reduction.
std::size_t qmat_rank(QMat m);

/// Representation data of the framed three-loop quiver: three loops B_i and
/// the framing pairs I_ab: C^{r_c} -> C^n, J_ab: C^n -> C^{r_c}.
struct QuiverRep {
    int n = 0;
    std::array<int, 3> r{0, 0, 0};
    QMat B1, B2, B3;
    QMat I12, I13, I23;  // sources of dimension r3, r2, r1
    QMat J12, J13, J23;
    std::string name;

    static QuiverRep zero(int n, const std::array<int, 3>& r);
};

/// The nine critical-locus equations: the three bracket+IJ moment maps and
/// the six J B = 0, B I = 0 conditions.
bool check_critical(const QuiverRep& rep);

/// C<B1,B2,B3> applied to the union of the I-images spans C^n.
bool stab_n(const QuiverRep& rep);
/// The stronger two-loop condition with the color-matched B pairs.
bool stab_d(const QuiverRep& rep);

/// Hand-constructed critical-locus instances, n <= 4, at least twenty.
std::vector<QuiverRep> critical_sample_library();

/// An off-critical representation with stab_n true but stab_d false.
QuiverRep off_critical_witness();

/// JSON round trip; entries are rational strings, shape documented in the
/// README.
std::string quiver_to_json(const QuiverRep& rep);
QuiverRep quiver_from_json(const std::string& text);

}  // namespace yforge
