#pragma once

#include <string>
#include <vector>

#include "yforge/poly.hpp"
#include "yforge/scalar.hpp"
#include "yforge/series.hpp"

namespace yforge {

struct DegreeUnsupported : std::runtime_error {
    DegreeUnsupported() : std::runtime_error("operation supports degree <= 1 payloads only") {}
};

/// The shuffle-variable lambda_i, 1-based.
SymId lambda_sym(int i);

/// Degree-n element of the shuffle algebra: a symmetric polynomial in
/// lam1..lam_n with coefficients in Q[h1, h2].  Degree 0 is the unit line.
class ShElement {
public:
    ShElement() = default;  // degree 0, payload 0
    ShElement(int degree, Poly payload);
    static ShElement unit();
    static ShElement scalar(const Poly& c);

    int degree() const { return degree_; }
    const Poly& payload() const { return payload_; }
    bool is_zero() const { return payload_.is_zero(); }
    bool payload_symmetric() const;

    ShElement operator+(const ShElement& o) const;
    ShElement operator-(const ShElement& o) const;
    ShElement operator-() const;
    ShElement operator*(const Poly& c) const;
    bool operator==(const ShElement& o) const;

private:
    int degree_ = 0;
    Poly payload_;
};

/// True iff p is invariant under every adjacent transposition of lam1..lam_n.
bool is_symmetric(const Poly& p, int nlam);

/// Multiplication kernel (x - e1 h1)(x - e2 h2)(x - e3 h3) evaluated on
/// variable differences.  The unit scales give the kernel of the algebra;
/// perturbed scales are negative controls for the relation suites.
struct ShuffleKernel {
    Rat scale1{1}, scale2{1}, scale3{1};
    Poly eval(const Poly& diff) const;
};

/// Shuffle product: sum over order-preserving interleavings of the variables,
/// assembled over the common denominator prod_{s<t} (lam_s - lam_t) and
/// cleared by one exact division.  Throws NotDivisible if the kernel was
/// transcribed wrongly.
ShElement shuffle_mul(const ShElement& f, const ShElement& g,
                      const ShuffleKernel& kernel = {});

ShElement sh_commutator(const ShElement& f, const ShElement& g,
                        const ShuffleKernel& kernel = {});
ShElement sh_anticommutator(const ShElement& f, const ShElement& g,
                            const ShuffleKernel& kernel = {});

/// e_r |-> lam^r in degree 1.
ShElement e_gen(int r);

struct ShuffleResidual {
    bool ok = false;
    Poly residual;          // zero iff ok
    std::string describe;
};

/// (Y1) in the shuffle model: LHS - RHS for generators e_i, e_j.
ShuffleResidual check_y1(int i, int j, const ShuffleKernel& kernel = {});
/// (Y6) symmetrized double commutator Sym [e_i1, [e_i2, e_{i3+1}]].
ShuffleResidual check_serre(int i1, int i2, int i3, const ShuffleKernel& kernel = {});

/// Closed-form commutator of App. A:
/// lam^a * lam^b - lam^b * lam^a = -2 (sigma3/lam12)(lam1^a lam2^b - lam1^b lam2^a).
ShuffleResidual check_commutator_closed_form(int a, int b);

/// P(z, s+) psi(z) lam^j = -P(s+, z) lam^j psi(z) as a z-series identity to
/// the given order, with the Cartan series acting through the degree-1
/// conjugation factor.
ShuffleResidual check_y4_conjugation(int j, int order);

/// One term of the Drinfeld coproduct on a degree-n payload: the contiguous
/// split A = [1..a], B = [a+1..n], kept unexpanded (no denominator clearing).
struct DrinfeldTerm {
    int a = 0;                    // |A|
    std::vector<int> psi_args;    // Cartan factors psi(lam_t), t in B
    Poly payload;                 // P with its variables split across the two legs
    std::string denom;            // fac(lam_B | lam_A), textual
    std::string str() const;
};

/// All n+1 split terms for a degree-n element.
std::vector<DrinfeldTerm> drinfeld_terms(const ShElement& P);

/// The displayed degree-1 form psi(lam) (x) P(lam) + P(lam) (x) 1.
/// Throws DegreeUnsupported for other degrees.
std::vector<DrinfeldTerm> drinfeld_coproduct_deg1(const ShElement& P);

}  // namespace yforge
