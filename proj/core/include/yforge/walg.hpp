#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yforge/fock.hpp"

namespace yforge {

struct NoConsistentOffset : std::runtime_error {
    NoConsistentOffset() : std::runtime_error("no mode offset makes the screening weight-1") {}
};

/// Free-field realization of one of the corner algebras on a given sector.
/// Bosons are located by color inside the space; W3 is present only for the
/// three-generator configuration.
struct WFieldSet {
    SpacePtr space;
    FieldPtr btilde;
    FieldPtr W1, W2;
    FieldPtr W3;  // null unless the (0,1,1)-type configuration
};

/// Two color-3 bosons: W1 = b1 + b2, W2 = -(h1 h2/4)(bb) - (h3/2) db with
/// b = b1 - b2.
WFieldSet build_w002(SpacePtr space);

/// One color-2 and one color-3 boson: b = h3 b(2) - h2 b(3),
/// W2 = ((bb) + db)/2, W3 = 4(b(bb)) + 6(b db) + d^2 b.
/// flip_orientation negates b, the h2 <-> h3 image used by the triality test.
WFieldSet build_w011(SpacePtr space, bool flip_orientation = false);

/// X = (W3 W3) - 128 (W2(W2 W2)) - 76 (dW2 dW2) - 112 (d^2W2 W2) + 32/3 d^4 W2,
/// with the second coefficient adjustable as a negative control.
FieldPtr null_field(const WFieldSet& ws, const Rat& cubic_coeff = Rat(128));

struct HwTriple {
    Scalar w1, w2, w3;
};

/// Closed-form highest-weight data: w1 = -q1/(h1 h3) - q2/(h1 h2),
/// w2 = q(q+1)/2, w3 = -2q(q+1)(2q+1) with q = (q1-q2)/h1.
HwTriple hw_eigenvalues(const Scalar& q1, const Scalar& q2);

/// w3^2 - 16 w2^2 (8 w2 + 1), which must vanish identically.
Scalar zhu_constraint_residual(const HwTriple& t);

/// Charges of |q1, q2> in the two-boson realization: the color-2 boson
/// carries -q1/(h1 h3) and the color-3 boson -q2/(h1 h2).
Scalar w011_charge_color2(const Scalar& q1);
Scalar w011_charge_color3(const Scalar& q2);

/// Zero-mode eigenvalues of the field set on its highest-weight vector.
HwTriple hw_from_fields(const WFieldSet& ws);

struct ScreeningCurrent {
    std::string label;          // S33_i, S32_i, ...
    std::size_t position;       // couples bosons position and position + 1
    std::vector<Scalar> alpha;  // vertex charge per boson of the space
};

/// Boson colors in the screening order: r3 color-3 bosons, then r2 color-2,
/// then r1 color-1.
std::vector<BosonSpec> screening_bosons(int r1, int r2, int r3);

/// The m-1 screening currents of the (r1, r2, r3) configuration, with the
/// fixed charge table per adjacent color pair.
std::vector<ScreeningCurrent> screening_set(int r1, int r2, int r3);

struct Calibration {
    Scalar raw_offset;           // h(q) - h(q + shift), exact
    std::optional<int> offset;   // set iff raw_offset is an integer
};

/// Mode offset from the W2 grading equation.  The screening current has
/// weight 1 iff S0 := block(offset) commutes with the W2 modes; verified on
/// levels <= N, NoConsistentOffset if the candidate fails.
Calibration calibrate_screening(const ScreeningCurrent& s, const WFieldSet& ws, int N);

/// a_dst o s - s o a_src for an intertwiner s between the two sectors.
TruncOp intertwiner_commutator(const TruncOp& a_dst, const TruncOp& s, const TruncOp& a_src);

struct KernelCheckRow {
    std::string word;
    bool pass;
};

/// S0 applied to every W-generator descendant of the vacuum up to level N.
std::vector<KernelCheckRow> kernel_check(const ScreeningCurrent& s, const WFieldSet& ws, int N);

/// S0 applied to a raw single-boson state, the negative control; returns
/// whether the image vanishes.
bool screening_kills_raw_boson(const ScreeningCurrent& s, const WFieldSet& ws);

struct VirasoroReport {
    bool ok = false;
    std::optional<Scalar> central_charge;  // set when [L2, L-2] closes
    std::string detail;
};

/// [W2_m, W2_n] = (m-n) W2_{m+n} + c/12 (m^3 - m) delta_{m+n,0} for all
/// |m|, |n| <= mmax on levels <= N, with one consistent c.
VirasoroReport check_virasoro(const WFieldSet& ws, int mmax, int N);

/// [W1_m, Wi_n] = 0 on levels <= N (the decoupled-boson property).
bool check_w1_decoupled(const WFieldSet& ws, int mmax, int N);

}  // namespace yforge
