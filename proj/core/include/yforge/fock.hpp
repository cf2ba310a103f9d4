#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "yforge/scalar.hpp"

namespace yforge {

struct ChargeMismatch : std::runtime_error {
    ChargeMismatch() : std::runtime_error("fock vectors live in different charge sectors") {}
};
struct TruncationInsufficient : std::runtime_error {
    TruncationInsufficient() : std::runtime_error("level bound too small for this composition") {}
};
struct NonIntegralExponent : std::runtime_error {
    explicit NonIntegralExponent(const std::string& what)
        : std::runtime_error("vertex mode exponent is not an integer: " + what) {}
};

/// kappa(m) in the contraction [b_m, b_-m] = -(h_a/sigma3) kappa(m):
/// `paper` keeps the bare normalization kappa = 1, `standard` carries the
/// conventional mode factor kappa(m) = m.  Only the latter closes the
/// Virasoro bracket; `calibrate` reports the comparison.
enum class BosonNorm { paper, standard };

struct BosonSpec {
    int color;  // 1, 2 or 3; selects h_color in the norm
};

/// A charge sector of a multi-boson Fock module: the boson list with the
/// zero-mode eigenvalue of each boson.  Immutable; shared by vectors.
class FockSpace {
public:
    FockSpace(std::vector<BosonSpec> bosons, std::vector<Scalar> charges, BosonNorm mode);

    std::size_t nbosons() const { return bosons_.size(); }
    int color(std::size_t b) const { return bosons_[b].color; }
    const Scalar& charge(std::size_t b) const { return charges_[b]; }
    BosonNorm mode() const { return mode_; }

    /// [b_1, b_-1] = -h_color/(h1 h2 h3)
    Scalar norm(std::size_t b) const;
    /// [b_m, b_-m] for m > 0
    Scalar contraction(std::size_t b, int m) const;

    std::shared_ptr<const FockSpace> shifted(const std::vector<Scalar>& delta) const;
    bool operator==(const FockSpace& o) const;

private:
    std::vector<BosonSpec> bosons_;
    std::vector<Scalar> charges_;
    BosonNorm mode_;
};

using SpacePtr = std::shared_ptr<const FockSpace>;
SpacePtr make_space(std::vector<BosonSpec> bosons, std::vector<Scalar> charges,
                    BosonNorm mode = BosonNorm::standard);

/// Basis monomial: one partition of creation modes per boson, parts sorted
/// descending.  The level is the total size of all partitions.
struct FockState {
    std::vector<std::vector<int>> parts;

    static FockState vacuum(std::size_t nbosons) { return {std::vector<std::vector<int>>(nbosons)}; }
    int level() const;
    bool operator<(const FockState& o) const { return parts < o.parts; }
    bool operator==(const FockState& o) const { return parts == o.parts; }
    std::string str() const;
};

/// Exact finite linear combination of basis states in one sector.
class FockVector {
public:
    explicit FockVector(SpacePtr space) : space_(std::move(space)) {}
    static FockVector basis(SpacePtr space, FockState s);
    static FockVector vacuum(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const std::map<FockState, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_level() const;

    void add_term(const FockState& s, const Scalar& c);
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const Scalar& c) const;
    FockVector& operator+=(const FockVector& o);
    bool operator==(const FockVector& o) const;

private:
    SpacePtr space_;
    std::map<FockState, Scalar> terms_;
};

/// Action of the single mode b_m of one boson: creation appends a part,
/// annihilation contracts against matching parts, b_0 multiplies by the
/// sector charge.
FockVector apply_boson_mode(const FockVector& v, std::size_t boson, int m);

/// (-1)^n prod_{i=0}^{n-1} (h + m + i), the derivative-mode factor.
Scalar derivative_mode_factor(int h, int n, int m);

/// A field with declared conformal weight and an exact mode action.  Modes
/// follow O(z) = sum O_m z^{-m-h}; composite modes use the normal-ordered
/// split with the left factor's weight.  Mode actions on basis states are
/// memoized per (sector, mode), which compounds through nested products.
class Field {
public:
    virtual ~Field() = default;
    virtual int weight() const = 0;
    FockVector apply_mode(int m, const FockVector& v) const;

protected:
    virtual FockVector compute_mode(int m, const FockVector& basis_vec) const = 0;
    virtual bool cache_modes() const { return true; }

private:
    FockVector mode_on_state(int m, const FockState& s, const SpacePtr& space) const;
    struct ModeKey {
        const FockSpace* space;
        int m;
        FockState s;
        bool operator<(const ModeKey& o) const {
            if (space != o.space) return space < o.space;
            if (m != o.m) return m < o.m;
            return s < o.s;
        }
    };
    mutable std::mutex mu_;
    mutable std::map<ModeKey, FockVector> cache_;
};
using FieldPtr = std::shared_ptr<const Field>;

FieldPtr boson_field(std::size_t boson);
FieldPtr derivative_field(FieldPtr f, int n);
FieldPtr nprod_field(FieldPtr left, FieldPtr right);
FieldPtr lin_field(std::vector<std::pair<Scalar, FieldPtr>> terms);

/// Finite sum of normal-ordered boson-mode monomials.  Canonical form:
/// within a monomial creation modes come first, then zero modes, then
/// annihilation modes, sorted by (boson, mode); monomials are merged and
/// ordered deterministically.
class NormalOrderedExpr {
public:
    using Mode = std::pair<std::size_t, int>;  // (boson, m)

    NormalOrderedExpr() = default;
    /// Normal order an arbitrary product of modes (left to right application
    /// order), expanding contractions as needed.
    static NormalOrderedExpr of_product(const FockSpace& space, const std::vector<Mode>& modes,
                                        const Scalar& coeff);
    static NormalOrderedExpr lone(const std::vector<Mode>& modes, const Scalar& coeff);

    NormalOrderedExpr operator+(const NormalOrderedExpr& o) const;
    NormalOrderedExpr operator*(const Scalar& c) const;
    bool operator==(const NormalOrderedExpr& o) const { return terms_ == o.terms_; }
    const std::map<std::vector<Mode>, Scalar>& terms() const { return terms_; }
    bool is_normal_ordered() const;

    FockVector apply(const FockVector& v) const;

private:
    std::map<std::vector<Mode>, Scalar> terms_;
};

/// Level-graded basis enumeration of one sector up to a bound, in the fixed
/// deterministic order (by level, then reverse-lexicographic partitions per
/// boson, then across bosons).
struct LevelBasis {
    SpacePtr space;
    int max_level = 0;
    std::vector<FockState> states;

    static LevelBasis build(SpacePtr space, int max_level);
    std::optional<std::size_t> index_of(const FockState& s) const;
};

/// Exact linear operator between two sectors with a fixed level shift
/// (grading): level l maps to level l + grading.  Columns are exact and
/// memoized; a level bound only matters when exporting matrix blocks or
/// composing snapshots under the truncation contract.
class TruncOp {
public:
    using ColumnFn = std::function<FockVector(const FockState&)>;

    TruncOp() = default;  // unusable until assigned
    TruncOp(SpacePtr src, SpacePtr dst, int grading, ColumnFn col);

    const SpacePtr& src() const { return src_; }
    const SpacePtr& dst() const { return dst_; }
    int grading() const { return grading_; }

    FockVector column(const FockState& s) const;  // memoized
    FockVector apply(const FockVector& v) const;

    static TruncOp identity(SpacePtr space);
    static TruncOp zero(SpacePtr src, SpacePtr dst, int grading);
    static TruncOp field_mode(SpacePtr space, FieldPtr f, int m);
    static TruncOp sum(const TruncOp& a, const TruncOp& b);
    static TruncOp scaled(const TruncOp& a, const Scalar& c);
    static TruncOp composed(const TruncOp& after, const TruncOp& first);
    static TruncOp commutator(const TruncOp& a, const TruncOp& b);

    bool is_zero_on(const LevelBasis& basis) const;
    bool equal_on(const LevelBasis& basis, const TruncOp& o) const;
    /// True iff the operator is c * identity on the basis; returns c.
    std::optional<Scalar> scalar_on(const LevelBasis& basis) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<FockState, FockVector> map;
    };
    SpacePtr src_, dst_;
    int grading_ = 0;
    ColumnFn col_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();  // shared across copies
};

/// Dense matrix snapshot of an operator on levels <= N, the export format
/// and the carrier of the truncation-aware commutator.
struct MatrixOp {
    LevelBasis src, dst;
    int grading = 0;
    // cols[j] lists (row index, value) of the image of src state j, with
    // entries beyond dst.max_level dropped; safe_level marks how far the
    // matrix is exact.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
    int safe_level = 0;

    static MatrixOp assemble(const TruncOp& op, int max_level);
};

/// AB - BA on levels <= N - max(|grading A|, |grading B|); throws
/// TruncationInsufficient when no level survives.
MatrixOp commutator_matrix(const MatrixOp& a, const MatrixOp& b, int max_level);

/// Vertex operator V[alpha](z) = T_alpha exp(alpha sum_{n<0} b_n/n z^-n)
/// exp(alpha sum_{n>0} b_n/n z^-n) across all bosons of a sector; the charge
/// of boson b shifts by alpha_b h_color/(h1 h2 h3).  Fourier blocks are
/// indexed by the naive z-power p (= level shift); the zero-mode power of z
/// is supplied externally as the calibrated offset.
class VertexOp {
public:
    VertexOp(SpacePtr src, std::vector<Scalar> alpha);

    const SpacePtr& src() const { return src_; }
    const SpacePtr& dst() const { return dst_; }
    const std::vector<Scalar>& alpha() const { return alpha_; }

    /// The block raising the level by p, as an exact operator.
    TruncOp block(int p) const;

private:
    SpacePtr src_, dst_;
    std::vector<Scalar> alpha_;
};

}  // namespace yforge
