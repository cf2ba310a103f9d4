#include "doctest.h"

#include "yforge/fock.hpp"

using namespace yforge;

namespace {

SpacePtr one_boson(int color, BosonNorm mode = BosonNorm::standard, Scalar q = Scalar(0)) {
    return make_space({{color}}, {q}, mode);
}

FockState state1(std::vector<int> parts) { return FockState{{std::move(parts)}}; }

}  // namespace

TEST_CASE("boson commutation values") {
    SUBCASE("same boson, color 3, modes (1,-1), paper mode") {
        auto sp = one_boson(3, BosonNorm::paper);
        // [b_1, b_-1] = -h3/(h1 h2 h3) = -1/(h1 h2)
        CHECK(sp->contraction(0, 1) == -(Scalar(1) / (hbar(1) * hbar(2))));
    }
    SUBCASE("standard mode carries the mode factor") {
        auto sp = one_boson(3);
        CHECK(sp->contraction(0, 2) == -(Scalar(2) / (hbar(1) * hbar(2))));
    }
    SUBCASE("distinct bosons commute") {
        auto sp = make_space({{3}, {3}}, {Scalar(0), Scalar(0)});
        auto e = NormalOrderedExpr::of_product(*sp, {{0, 1}, {1, -1}}, Scalar(1)) +
                 NormalOrderedExpr::of_product(*sp, {{1, -1}, {0, 1}}, Scalar(-1));
        CHECK(e == NormalOrderedExpr());
    }
    SUBCASE("mode sum must vanish: [b_2, b_-1] = 0") {
        auto sp = one_boson(3);
        auto e = NormalOrderedExpr::of_product(*sp, {{0, 2}, {0, -1}}, Scalar(1)) +
                 NormalOrderedExpr::of_product(*sp, {{0, -1}, {0, 2}}, Scalar(-1));
        CHECK(e == NormalOrderedExpr());
    }
}

TEST_CASE("mode application on states") {
    auto sp = one_boson(3);
    FockVector vac = FockVector::vacuum(sp);

    SUBCASE("b_1 kills the vacuum") { CHECK(apply_boson_mode(vac, 0, 1).is_zero()); }
    SUBCASE("b_-2 creates the partition (2)") {
        FockVector v = apply_boson_mode(vac, 0, -2);
        CHECK(v == FockVector::basis(sp, state1({2})));
    }
    SUBCASE("b_1 b_-1 |0> = -1/(h1 h2) |0>") {
        FockVector v = apply_boson_mode(apply_boson_mode(vac, 0, -1), 0, 1);
        CHECK(v == FockVector::vacuum(sp) * (-(Scalar(1) / (hbar(1) * hbar(2)))));
    }
    SUBCASE("charge mismatch is an error") {
        auto sp2 = one_boson(3, BosonNorm::standard, hbar(1));
        CHECK_THROWS_AS(FockVector::vacuum(sp) + FockVector::vacuum(sp2), ChargeMismatch);
    }
}

TEST_CASE("derivative-mode factors") {
    CHECK(derivative_mode_factor(1, 0, 7) == Scalar(1));
    // (db)_m = -(m+1) b_m
    CHECK(derivative_mode_factor(1, 1, 3) == Scalar(-4));
    // (d^2 b)_0 = (1)(2) b_0
    CHECK(derivative_mode_factor(1, 2, 0) == Scalar(2));
}

TEST_CASE("composite-field modes") {
    SymId q = sym("q");
    auto sp = one_boson(3, BosonNorm::standard, Scalar::var(q));
    FieldPtr b = boson_field(0);
    FieldPtr bb = nprod_field(b, b);
    FockVector vac = FockVector::vacuum(sp);

    SUBCASE("(bb)_0 on the vacuum is the squared zero mode") {
        FockVector v = bb->apply_mode(0, vac);
        CHECK(v == vac * Scalar::var(q).pow(2));
    }
    SUBCASE("(bb)_{-1} on the vacuum: mode bookkeeping oracle") {
        // only b_{-1} b_0 and b_0 b_{-1} contribute: 2 q b_{-1}|0>
        FockVector v = bb->apply_mode(-1, vac);
        CHECK(v == FockVector::basis(sp, state1({1})) * (Scalar::var(q) * Scalar(2)));
    }
    SUBCASE("(bb)_m annihilates the charge-0 vacuum for m >= 1") {
        auto sp0 = one_boson(3);
        FieldPtr b0 = boson_field(0);
        FieldPtr bb0 = nprod_field(b0, b0);
        for (int m = 1; m <= 3; ++m) CHECK(bb0->apply_mode(m, FockVector::vacuum(sp0)).is_zero());
    }
    SUBCASE("derivative field weight bookkeeping") {
        FieldPtr db = derivative_field(b, 1);
        CHECK(db->weight() == 2);
        // (db)_{-1} |0> = -(1 + (-1)) b_{-1}|0> = 0
        CHECK(db->apply_mode(-1, vac).is_zero());
        // (db)_{-2} |0> = -(1 + (-2)) b_{-2}|0> = b_{-2}|0>
        CHECK(db->apply_mode(-2, vac) == FockVector::basis(sp, state1({2})));
    }
}

TEST_CASE("normal ordering") {
    auto sp = one_boson(3);
    SUBCASE("already-ordered input is identity, reordering is idempotent") {
        std::vector<NormalOrderedExpr::Mode> modes{{0, -2}, {0, -1}, {0, 1}};
        auto e1 = NormalOrderedExpr::of_product(*sp, modes, Scalar(1));
        CHECK(e1.is_normal_ordered());
        CHECK(e1 == NormalOrderedExpr::lone(modes, Scalar(1)));
    }
    SUBCASE("swapping b_1 b_-1 produces the contraction") {
        auto e = NormalOrderedExpr::of_product(*sp, {{0, 1}, {0, -1}}, Scalar(1));
        auto expect = NormalOrderedExpr::lone({{0, -1}, {0, 1}}, Scalar(1)) +
                      NormalOrderedExpr::lone({}, sp->contraction(0, 1));
        CHECK(e == expect);
        CHECK(e.is_normal_ordered());
    }
    SUBCASE("normal ordering commutes with application") {
        std::vector<NormalOrderedExpr::Mode> modes{{0, 2}, {0, -2}, {0, 1}, {0, -1}};
        auto e = NormalOrderedExpr::of_product(*sp, modes, Scalar(1));
        FockVector v = FockVector::basis(sp, state1({1}));
        // direct right-to-left application of the unordered word
        FockVector direct = v;
        for (auto it = modes.rbegin(); it != modes.rend(); ++it)
            direct = apply_boson_mode(direct, it->first, it->second);
        CHECK(e.apply(v) == direct);
    }
}

TEST_CASE("level basis enumeration") {
    auto sp1 = one_boson(3);
    CHECK(LevelBasis::build(sp1, 4).states.size() == 12);  // 1+1+2+3+5
    auto sp2 = make_space({{2}, {3}}, {Scalar(0), Scalar(0)});
    CHECK(LevelBasis::build(sp2, 3).states.size() == 18);  // 1+2+5+10
}

TEST_CASE("truncated operators and the matrix commutator") {
    SymId q = sym("q");
    auto sp = one_boson(3, BosonNorm::standard, Scalar::var(q));
    FieldPtr b = boson_field(0);

    SUBCASE("[b_1, b_-1] is the contraction times the identity") {
        TruncOp b1 = TruncOp::field_mode(sp, b, 1);
        TruncOp bm1 = TruncOp::field_mode(sp, b, -1);
        TruncOp c = TruncOp::commutator(b1, bm1);
        LevelBasis basis = LevelBasis::build(sp, 3);
        auto s = c.scalar_on(basis);
        REQUIRE(s.has_value());
        CHECK(*s == sp->contraction(0, 1));
    }
    SUBCASE("creation modes commute") {
        TruncOp a = TruncOp::field_mode(sp, b, -1);
        TruncOp c = TruncOp::field_mode(sp, b, -2);
        CHECK(TruncOp::commutator(a, c).is_zero_on(LevelBasis::build(sp, 3)));
    }
    SUBCASE("matrix commutator honors the truncation contract") {
        MatrixOp b1 = MatrixOp::assemble(TruncOp::field_mode(sp, b, 1), 4);
        MatrixOp bm1 = MatrixOp::assemble(TruncOp::field_mode(sp, b, -1), 4);
        MatrixOp c = commutator_matrix(b1, bm1, 4);
        CHECK(c.safe_level == 3);
        MatrixOp b2 = MatrixOp::assemble(TruncOp::field_mode(sp, b, 2), 0);
        MatrixOp bm2 = MatrixOp::assemble(TruncOp::field_mode(sp, b, -2), 0);
        CHECK_THROWS_AS(commutator_matrix(b2, bm2, 0), TruncationInsufficient);
    }
    SUBCASE("truncation consistency: N and N+2 agree on shared levels") {
        FieldPtr bb = nprod_field(b, b);
        MatrixOp small = MatrixOp::assemble(TruncOp::field_mode(sp, bb, 0), 2);
        MatrixOp large = MatrixOp::assemble(TruncOp::field_mode(sp, bb, 0), 4);
        for (std::size_t j = 0; j < small.src.states.size(); ++j) {
            auto jj = large.src.index_of(small.src.states[j]);
            REQUIRE(jj.has_value());
            REQUIRE(small.cols[j].size() == large.cols[*jj].size());
            for (std::size_t k = 0; k < small.cols[j].size(); ++k) {
                CHECK(small.dst.states[small.cols[j][k].first] ==
                      large.dst.states[large.cols[*jj][k].first]);
                CHECK(small.cols[j][k].second == large.cols[*jj][k].second);
            }
        }
    }
}

TEST_CASE("vertex operator blocks") {
    SymId q = sym("q");
    auto sp = one_boson(3, BosonNorm::standard, Scalar::var(q));

    SUBCASE("alpha = 0 is the identity in block 0, zero elsewhere") {
        VertexOp v(sp, {Scalar(0)});
        LevelBasis basis = LevelBasis::build(sp, 3);
        CHECK(v.block(0).equal_on(basis, TruncOp::identity(sp)));
        CHECK(v.block(1).is_zero_on(basis));
        CHECK(v.block(-1).is_zero_on(basis));
    }
    SUBCASE("charge shift is alpha h_color / sigma3") {
        SymId a = sym("alpha");
        VertexOp v(sp, {Scalar::var(a)});
        CHECK(v.dst()->charge(0) ==
              Scalar::var(q) + Scalar::var(a) * hbar(3) / sigma3());
        // block 0 on the highest-weight vector has leading coefficient 1
        FockVector img = v.block(0).column(FockState::vacuum(1));
        CHECK(img == FockVector::vacuum(v.dst()));
    }
    SUBCASE("level-1 creation coefficient is -alpha") {
        SymId a = sym("alpha");
        VertexOp v(sp, {Scalar::var(a)});
        FockVector img = v.block(1).column(FockState::vacuum(1));
        CHECK(img == FockVector::basis(v.dst(), state1({1})) * (-Scalar::var(a)));
    }
    SUBCASE("blocks restrict correctly on excited states") {
        SymId a = sym("alpha");
        VertexOp v(sp, {Scalar::var(a)});
        // block -1 on b_{-1}|q>: the single annihilation term (alpha/1) c(1)
        FockVector img = v.block(-1).column(state1({1}));
        Scalar expect = Scalar::var(a) * sp->contraction(0, 1);
        CHECK(img == FockVector::vacuum(v.dst()) * expect);
    }
}
