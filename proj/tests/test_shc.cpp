#include "doctest.h"

#include "yforge/shc.hpp"

using namespace yforge;
using K = SHGen::Kind;

namespace {

TSeries one_plus_t_times(const Scalar& x, int order) {
    TSeries s = TSeries::zero(order);
    s.at(0) = Scalar(1);
    if (order >= 1) s.at(1) = x;
    return s;
}

Scalar subst_h_zero(const Scalar& s) {
    return s.subst(SYM_H1, Scalar(0)).subst(SYM_H2, Scalar(0));
}

}  // namespace

TEST_CASE("phi series") {
    int order = 6;
    auto phis = phi_coeffs(3, 3, order);

    SUBCASE("phi_0 = t h + t^2 h^2/2 + ... (geometric-log oracle)") {
        for (int j = 1; j <= order; ++j)
            CHECK(phis[0][j] == hbar(3).pow(static_cast<std::uint32_t>(j)) * Scalar(Rat(1, j)));
        CHECK(phis[0][0].is_zero());
    }
    SUBCASE("h -> 0 kills every phi_l") {
        for (auto& phi : phis)
            for (int j = 0; j <= order; ++j) CHECK(subst_h_zero(phi[j]).is_zero());
    }
    SUBCASE("re-exponentiation reproduces the defining ratio") {
        SymId a = sym("a");
        int lmax = 3;
        TSeries expo = TSeries::zero(order);
        for (int l = 0; l <= lmax; ++l) {
            Scalar sign(l % 2 == 0 ? -1 : 1);
            expo = expo + phis[static_cast<std::size_t>(l)] *
                              (sign * Scalar::var(a).pow(static_cast<std::uint32_t>(l)));
        }
        TSeries lhs = expo.exp();
        TSeries rhs = one_plus_t_times(Scalar::var(a) - hbar(3), order) /
                      one_plus_t_times(Scalar::var(a), order);
        // agreement in all a-degrees <= lmax
        for (int j = 0; j <= order; ++j)
            for (int d = 0; d <= lmax; ++d) {
                Poly l = lhs[j].is_polynomial() ? lhs[j].num().coeff_of(a, static_cast<std::uint32_t>(d)) : Poly();
                Poly r = rhs[j].is_polynomial() ? rhs[j].num().coeff_of(a, static_cast<std::uint32_t>(d)) : Poly();
                CHECK(Poly::equal(l, r));
            }
    }
}

TEST_CASE("Phi series") {
    int order = 7;
    auto Phis = Phi_coeffs(3, order);

    SUBCASE("the a-independent part has no t^1 term") {
        CHECK(Phis[0][1].is_zero());
        CHECK(Phis[0][2].is_zero());
    }
    SUBCASE("leading coefficient of Phi_l is (l+1)(l+2) sigma3 at t^{l+3}") {
        for (int l = 0; l <= 3; ++l) {
            auto& s = Phis[static_cast<std::size_t>(l)];
            for (int j = 0; j <= std::min(order, l + 2); ++j) CHECK(s[j].is_zero());
            if (l + 3 <= order) CHECK(s[l + 3] == sigma3() * Scalar((l + 1) * (l + 2)));
        }
    }
    SUBCASE("h1 = h2 = 0 kills Phi") {
        for (auto& s : Phis)
            for (int j = 0; j <= order; ++j) CHECK(subst_h_zero(s[j]).is_zero());
    }
}

TEST_CASE("B elements as nested-commutator words") {
    SHElement f10 = SHElement::gen({K::F1, 0, 0});
    SHElement f11 = SHElement::gen({K::F1, 1, 0});
    SHElement fm10 = SHElement::gen({K::Fm1, 0, 0});
    SHElement fm11 = SHElement::gen({K::Fm1, 1, 0});

    CHECK(B_element(-1) == f10);
    CHECK(B_element(-2) == sh_word_commutator(f11, f10));
    CHECK(B_element(1) == fm10);
    CHECK(B_element(2) == sh_word_commutator(fm10, fm11));
    CHECK(B_element(3) ==
          sh_word_commutator(sh_word_commutator(fm10, fm11), fm11) * Scalar(Rat(1, 2)));
    CHECK(B_element(0) == sh_word_commutator(f11, fm10));
}

TEST_CASE("coproduct table") {
    SUBCASE("central and Heisenberg generators are primitive") {
        SHGen c03{K::C, 0, 3};
        SHTensor d = coproduct_c(c03, 3);
        SHTensor expect(2);
        expect.add({{c03}, {}}, Scalar(1));
        expect.add({{}, {c03}}, Scalar(1));
        CHECK(d == expect);

        SHGen b2{K::B, 2, 0};
        SHTensor db = coproduct_c(b2, 3);
        SHTensor expectb(2);
        expectb.add({{b2}, {}}, Scalar(1));
        expectb.add({{}, {b2}}, Scalar(1));
        CHECK(db == expectb);
    }
    SUBCASE("B_0 picks up the central cross terms") {
        SHTensor d = coproduct_c({K::B, 0, 0}, 3);
        SHTensor expect(2);
        expect.add({{SHGen{K::B, 0, 0}}, {}}, Scalar(1));
        expect.add({{}, {SHGen{K::B, 0, 0}}}, Scalar(1));
        for (int k = 1; k <= 3; ++k) {
            SHGen c0{K::C, 0, k};
            expect.add({{c0}, {c0}}, hbar(k));
        }
        CHECK(d == expect);
    }
    SUBCASE("f_{0,1} carries the Heisenberg tail") {
        int tail = 4;
        SHTensor d = coproduct_c({K::F0, 1, 0}, tail);
        CHECK(d.terms().size() == static_cast<std::size_t>(2 + tail));
        Scalar tail2 = d.terms().at({{SHGen{K::B, 2, 0}}, {SHGen{K::B, -2, 0}}});
        CHECK(tail2 == sigma3() * Scalar(2));
    }
    SUBCASE("unsupported generators are rejected") {
        CHECK_THROWS_AS(coproduct_c({K::F0, 2, 0}, 2), UnsupportedGenerator);
        CHECK_THROWS_AS(coproduct_c({K::F1, 0, 0}, 2), UnsupportedGenerator);
    }
}

TEST_CASE("coassociativity on the generating set") { CHECK(check_coassociativity(3)); }

TEST_CASE("specialization of the central values") {
    SymId m3 = sym("mu3_1");
    Scalar mu = Scalar::var(m3);
    SUBCASE("(0,0,1): powers of the single mu") {
        CentralValues cv = specialize_r(0, 0, 1, 3, {{{}, {}, {mu}}});
        CHECK(cv.at(3, 0) == Scalar(1));
        CHECK(cv.at(3, 1) == mu);
        CHECK(cv.at(3, 2) == mu * mu);
        CHECK(cv.at(1, 0).is_zero());
        CHECK(cv.at(2, 2).is_zero());
    }
    SUBCASE("(0,0,0): everything vanishes") {
        CentralValues cv = specialize_r(0, 0, 0, 2, {{{}, {}, {}}});
        for (int k = 1; k <= 3; ++k)
            for (int i = 0; i <= 2; ++i) CHECK(cv.at(k, i).is_zero());
    }
    SUBCASE("(1,1,0): singleton power sums") {
        SymId m1 = sym("mu1_1"), m2 = sym("mu2_1");
        CentralValues cv =
            specialize_r(1, 1, 0, 2, {{{Scalar::var(m1)}, {Scalar::var(m2)}, {}}});
        CHECK(cv.at(1, 1) == Scalar::var(m1));
        CHECK(cv.at(2, 1) == Scalar::var(m2));
        CHECK(cv.at(3, 1).is_zero());
    }
}

TEST_CASE("the V_{0,0,1} module") {
    SymId m = sym("mu");
    Scalar mu = Scalar::var(m);
    ShcRep rep = fock_rep(3, mu, 4);
    LevelBasis basis = LevelBasis::build(rep.space, 4);
    FockVector vac = FockVector::vacuum(rep.space);

    SUBCASE("f_{0,1} kills the vacuum") { CHECK(rep.f01.apply(vac).is_zero()); }
    SUBCASE("f_{0,1} b_{-1}|0> = -mu b_{-1}|0>") {
        FockVector v = apply_boson_mode(vac, 0, -1);
        CHECK(rep.f01.apply(v) == v * (-mu));
    }
    SUBCASE("[f_{1,0}, f_{-1,0}] = G_0 = 1/(h1 h2)") {
        auto s = g_comm(rep, 0, 0).scalar_on(basis);
        REQUIRE(s.has_value());
        CHECK(*s == Scalar(1) / (hbar(1) * hbar(2)));
    }
    SUBCASE("G_1 acts on the vacuum by -mu/(h1 h2)") {
        FockVector v = g_comm(rep, 1, 0).apply(vac);
        CHECK(v == vac * (-(mu / (hbar(1) * hbar(2)))));
    }
    SUBCASE("relation suite passes") {
        for (auto& r : check_relations_on_rep(rep, 4, 4)) {
            INFO(r.name);
            CHECK(r.pass);
        }
    }
    SUBCASE("Heisenberg subalgebra") {
        for (auto& r : check_heisenberg(rep, 3, 3)) {
            INFO(r.name);
            CHECK(r.pass);
        }
    }
    SUBCASE("generating identity: low orders, f01 recovery, f02 ladder") {
        GenIdentityReport g = check_generating_identity(rep, 4);
        INFO(g.detail);
        CHECK(g.low_orders_zero);
        CHECK(g.f01_matches);
        CHECK(g.f02_relation_ok);
    }
}

TEST_CASE("tensor modules") {
    SymId m2 = sym("mu2_1"), m3 = sym("mu3_1");
    Scalar mu2 = Scalar::var(m2), mu3 = Scalar::var(m3);

    SUBCASE("m = 1 reduces to the single-boson module") {
        ShcRep single = fock_rep(3, mu3, 2);
        ShcRep tens = tensor_rep({3}, {mu3}, 2);
        LevelBasis basis = LevelBasis::build(single.space, 3);
        CHECK(tens.f01.equal_on(basis, single.f01));
    }
    SUBCASE("colors (2,3): f_{0,1} equals the displayed two-boson expression") {
        ShcRep rep = tensor_rep({2, 3}, {mu2, mu3}, 2);
        LevelBasis basis = LevelBasis::build(rep.space, 3);
        // independent transcription: both single-boson pieces plus the tail
        SpacePtr sp = rep.space;
        Scalar s3 = sigma3();
        TruncOp display(sp, sp, 0, [sp, mu2, mu3, s3](const FockState& s) {
            FockVector out = f01_single(sp, 0, mu2).column(s);
            out += f01_single(sp, 1, mu3).column(s);
            FockVector unit = FockVector::basis(sp, s);
            for (int l = 1; l <= s.level(); ++l) {
                FockVector v = apply_boson_mode(unit, 0, l);   // b^(2)_l
                if (v.is_zero()) continue;
                out += apply_boson_mode(v, 1, -l) * (s3 * Scalar(l));  // b^(3)_{-l}
            }
            return out;
        });
        CHECK(rep.f01.equal_on(basis, display));
    }
    SUBCASE("colors (3,3): relation closure") {
        SymId n3 = sym("mu3_2");
        ShcRep rep = tensor_rep({3, 3}, {mu3, Scalar::var(n3)}, 2);
        for (auto& r : check_relations_on_rep(rep, 2, 2)) {
            INFO(r.name);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("w-mode rewriting of the two-boson f_{0,1}") {
    WRewriteReport rep = check_w_rewriting(2);
    CHECK(rep.is_scalar);
    CHECK_FALSE(rep.sector_constant.is_zero());
}
