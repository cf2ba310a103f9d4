#include "doctest.h"

#include "yforge/geom.hpp"
#include "yforge/shc.hpp"

using namespace yforge;

namespace {

Scalar sv(const std::string& name) { return Scalar::var(sym(name)); }

}  // namespace

TEST_CASE("psi eigen series") {
    SUBCASE("n = 0, r = (0,0,1): geometric series in the framing root") {
        ChernData cd;
        cd.mu[2].push_back(sv("gmu"));
        TSeries s = psi_eigen_series(cd, 3);
        CHECK(s[0] == Scalar(1));
        CHECK(s[1] == hbar(3));
        CHECK(s[2] == hbar(3) * sv("gmu"));
        CHECK(s[3] == hbar(3) * sv("gmu") * sv("gmu"));
    }
    SUBCASE("empty data is the constant series") {
        ChernData cd;
        TSeries s = psi_eigen_series(cd, 4);
        CHECK(s == TSeries::one(4));
    }
    SUBCASE("one tautological root: leading correction -2 sigma3 at z^-3") {
        ChernData cd;
        cd.lam.push_back(sv("glx"));
        TSeries s = psi_eigen_series(cd, 3);
        CHECK(s[1].is_zero());
        CHECK(s[2].is_zero());
        CHECK(s[3] == -2 * sigma3());
    }
}

TEST_CASE("cartan conjugation factor") {
    SUBCASE("no roots") { CHECK(cartan_conj_factor({}, 3) == TSeries::one(3)); }
    SUBCASE("single root matches the psi series lambda part") {
        TSeries s = cartan_conj_factor({sv("glx")}, 4);
        CHECK(s[1].is_zero());
        CHECK(s[2].is_zero());
        CHECK(s[3] == -2 * sigma3());
        CHECK(s[4] == -6 * sigma3() * sv("glx"));
    }
    SUBCASE("multiplicative under disjoint union") {
        std::vector<Scalar> a{sv("ga1")}, b{sv("gb1"), sv("gb2")};
        std::vector<Scalar> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(cartan_conj_factor(both, 4) ==
              cartan_conj_factor(a, 4) * cartan_conj_factor(b, 4));
    }
}

TEST_CASE("restriction identity for the tautological class") {
    CHECK(check_fl(1, 0, {0, 0, 1}, 4));
    CHECK(check_fl(0, 2, {1, 1, 0}, 4));  // n1 = 0 is trivial
    CHECK(check_fl(2, 1, {1, 0, 0}, 3));
}

TEST_CASE("euler switch identity") {
    CHECK(check_euler_switch(1, {1, 0, 0}));
    CHECK(check_euler_switch(0, {0, 0, 0}));
    CHECK(check_euler_switch(2, {0, 1, 1}));
    CHECK(check_euler_switch(1, {1, 1, 1}));
}

TEST_CASE("critical locus checker") {
    SUBCASE("zero representation is critical") {
        CHECK(check_critical(QuiverRep::zero(3, {0, 0, 1})));
    }
    SUBCASE("every library instance is critical") {
        for (auto& rep : critical_sample_library()) {
            INFO(rep.name);
            CHECK(check_critical(rep));
        }
        CHECK(critical_sample_library().size() >= 20);
    }
    SUBCASE("generic representation is not critical") {
        QuiverRep rep = QuiverRep::zero(2, {0, 0, 1});
        rep.B1.at(0, 1) = 1;
        rep.B2.at(1, 0) = 1;  // [B1, B2] != 0 with no IJ correction
        CHECK_FALSE(check_critical(rep));
        CHECK_FALSE(check_critical(off_critical_witness()));
    }
}

TEST_CASE("stability checkers") {
    SUBCASE("cyclic vector at n = 1") {
        QuiverRep rep = QuiverRep::zero(1, {0, 0, 1});
        rep.I12.at(0, 0) = 1;
        CHECK(stab_n(rep));
        CHECK(stab_d(rep));
    }
    SUBCASE("no framing vectors, n >= 1") {
        QuiverRep rep = QuiverRep::zero(2, {0, 0, 1});
        CHECK_FALSE(stab_n(rep));
        CHECK_FALSE(stab_d(rep));
    }
    SUBCASE("Jordan block with a seed column spans") {
        QuiverRep rep = QuiverRep::zero(3, {0, 0, 1});
        for (int i = 1; i < 3; ++i) rep.B2.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
        rep.I12.at(0, 0) = 1;
        CHECK(stab_n(rep));
        CHECK(stab_d(rep));
    }
    SUBCASE("equivalence on the critical library") {
        for (auto& rep : critical_sample_library()) {
            INFO(rep.name);
            CHECK(stab_n(rep) == stab_d(rep));
        }
    }
    SUBCASE("off-critical witness separates the conditions") {
        QuiverRep rep = off_critical_witness();
        CHECK(stab_n(rep));
        CHECK_FALSE(stab_d(rep));
    }
}

TEST_CASE("quiver json round trip") {
    QuiverRep rep = off_critical_witness();
    rep.J12.at(0, 1) = Rat(-3, 7);
    std::string text = quiver_to_json(rep);
    QuiverRep back = quiver_from_json(text);
    CHECK(back.n == rep.n);
    CHECK(back.r == rep.r);
    CHECK(back.B3 == rep.B3);
    CHECK(back.J12 == rep.J12);
    CHECK(quiver_to_json(back) == text);
}

TEST_CASE("vacuum eigenvalue of the G series matches the geometric series") {
    // fock side: V_{0,0,1} with symbolic mu; geometric side: n = 0, r3 = 1
    SymId m = sym("gmu");
    Scalar mu = Scalar::var(m);
    ShcRep rep = fock_rep(3, mu, 4);
    FockVector vac = FockVector::vacuum(rep.space);
    ChernData cd;
    cd.mu[2].push_back(mu);
    TSeries geo = psi_eigen_series(cd, 5);
    // 1 - sigma3 sum G_l t^{l+1} with z = -1/t, so u^k picks up (-1)^k
    for (int l = 0; l <= 4; ++l) {
        FockVector img = g_comm(rep, l, 0).apply(vac);
        Scalar gl;
        for (auto& [s, c] : img.terms()) gl = c;
        Scalar expected = geo[l + 1] * Scalar((l + 1) % 2 == 0 ? 1 : -1) * (-sigma3()).inverse();
        CHECK(gl == expected);
    }
}
