#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/spectrum.hpp"

using namespace drg;

namespace {

void check_pq_identity(const IntersectionArray& ia) {
    Spectrum sp = spectrum_raw(ia);
    Eigenmatrices em = eigenmatrices(ia, sp);
    int d = ia.d();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            NFElem s(Rat(0));
            for (int l = 0; l <= d; ++l) s = s + em.P[i][l] * em.Q[l][j];
            NFElem want(i == j ? Rat(ia.n()) : Rat(0));
            CHECK(s == want);
        }
}

}  // namespace

TEST_CASE("sylvester graph spectrum") {
    auto ia = IntersectionArray::parse("{5, 4, 2; 1, 1, 4}");
    Spectrum sp = spectrum(ia);
    REQUIRE(sp.d() == 3);
    CHECK(!sp.field);
    CHECK(sp.thetas[0].to_rat() == 5);
    CHECK(sp.thetas[1].to_rat() == 2);
    CHECK(sp.thetas[2].to_rat() == -1);
    CHECK(sp.thetas[3].to_rat() == -3);
    CHECK(sp.mults == std::vector<Rat>{1, 16, 10, 9});
    CHECK(sp.cosines[1][0].to_rat() == 1);
    CHECK(sp.cosines[1][1].to_rat() == Rat(2, 5));
    CHECK(sp.cosines[1][2].to_rat() == Rat(-1, 20));
    CHECK(sp.cosines[1][3].to_rat() == Rat(-1, 5));

    Eigenmatrices em = eigenmatrices(ia, sp);
    CHECK(em.P[1][0].to_rat() == 1);
    CHECK(em.P[1][1].to_rat() == 2);
    CHECK(em.P[1][2].to_rat() == -1);
    CHECK(em.P[1][3].to_rat() == -2);
    CHECK(em.Q[1][0].to_rat() == 1);
    CHECK(em.Q[1][1].to_rat() == Rat(32, 5));
    CHECK(em.Q[1][2].to_rat() == -2);
    CHECK(em.Q[1][3].to_rat() == Rat(-27, 5));
    CHECK(!is_formally_self_dual(ia));

    KreinTensor q = krein(ia, sp);
    CHECK(q(1, 1, 1) == Rat(44, 5));
    CHECK(q(2, 1, 1) == Rat(176, 25));
    CHECK(q(1, 2, 3) == Rat(18, 5));
    CHECK(q(3, 3, 3) == 0);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            CHECK(q(0, i, j) == (i == j ? sp.mults[i] : Rat(0)));
    // m_h q^h_ij = m_i q^i_hj
    for (int h = 0; h <= 3; ++h)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                CHECK(sp.mults[h] * q(h, i, j) == sp.mults[i] * q(i, h, j));
}

TEST_CASE("pentagon has a quadratic field") {
    auto ia = IntersectionArray::parse("{2, 1; 1, 1}");
    Spectrum sp = spectrum(ia);
    REQUIRE(sp.field);
    CHECK(sp.field->degree() == 2);
    CHECK(sp.thetas[0].to_rat() == 2);
    CHECK(!sp.thetas[1].is_rational());
    CHECK(!sp.thetas[2].is_rational());
    // theta_1 theta_2 = -1, theta_1 + theta_2 = -1 (roots of x^2 + x - 1)
    CHECK((sp.thetas[1] * sp.thetas[2]).to_rat() == -1);
    CHECK((sp.thetas[1] + sp.thetas[2]).to_rat() == -1);
    CHECK(sp.thetas[1].sign() == 1);
    CHECK(sp.thetas[2].sign() == -1);
    CHECK(sp.mults == std::vector<Rat>{1, 2, 2});
    check_pq_identity(ia);
    // the 5-cycle is formally self-dual, so the Krein tensor is rational
    KreinTensor q = krein(ia, sp);
    CHECK(q.dim() == 3);
    CHECK(is_formally_self_dual(ia));
}

TEST_CASE("complete graph K4") {
    auto ia = IntersectionArray::parse("{3; 1}");
    Spectrum sp = spectrum(ia);
    CHECK(sp.thetas[0].to_rat() == 3);
    CHECK(sp.thetas[1].to_rat() == -1);
    CHECK(sp.mults == std::vector<Rat>{1, 3});
}

TEST_CASE("4-cube is formally self-dual with p = q") {
    auto ia = IntersectionArray::parse("{4, 3, 2, 1; 1, 2, 3, 4}");
    CHECK(is_formally_self_dual(ia));
    Spectrum sp = spectrum(ia);
    KreinTensor q = krein(ia, sp);
    const auto& p = ia.p();
    for (int h = 0; h <= 4; ++h)
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j)
                CHECK(q(h, i, j) == Rat(p(h, i, j)));
    check_pq_identity(ia);
}

TEST_CASE("bipartite diameter-5 array") {
    auto ia = IntersectionArray::parse("{55, 54, 50, 35, 10; 1, 5, 20, 45, 55}");
    Spectrum sp = spectrum(ia);
    CHECK(!sp.field);
    CHECK(sp.thetas[1].to_rat() == 20);
    CHECK(sp.thetas[2].to_rat() == 5);
    CHECK(sp.thetas[3].to_rat() == -5);
    CHECK(sp.mults == std::vector<Rat>{1, 132, 1617, 1617, 132, 1});
    KreinTensor q = krein(ia, sp);
    CHECK(q(3, 1, 1) == 0);
    CHECK(q(4, 1, 1) == 0);
    check_pq_identity(ia);
}

TEST_CASE("eigenvalue permutation reorders rows and blocks") {
    auto ia = IntersectionArray::parse("{5, 4, 2; 1, 1, 4}");
    Spectrum sp = spectrum(ia);
    std::vector<int> perm{0, 2, 3, 1};
    Eigenmatrices nat = eigenmatrices(ia, sp);
    Eigenmatrices prm = eigenmatrices(ia, sp, perm);
    for (int j = 0; j <= 3; ++j) {
        CHECK(prm.P[1][j] == nat.P[2][j]);
        CHECK(prm.P[3][j] == nat.P[1][j]);
    }
    KreinTensor nq = krein(ia, sp);
    KreinTensor pq = krein(ia, sp, perm);
    CHECK(pq(1, 1, 1) == nq(2, 2, 2));
    CHECK_THROWS(eigenmatrices(ia, sp, {0, 0, 1, 2}));
}

TEST_CASE("raw spectrum keeps fractional multiplicities") {
    // a parameter family member whose multiplicities are not integral
    auto ia = IntersectionArray::parse("{45, 40, 10; 1, 10, 36}");
    Spectrum sp = spectrum_raw(ia);
    CHECK(sp.thetas[1].to_rat() == 9);
    CHECK(sp.mults == std::vector<Rat>{1, Rat(115, 2), Rat(1350, 7), Rat(345, 14)});
    CHECK_THROWS_AS(spectrum(ia), InfeasibleError);
}
