#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zpd/inflation.hpp"

using namespace zpd;

namespace {

// Every inflated idempotent must stay idempotent in the 4-string algebra,
// and distinct components must compose to zero.
void check_wall_tuple(const Wall& m, const Wall& n, const Wall& p, const Wall& q) {
    PrimeModulus pm = m.modulus();
    auto bfuse = wall_fuse(m, n);
    auto tfuse = wall_fuse(p, q);
    const Wall& wb = bfuse.components[0].result;
    const Wall& wt = tfuse.components[0].result;
    int bsize = bfuse.components[0].index_set_size;
    int tsize = tfuse.components[0].index_set_size;
    for (const auto& d : classify_defects(wb, wt)) {
        std::vector<TubeElement4> infl;
        for (int mu = 0; mu < bsize; ++mu)
            for (int nu = 0; nu < tsize; ++nu)
                infl.push_back(inflate(d, m, n, p, q, Zp(mu, pm), Zp(nu, pm)));
        for (size_t i = 0; i < infl.size(); ++i) {
            CHECK(element4_compose(infl[i], infl[i]) == infl[i]);
            for (size_t j = 0; j < infl.size(); ++j)
                if (j != i) CHECK(element4_compose(infl[i], infl[j]).is_zero());
        }
    }
}

}  // namespace

TEST_CASE("worked inflations from the text") {
    PrimeModulus p3(3);
    int k = 2, s = 1;
    Wall Xk = Wall::X(Zp(k, p3)), Fs = Wall::F(Zp(s, p3));
    Wall T = Wall::T(p3), R = Wall::R(p3);

    // Target F_{k^{-1}s}-R(z) inflated along X_k (x) F_s and T (x) R carries
    // the object (0, nu) on the top-left T strand.
    Wall Fks = Wall::F(zp_inv(Zp(k, p3)) * Zp(s, p3));
    auto target = defect_by_labels(Fks, R, {Zp(2, p3)});
    for (int nu = 0; nu < 3; ++nu) {
        auto e4 = inflate(target, Xk, Fs, T, R, Zp(0, p3), Zp(nu, p3));
        REQUIRE(!e4.is_zero());
        for (const auto& [t, c] : e4.terms()) {
            CHECK(t.inner_p == WallObject::pair(T, Zp(0, p3), Zp(nu, p3)));
            CHECK(t.inner_m == WallObject::single(Xk, Zp(0, p3)));
            CHECK(t.inner_q == WallObject::single(R, Zp(0, p3)));
            CHECK(t.w == Zp(0, p3));
            CHECK(t.bm == Zp(0, p3));
        }
    }

    // T-T defect (alpha, beta) into T (x) T at (mu, nu): objects
    // ((0,mu),(0,0),(alpha,nu),(0,beta)).
    int alpha = 1, beta = 2, mu = 2, nu = 1;
    auto tt = defect_by_labels(T, T, {Zp(alpha, p3), Zp(beta, p3)});
    auto e4 = inflate(tt, T, T, T, T, Zp(mu, p3), Zp(nu, p3));
    REQUIRE(e4.terms().size() == 1);
    const auto& [t, c] = *e4.terms().begin();
    CHECK(t.inner_m == WallObject::pair(T, Zp(0, p3), Zp(mu, p3)));
    CHECK(t.inner_n == WallObject::pair(T, Zp(0, p3), Zp(0, p3)));
    CHECK(t.inner_p == WallObject::pair(T, Zp(alpha, p3), Zp(nu, p3)));
    CHECK(t.inner_q == WallObject::pair(T, Zp(0, p3), Zp(beta, p3)));

    // R (x) L -> T inflation inserts (1/p) sum_k omega^{mu k} with middle
    // string k at the bottom vertex.
    Wall L = Wall::L(p3);
    auto rt = defect_by_labels(T, T, {Zp(0, p3), Zp(0, p3)});
    auto rl = inflate(rt, R, L, T, T, Zp(1, p3), Zp(0, p3));
    bool saw_mid = false;
    for (const auto& [t4, c4] : rl.terms())
        if (t4.bm.value() != 0) saw_mid = true;
    CHECK(saw_mid);
}

TEST_CASE("inflated idempotents are idempotent and orthogonal, p = 2") {
    PrimeModulus p2(2);
    auto walls = enumerate_walls(p2);
    for (const auto& m : walls)
        for (const auto& n : walls)
            for (const auto& p : walls)
                for (const auto& q : walls) check_wall_tuple(m, n, p, q);
}

TEST_CASE("inflated idempotents are idempotent and orthogonal, p = 3 slice") {
    PrimeModulus p3(3);
    auto walls = enumerate_walls(p3);
    // Deterministic slice covering every (M, N) and every (P, Q) combination.
    for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = 0; j < walls.size(); ++j) {
            check_wall_tuple(walls[i], walls[j], walls[(i + 3) % walls.size()],
                             walls[(j + 5) % walls.size()]);
            check_wall_tuple(walls[(i + 1) % walls.size()], walls[(j + 2) % walls.size()],
                             walls[i], walls[j]);
        }
}
