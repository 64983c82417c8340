// Development search over the horizontal gluing phase conventions.
// The projector spaces are knob-independent and prebuilt once; stage A scans
// support patterns with the p=2 battery, stage B refines signs at p=3.
#include <iostream>
#include <memory>
#include <vector>

#include "zpd/pants.hpp"

using namespace zpd;

namespace zpd::detail {
extern int A1, A2, B1, B2, C1, C2, C5, C6, D1, D2, D4, D3, E1, E2, E3, E4, T0, T2, T5, T6,
    S1, S2, S3, S4;
}

namespace {

struct Probe {
    std::shared_ptr<HPantsSpace> space;
    long expected_rank;
};

std::vector<Probe> probes_p2, probes_p3;

void add_probe(std::vector<Probe>& dst, const Defect& d1, const Defect& d2, const Defect& cand,
               int mu, int nu, long expect) {
    PrimeModulus p = d1.modulus();
    auto t4 = inflate(cand, d1.bottom, d2.bottom, d1.top, d2.top, Zp(mu, p), Zp(nu, p));
    dst.push_back({std::make_shared<HPantsSpace>(d1, d2, t4), expect});
}

// All candidates for one fusion with the expected target list.
void add_fusion(std::vector<Probe>& dst, const Defect& d1, const Defect& d2,
                const std::map<std::pair<int, int>, std::vector<Defect>>& expect) {
    PrimeModulus p = d1.modulus();
    auto bf = wall_fuse(d1.bottom, d2.bottom);
    auto tf = wall_fuse(d1.top, d2.top);
    for (int mu = 0; mu < bf.components[0].index_set_size; ++mu)
        for (int nu = 0; nu < tf.components[0].index_set_size; ++nu) {
            auto it = expect.find({mu, nu});
            for (const auto& cand :
                 classified(bf.components[0].result, tf.components[0].result)) {
                long want = 0;
                if (it != expect.end())
                    for (const auto& t : it->second)
                        if (t == cand) want = 1;
                add_probe(dst, d1, d2, cand, mu, nu, want);
            }
        }
}

void build_probes() {
    std::cerr << "bp start\n";
    PrimeModulus p2(2);
    Wall F1 = Wall::F(Zp(1, p2)), X1 = Wall::X(Zp(1, p2));
    // sigma^x (x) m^c e^z = sigma^{x+z+c}
    for (int x = 0; x < 2; ++x)
        for (int c = 0; c < 2; ++c)
            for (int z = 0; z < 2; ++z)
                add_fusion(probes_p2, defect_by_labels(F1, X1, {Zp(x, p2)}),
                           defect_by_labels(X1, X1, {Zp(c, p2), Zp(z, p2)}),
                           {{{0, 0}, {defect_by_labels(F1, X1, {Zp(x + z + c, p2)})}}});
    // sigma^x sigma^z = sum_j e^{j+x+z} m^j
    for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 2; ++z) {
            std::vector<Defect> want;
            for (int j = 0; j < 2; ++j)
                want.push_back(defect_by_labels(X1, X1, {Zp(j, p2), Zp(j + x + z, p2)}));
            add_fusion(probes_p2, defect_by_labels(F1, X1, {Zp(x, p2)}),
                       defect_by_labels(F1, X1, {Zp(z, p2)}), {{{0, 0}, want}});
        }
    // X_1F_1(x) (x) X_1F_1(z): top walls fuse; Table III(f) row X_kF_r col
    // F_sX_n... here both sources are X/F so the cell is row X_kF_r col
    // F_sF_s-wait, use the k^{-1}s = rn case of X_kF_r x F_sX_n mirrored:
    // at p=2 the outcome is sum_alpha F-free: X_1F_1 x X_1F_1 has bottom
    // X(x)X = X_1 and top F(x)F = X_1: expected from Table III(f) row
    // X_kX_l... source walls (X1,F1),(X1,F1): row X_kF_r col F_sF_t is not
    // it either; this is row X_kF_r with column X_mF_t (part e, col X_mF_t):
    // cell: case km = r^{-1}t: oplus_alpha X_km X_km(alpha, mx+z-mr alpha).
    for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 2; ++z) {
            std::vector<Defect> want;
            for (int a = 0; a < 2; ++a)
                want.push_back(defect_by_labels(X1, X1, {Zp(a, p2), Zp(x + z + a, p2)}));
            add_fusion(probes_p2, defect_by_labels(X1, F1, {Zp(x, p2)}),
                       defect_by_labels(X1, F1, {Zp(z, p2)}), {{{0, 0}, want}});
        }

    std::cerr << "p2 done\n";
    PrimeModulus p3(3);
    {  // section II worked fusion
        int k = 2, s = 1, a = 1, z = 2;
        auto d1 = defect_by_labels(Wall::X(Zp(k, p3)), Wall::T(p3), {Zp(a, p3)});
        auto d2 = defect_by_labels(Wall::F(Zp(s, p3)), Wall::R(p3), {Zp(z, p3)});
        Zp kinv = zp_inv(Zp(k, p3));
        Wall Fks = Wall::F(kinv * Zp(s, p3));
        std::map<std::pair<int, int>, std::vector<Defect>> want;
        for (int nu = 0; nu < 3; ++nu) {
            Zp lab = Zp(z, p3) + Zp(s, p3) * (kinv * Zp(a, p3) - Zp(nu, p3));
            want[{0, nu}] = {defect_by_labels(Fks, Wall::R(p3), {lab})};
        }
        add_fusion(probes_p3, d1, d2, want);
    }
    std::cerr << "s2 done\n";
    {  // F_qX_l x X_mX_m = F_qm X_lm(z + m(x + qlc))
        int q = 1, l = 2, m = 2, x = 1, c = 2, z = 1;
        auto d1 = defect_by_labels(Wall::F(Zp(q, p3)), Wall::X(Zp(l, p3)), {Zp(x, p3)});
        auto d2 =
            defect_by_labels(Wall::X(Zp(m, p3)), Wall::X(Zp(m, p3)), {Zp(c, p3), Zp(z, p3)});
        add_fusion(probes_p3, d1, d2,
                   {{{0, 0},
                     {defect_by_labels(Wall::F(Zp(q * m, p3)), Wall::X(Zp(l * m, p3)),
                                       {Zp(z + m * (x + q * l * c), p3)})}}});
    }
    std::cerr << "fx done\n";
    {  // F_qX_l x F_sX_n, q^{-1}s = ln: oplus_alpha X_ln X_ln(alpha, nx+z-nq alpha)
        int q = 1, l = 2, s = 1, n = 2, x = 1, z = 2;
        auto d1 = defect_by_labels(Wall::F(Zp(q, p3)), Wall::X(Zp(l, p3)), {Zp(x, p3)});
        auto d2 = defect_by_labels(Wall::F(Zp(s, p3)), Wall::X(Zp(n, p3)), {Zp(z, p3)});
        std::vector<Defect> want;
        Wall Xln = Wall::X(Zp(l * n, p3));
        for (int a = 0; a < 3; ++a)
            want.push_back(
                defect_by_labels(Xln, Xln, {Zp(a, p3), Zp(n * x + z - n * q * a, p3)}));
        add_fusion(probes_p3, d1, d2, {{{0, 0}, want}});
    }
    std::cerr << "ff done\n";
    {  // X_kF_r(x) x X_mF_t(z), km = r^{-1}t: oplus_a X_km X_km(a, mx+z-mr a)
        int k = 1, r = 2, m = 2, t = 1, x = 2, z = 1;
        auto d1 = defect_by_labels(Wall::X(Zp(k, p3)), Wall::F(Zp(r, p3)), {Zp(x, p3)});
        auto d2 = defect_by_labels(Wall::X(Zp(m, p3)), Wall::F(Zp(t, p3)), {Zp(z, p3)});
        std::vector<Defect> want;
        Wall Xkm = Wall::X(Zp(k * m, p3));
        for (int a = 0; a < 3; ++a)
            want.push_back(
                defect_by_labels(Xkm, Xkm, {Zp(a, p3), Zp(m * x + z - m * r * a, p3)}));
        add_fusion(probes_p3, d1, d2, {{{0, 0}, want}});
    }
}

bool run(const std::vector<Probe>& probes) {
    for (const auto& pr : probes) {
        if (pr.space->basis().empty()) {
            if (pr.expected_rank != 0) return false;
            continue;
        }
        Cyclotomic tr = Cyclotomic::zero(pr.space->modulus());
        long rank = pr.space->rank_and_trace(&tr, nullptr);
        if (rank != pr.expected_rank) return false;
        if (!(tr == Cyclotomic(pr.space->modulus(), Rational(rank)))) return false;
    }
    return true;
}

}  // namespace

int main() {
    using namespace zpd::detail;
    build_probes();
    std::cout << "probes: p2=" << probes_p2.size() << " p3=" << probes_p3.size() << std::endl;

    int* search[] = {&A2, &B2, &C2, &C5, &C6, &D2, &D4, &D3, &E2, &E3, &E4,
                     &T0, &T2, &T5, &T6, &S1, &S2, &S3, &S4};
    const int NS = 19;
    // Fixed by the worked displays.
    A1 = 1; B1 = 1; C1 = 1; D1 = -1; E1 = -1;

    std::vector<std::vector<int>> survivors;
    for (long mask = 0; mask < (1L << NS); ++mask) {
        for (int i = 0; i < NS; ++i) *search[i] = (mask >> i) & 1;
        if (run(probes_p2)) {
            std::vector<int> pat(NS);
            for (int i = 0; i < NS; ++i) pat[i] = *search[i];
            survivors.push_back(pat);
        }
    }
    std::cout << "p2 survivors: " << survivors.size() << std::endl;

    long found = 0;
    for (const auto& pat : survivors) {
        std::vector<int> live;
        for (int i = 0; i < NS; ++i)
            if (pat[i]) live.push_back(i);
        for (long smask = 0; smask < (1L << live.size()); ++smask) {
            for (int i = 0; i < NS; ++i) *search[i] = pat[i];
            for (size_t j = 0; j < live.size(); ++j)
                if ((smask >> j) & 1) *search[live[j]] = -1;
            if (run(probes_p3)) {
                ++found;
                std::cout << "PASS";
                for (int i = 0; i < NS; ++i) std::cout << " " << *search[i];
                std::cout << std::endl;
                if (found > 40) return 0;
            }
        }
    }
    std::cout << "total " << found << std::endl;
    return 0;
}
