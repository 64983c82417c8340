// Development diagnostic: reports which wall 4-tuples fail inflation idempotency.
#include <iostream>

#include "zpd/inflation.hpp"

using namespace zpd;

int main() {
    PrimeModulus p2(2);
    auto walls = enumerate_walls(p2);
    for (const auto& m : walls)
        for (const auto& n : walls)
            for (const auto& p : walls)
                for (const auto& q : walls) {
                    auto bfuse = wall_fuse(m, n);
                    auto tfuse = wall_fuse(p, q);
                    const Wall& wb = bfuse.components[0].result;
                    const Wall& wt = tfuse.components[0].result;
                    for (const auto& d : classify_defects(wb, wt)) {
                        for (int mu = 0; mu < bfuse.components[0].index_set_size; ++mu)
                            for (int nu = 0; nu < tfuse.components[0].index_set_size; ++nu) {
                                auto e4 = inflate(d, m, n, p, q, Zp(mu, p2), Zp(nu, p2));
                                if (!(element4_compose(e4, e4) == e4)) {
                                    std::cout << m.to_string() << " (x) " << n.to_string()
                                              << " / " << p.to_string() << " (x) "
                                              << q.to_string() << "  target "
                                              << d.to_string() << " mu=" << mu << " nu=" << nu
                                              << "\n";
                                }
                            }
                    }
                }
    return 0;
}
