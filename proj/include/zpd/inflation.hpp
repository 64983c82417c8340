#pragma once

#include "zpd/tubes.hpp"

namespace zpd {

struct ComponentOutOfRange : std::domain_error {
    ComponentOutOfRange() : std::domain_error("fusion component index out of range") {}
};

// Basis annulus diagram with four radial wall strands. Reading around the
// annulus: M (bottom-left), N (bottom-right), Q (top-right), P (top-left).
// Four sector strings: w passes west (between M and P), tm over the top
// middle (P..Q), e east (N..Q), bm under the bottom middle (M..N).
// Outer objects are derived; the middle strings act with opposite signs on
// their two strands:
//   M: act(w, ., bm)   N: act(-bm, ., e)   P: act(w, ., -tm)   Q: act(tm, ., e)
struct Tube4 {
    WallObject inner_m, inner_n, inner_p, inner_q;
    Zp w, tm, e, bm;

    WallObject outer_m() const { return act(w, inner_m, bm); }
    WallObject outer_n() const { return act(-bm, inner_n, e); }
    WallObject outer_p() const { return act(w, inner_p, -tm); }
    WallObject outer_q() const { return act(tm, inner_q, e); }

    friend bool operator==(const Tube4& a, const Tube4& b) {
        return a.inner_m == b.inner_m && a.inner_n == b.inner_n && a.inner_p == b.inner_p &&
               a.inner_q == b.inner_q && a.w == b.w && a.tm == b.tm && a.e == b.e && a.bm == b.bm;
    }
    friend bool operator<(const Tube4& a, const Tube4& b);
    std::string to_string() const;
};

// Stacks `outer` around `inner`; sector strings add. The phase is the
// product over the four strands of the associator convention, with the
// middle strings entering through their signed actions.
std::pair<Cyclotomic, Tube4> tube4_compose(const Tube4& outer, const Tube4& inner);

class TubeElement4 {
  public:
    TubeElement4(Wall m, Wall n, Wall p, Wall q) : walls_{m, n, p, q} {}
    const std::vector<Wall>& walls() const { return walls_; }
    const std::map<Tube4, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Tube4& t, const Cyclotomic& c);
    friend bool operator==(const TubeElement4& a, const TubeElement4& b) {
        return a.walls_ == b.walls_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TubeElement4& a, const TubeElement4& b) { return !(a == b); }

  private:
    std::vector<Wall> walls_;
    std::map<Tube4, Cyclotomic> terms_;
};

TubeElement4 element4_compose(const TubeElement4& a, const TubeElement4& b);

// One split of a wall strand at a trivalent vertex: factor objects, the
// middle string inserted between them, and a cyclotomic weight.
struct VertexTerm {
    WallObject left;
    WallObject right;
    Zp mid;
    Cyclotomic coeff;
};

// Decomposition data of Tables II(a)/(b): how an object of W = M (x) N
// splits across the factor strands. `vertex` selects the bottom rule
// (part a, component index mu) or the top rule (part b, index nu).
enum class Vertex { Bottom, Top };
std::vector<VertexTerm> inflation_rule(const Wall& m, const Wall& n, Vertex vertex,
                                       const WallObject& obj, Zp g, Zp h, Zp comp);

// Rewrites a 2-string idempotent on W_b--W_t as a 4-string idempotent on the
// component (mu, nu) of the factorizations W_b = M (x) N, W_t = P (x) Q.
TubeElement4 inflate(const Defect& target, const Wall& m, const Wall& n, const Wall& p,
                     const Wall& q, Zp mu, Zp nu);

namespace detail {
// Test hook: corrupt a single inflation-rule phase or middle-string sign to
// demonstrate the sensitivity of the downstream checks. 0 = off.
extern int mutation_mode;
}  // namespace detail

}  // namespace zpd
