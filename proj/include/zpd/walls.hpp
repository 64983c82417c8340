#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpd/arith.hpp"

namespace zpd {

// The six domain-wall families of vec(Z/p). X and F carry a unit parameter;
// F0 is its own kind, distinct from F_q with q a unit.
enum class WallKind { T, L, R, F0, X, F };

class Wall {
  public:
    Wall(WallKind kind, PrimeModulus p) : kind_(kind), param_(0, p) {
        if (kind == WallKind::X || kind == WallKind::F)
            throw std::domain_error("X/F walls need a parameter");
    }
    Wall(WallKind kind, Zp param) : kind_(kind), param_(param) {
        if (kind != WallKind::X && kind != WallKind::F)
            throw std::domain_error("only X/F walls carry a parameter");
        if (param.value() == 0) throw std::domain_error("X/F wall parameter must be a unit");
    }
    static Wall T(PrimeModulus p) { return Wall(WallKind::T, p); }
    static Wall L(PrimeModulus p) { return Wall(WallKind::L, p); }
    static Wall R(PrimeModulus p) { return Wall(WallKind::R, p); }
    static Wall F0(PrimeModulus p) { return Wall(WallKind::F0, p); }
    static Wall X(Zp k) { return Wall(WallKind::X, k); }
    static Wall F(Zp q) { return Wall(WallKind::F, q); }

    WallKind kind() const { return kind_; }
    Zp param() const { return param_; }
    PrimeModulus modulus() const { return PrimeModulus(param_.modulus()); }
    // Exponent weight of the associator: 0 except for F_q where Omega(g,h) = omega^{qgh}.
    Zp twist() const { return kind_ == WallKind::F ? param_ : Zp(0, modulus()); }

    friend bool operator==(const Wall& a, const Wall& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }
    friend bool operator!=(const Wall& a, const Wall& b) { return !(a == b); }
    friend bool operator<(const Wall& a, const Wall& b) {
        if (a.param_.modulus() != b.param_.modulus())
            return a.param_.modulus() < b.param_.modulus();
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        return a.param_ < b.param_;
    }

    std::string to_string() const;
    static std::optional<Wall> parse(const std::string& text, PrimeModulus p);

  private:
    WallKind kind_;
    Zp param_;
};

// Simple object of a wall: a pair (a,b) for T, a single residue for L, R, X_k,
// and the unique object * for F0, F_q.
class WallObject {
  public:
    static WallObject pair(const Wall& w, Zp a, Zp b);
    static WallObject single(const Wall& w, Zp a);
    static WallObject star(const Wall& w);

    const Wall& wall() const { return wall_; }
    bool is_star() const { return labels_.empty(); }
    const std::vector<Zp>& labels() const { return labels_; }

    friend bool operator==(const WallObject& a, const WallObject& b) {
        return a.wall_ == b.wall_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const WallObject& a, const WallObject& b) { return !(a == b); }
    friend bool operator<(const WallObject& a, const WallObject& b);

    std::string to_string() const;

  private:
    WallObject(const Wall& w, std::vector<Zp> labels) : wall_(w), labels_(std::move(labels)) {}
    Wall wall_;
    std::vector<Zp> labels_;
};

// All simple objects of a wall: p^2 for T, p for L/R/X_k, one for F0/F_q.
std::vector<WallObject> simple_objects(const Wall& w);

// T, L, R, F0, X_k (k unit), F_q (q unit): 4 + 2(p-1) walls.
std::vector<Wall> enumerate_walls(PrimeModulus p);

// Two-sided Z/p action by the west string g and east string h:
//   T: (a,b) -> (a+g, b+h);  L: a -> a+h;  R: a -> a+g;
//   X_k: a -> a+g+kh;  F0, F_q: * -> *.
WallObject act(Zp g, const WallObject& m, Zp h);

// Associator phase Omega_W(g,h): 1 for T, L, R, F0, X_k; omega^{qgh} for F_q.
Cyclotomic associator(const Wall& w, Zp g, Zp h);

namespace detail {
// Test hook: shifts the F_q associator exponent to demonstrate that a wrong
// twist is detected downstream. 0 = off.
extern int associator_twist_delta;
}  // namespace detail

// One component of a wall fusion. `index_set_size` is p exactly when the
// product carries a factor p (multiplicity indexed by Z/p), else 1.
struct WallFusionComponent {
    Wall result;
    int index_set_size;
};

struct WallFusionDecomposition {
    Wall bottom;
    Wall top;
    std::vector<WallFusionComponent> components;
    // Total number of component indices (1 or p).
    int multiplicity() const {
        int n = 0;
        for (const auto& c : components) n += c.index_set_size;
        return n;
    }
};

// The multiplication table of domain walls (Table II layout: bottom factor
// indexes the row, top factor the column).
WallFusionDecomposition wall_fuse(const Wall& m, const Wall& n);

}  // namespace zpd
