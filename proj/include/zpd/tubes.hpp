#pragma once

#include <map>
#include <string>
#include <vector>

#include "zpd/walls.hpp"

namespace zpd {

struct DecorationMismatch : std::domain_error {
    DecorationMismatch() : std::domain_error("tube decorations do not match") {}
};

// Basis annulus diagram with two radial wall strands (bottom, top) and two
// strings: g passes west, h passes east. Outer objects are derived,
// outer = act(g, inner, h) on each strand.
struct Tube2 {
    WallObject inner_bottom;
    WallObject inner_top;
    Zp g;
    Zp h;

    WallObject outer_bottom() const { return act(g, inner_bottom, h); }
    WallObject outer_top() const { return act(g, inner_top, h); }
    const Wall& bottom_wall() const { return inner_bottom.wall(); }
    const Wall& top_wall() const { return inner_top.wall(); }

    friend bool operator==(const Tube2& a, const Tube2& b) {
        return a.inner_bottom == b.inner_bottom && a.inner_top == b.inner_top && a.g == b.g &&
               a.h == b.h;
    }
    friend bool operator<(const Tube2& a, const Tube2& b) {
        if (!(a.inner_bottom == b.inner_bottom)) return a.inner_bottom < b.inner_bottom;
        if (!(a.inner_top == b.inner_top)) return a.inner_top < b.inner_top;
        if (a.g != b.g) return a.g < b.g;
        return a.h < b.h;
    }
    std::string to_string() const;
};

// Identity tube at an object pair.
Tube2 identity_tube(const WallObject& m, const WallObject& n);

// Stacks `outer` around `inner`. Requires outer's inner decoration to equal
// inner's outer decoration. Strings add; the phase is
// Omega_bottom(h0, g1) / Omega_top(h0, g1) with h0 the inner tube's east
// string and g1 the outer tube's west string.
std::pair<Cyclotomic, Tube2> tube_compose(const Tube2& outer, const Tube2& inner);

// Formal cyclotomic combination of basis tubes over one wall pair.
class TubeElement2 {
  public:
    TubeElement2(Wall bottom, Wall top) : bottom_(bottom), top_(top) {}
    static TubeElement2 zero(Wall bottom, Wall top) { return TubeElement2(bottom, top); }

    const Wall& bottom_wall() const { return bottom_; }
    const Wall& top_wall() const { return top_; }
    const std::map<Tube2, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Tube2& t, const Cyclotomic& c);
    TubeElement2 scaled(const Rational& r) const;
    TubeElement2 scaled(const Cyclotomic& c) const;
    friend TubeElement2 operator+(const TubeElement2& a, const TubeElement2& b);
    friend TubeElement2 operator-(const TubeElement2& a, const TubeElement2& b);
    friend bool operator==(const TubeElement2& a, const TubeElement2& b);
    friend bool operator!=(const TubeElement2& a, const TubeElement2& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Wall bottom_;
    Wall top_;
    std::map<Tube2, Cyclotomic> terms_;
};

// Bilinear extension of tube_compose; term pairs with mismatched decorations
// contribute zero. a is stacked outside b.
TubeElement2 element_compose(const TubeElement2& a, const TubeElement2& b);

// A classified binary interface defect: a primitive idempotent with its
// Table-style label tuple and representative object pair.
struct Defect {
    Wall bottom;
    Wall top;
    std::vector<Zp> labels;
    TubeElement2 idempotent;
    WallObject rep_bottom;
    WallObject rep_top;

    PrimeModulus modulus() const { return bottom.modulus(); }
    std::string to_string() const;
    friend bool operator<(const Defect& a, const Defect& b);
    friend bool operator==(const Defect& a, const Defect& b);
};

// Complete pairwise-inequivalent list of primitive idempotents for the wall
// pair, labelled per the idempotent catalogue.
std::vector<Defect> classify_defects(const Wall& bottom, const Wall& top);

// Memoized view of classify_defects (the catalogue is immutable).
const std::vector<Defect>& classified(const Wall& bottom, const Wall& top);

// Looks up a classified defect by its labels.
Defect defect_by_labels(const Wall& bottom, const Wall& top, const std::vector<Zp>& labels);

// Number of labels a defect of this wall pair carries (0, 1 or 2).
int defect_label_arity(const Wall& bottom, const Wall& top);

// True iff there is an invertible intertwiner between the two idempotents
// (u in e2*A*e1 and v in e1*A*e2 with v*u = e1, u*v = e2).
bool defect_equivalent(const Defect& e1, const Defect& e2);

// Dimensions of the simple two-sided ideals of the full annular category
// algebra, one per defect, largest first. Their sum is the algebra dimension.
std::vector<long> block_structure(const Wall& bottom, const Wall& top);

// All basis tubes between two object pairs (used by equivalence tests and
// the block decomposition).
std::vector<Tube2> hom_tubes(const WallObject& from_b, const WallObject& from_t,
                             const WallObject& to_b, const WallObject& to_t);

// All basis tubes of the wall pair.
std::vector<Tube2> all_tubes(const Wall& bottom, const Wall& top);

// dim e*A*e where A is the full tube algebra (1 for primitive idempotents).
long end_dimension(const Defect& d);

}  // namespace zpd
