#pragma once

#include <array>
#include <map>

#include "zpd/inflation.hpp"

namespace zpd {

struct MiddleWallMismatch : std::domain_error {
    MiddleWallMismatch() : std::domain_error("vertical pair does not share the middle wall") {}
};
struct InconsistentDecoration : std::domain_error {
    InconsistentDecoration() : std::domain_error("pants decoration is inconsistent") {}
};

// Standard horizontal pair-of-pants: legs carry the source defects
// (leg 1: M -> P on the west, leg 2: N -> Q on the east), the waist the
// inflated target. Five standard strings:
//   k0: M..P arc west of leg 1        k1: M..P arc east of leg 1
//   k2: P..Q arc over the top middle  k3: N..Q arc west of leg 2
//   k4: N..Q arc east of leg 2
// The waist objects are derived:
//   M_w = act_M(k0, m1, k1)           P_w = act_P(k0, p1, k1 - k2)
//   N_w = act_N(k3, n2, k4)           Q_w = act_Q(k2 + k3, q2, k4)
struct PantsH {
    WallObject m1, p1;  // leg-1 hole objects
    WallObject n2, q2;  // leg-2 hole objects
    std::array<Zp, 5> k;

    WallObject waist_m() const { return act(k[0], m1, k[1]); }
    WallObject waist_p() const { return act(k[0], p1, k[1] - k[2]); }
    WallObject waist_n() const { return act(k[3], n2, k[4]); }
    WallObject waist_q() const { return act(k[2] + k[3], q2, k[4]); }
};

// Standard vertical pair-of-pants: bottom hole (M -> N), top hole (N -> P),
// waist M -> P. Four standard strings:
//   k2: M..N arc west   k3: M..N arc east
//   k0: N..P arc west   k1: N..P arc east
// Derived boundary: M_w = act_M(k2, m1, k3), P_w = act_P(k0, p2, k1), and the
// middle strand requires n1 = act_N(k0 - k2, n2, k1 - k3).
struct PantsV {
    WallObject m1, n1;  // bottom hole objects
    WallObject n2, p2;  // top hole objects
    std::array<Zp, 4> k;

    WallObject waist_m() const { return act(k[2], m1, k[3]); }
    WallObject waist_p() const { return act(k[0], p2, k[1]); }
    bool consistent() const { return n1 == act(k[0] - k[2], n2, k[1] - k[3]); }
};

// The general-pants reduction of the horizontal normal form: strings
// (g0..g3, h0..h3) reduce onto the standard five with the coefficient
//   Omega_M(-h0,-g1) Omega_Q(h1,h2) Omega_N(h3,-(g3+h2)) Omega_Q(h3,g3+h2)
//   / Omega_P(h0,g1).
std::pair<Cyclotomic, std::array<Zp, 5>> normal_form_h(const Wall& M, const Wall& N,
                                                       const Wall& P, const Wall& Q,
                                                       const std::array<Zp, 4>& g,
                                                       const std::array<Zp, 4>& h);

// Vertical normal form: (g0..g3, h0, h1) reduce onto the standard four with
//   Omega_M(-h0,-g1) Omega_N(-h0,g1) / (Omega_P(h0,g3) Omega_N(h0,-g3)).
std::pair<Cyclotomic, std::array<Zp, 4>> normal_form_v(const Wall& M, const Wall& N,
                                                       const Wall& P,
                                                       const std::array<Zp, 4>& g, Zp h0,
                                                       Zp h1);

// Span of standard pants with fixed hole decorations and fixed waist
// decoration, the finite space the fusion projector acts on.
class HPantsSpace {
  public:
    using Key = std::array<int, 5>;
    using Elem = std::map<Key, Cyclotomic>;

    // d1 on leg 1, d2 on leg 2, target waist decoration from the inflated
    // target idempotent (one uniform object 4-tuple).
    HPantsSpace(const Defect& d1, const Defect& d2, const TubeElement4& target);

    const std::vector<Key>& basis() const { return basis_; }
    PrimeModulus modulus() const { return p_; }
    PantsH pants(const Key& key) const;

    // Gluing a tube element around a leg hole or the inflated target around
    // the waist; bilinear, and zero on decoration mismatch.
    Elem glue_leg(int leg, const TubeElement2& t, const Elem& x) const;
    Elem glue_waist(const TubeElement4& t, const Elem& x) const;
    // The absorption projector glue_waist . glue_leg1 . glue_leg2.
    Elem project(const Elem& x) const;

    long rank_and_trace(Cyclotomic* trace_out, std::vector<Elem>* image_basis) const;

  private:
    PrimeModulus p_;
    Defect d1_;
    Defect d2_;
    TubeElement4 target_;
    WallObject m1_, p1_, n2_, q2_;
    std::array<WallObject, 4> waist_;
    std::vector<Key> basis_;
};

class VPantsSpace {
  public:
    using Key = std::array<int, 4>;
    using Elem = std::map<Key, Cyclotomic>;

    VPantsSpace(const Defect& bottom, const Defect& top, const Defect& target);

    const std::vector<Key>& basis() const { return basis_; }
    PrimeModulus modulus() const { return p_; }
    PantsV pants(const Key& key) const;

    Elem glue_bottom(const TubeElement2& t, const Elem& x) const;
    Elem glue_top(const TubeElement2& t, const Elem& x) const;
    Elem glue_waist(const TubeElement2& t, const Elem& x) const;
    Elem project(const Elem& x) const;

    long rank_and_trace(Cyclotomic* trace_out, std::vector<Elem>* image_basis) const;

  private:
    PrimeModulus p_;
    Defect d1_;
    Defect d2_;
    Defect target_;
    WallObject m1_, n1_, n2_, p2_;
    std::vector<Key> basis_;
};

// One fused channel: a target defect with its exact multiplicity.
struct FusionEntry {
    Defect target;
    long multiplicity;
};

// Per-wall-fusion-component multiset of fused channels. Horizontal outcomes
// are keyed by the component pair (mu, nu); vertical outcomes use the single
// key (0, 0). Components where no target absorbs the sources are omitted.
struct FusionOutcome {
    Defect source1;
    Defect source2;
    bool horizontal = true;
    std::map<std::pair<int, int>, std::vector<FusionEntry>> components;

    // Sum of multiplicities over all components and targets.
    long total_multiplicity() const {
        long n = 0;
        for (const auto& [key, entries] : components)
            for (const auto& e : entries) n += e.multiplicity;
        return n;
    }
};

FusionOutcome fuse_horizontal(const Defect& d1, const Defect& d2);
FusionOutcome fuse_vertical(const Defect& bottom, const Defect& top);

// Explicit basis of the multiplicity space (image of the projector) for one
// fusion channel.
std::vector<HPantsSpace::Elem> pants_basis_h(const Defect& d1, const Defect& d2,
                                             const Defect& target, Zp mu, Zp nu);
std::vector<VPantsSpace::Elem> pants_basis_v(const Defect& bottom, const Defect& top,
                                             const Defect& target);

}  // namespace zpd
