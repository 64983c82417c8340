#include "zpd/pants.hpp"

#include <cassert>
#include <functional>

namespace zpd {

namespace detail {
// Horizontal gluing phase exponents (development calibration hook).
// Leg gluing: the tube's east string against the west-arc pre-content.
int A1 = 1, A2 = -1;  // leg 1 on M, P
int B1 = 1, B2 = -1;  // leg 2 on N, Q
// Waist gluing: each of the four sector strings against the standard-arc
// contents (after the legs), plus the self pairings among the four strings.
int C1 = 1, C2 = -1;   // (W, k1) on M, P
int C5 = 0, C6 = 0;    // (W, k0) on M, P
int D1 = -1, D2 = 1;   // (E, k3) on N, Q
int D4 = 0, D3 = 1;    // (E, k2) on N, Q
int E1 = -1, E2 = 1;   // (Bm, k4) on N, Q
int E3 = 0, E4 = 0;    // (Bm, k0) on M, P
int T0 = 0, T2 = 0;    // (Tm, k0) on P; (Tm, k4) on Q
int T5 = 0, T6 = 0;    // (Tm, k1) on P; (Tm, k3) on Q
int S1 = 0, S2 = 0;    // (W, Bm) on M; (W, Tm) on P
int S3 = 0, S4 = 0;    // (E, Bm) on N; (E, Tm) on Q
}

std::pair<Cyclotomic, std::array<Zp, 5>> normal_form_h(const Wall& M, const Wall& N,
                                                       const Wall& P, const Wall& Q,
                                                       const std::array<Zp, 4>& g,
                                                       const std::array<Zp, 4>& h) {
    Cyclotomic coeff = associator(M, -h[0], -g[1]) * associator(Q, h[1], h[2]) *
                       associator(N, h[3], -(g[3] + h[2])) * associator(Q, h[3], g[3] + h[2]) *
                       associator(P, h[0], g[1]).inv();
    std::array<Zp, 5> k{g[0] + h[0], g[1] + h[3], h[1] + h[3], g[2] - h[3], g[3] + h[2]};
    return {coeff, k};
}

std::pair<Cyclotomic, std::array<Zp, 4>> normal_form_v(const Wall& M, const Wall& N,
                                                       const Wall& P,
                                                       const std::array<Zp, 4>& g, Zp h0,
                                                       Zp h1) {
    Cyclotomic coeff = associator(M, -h0, -g[1]) * associator(N, -h0, g[1]) *
                       (associator(P, h0, g[3]) * associator(N, h0, -g[3])).inv();
    // Standard slots: k2 = g0 + h0, k3 = g1 + h1, k0 = g2 + h0, k1 = g3 + h1.
    std::array<Zp, 4> k{g[2] + h0, g[3] + h1, g[0] + h0, g[1] + h1};
    return {coeff, k};
}

namespace {

int val(Zp z) { return z.value(); }

Cyclotomic apow(const Cyclotomic& c, int e) {
    if (e == 0) return Cyclotomic::one(c.modulus());
    if (e == 1) return c;
    if (e == -1) return c.inv();
    Cyclotomic r = Cyclotomic::one(c.modulus());
    Cyclotomic b = e > 0 ? c : c.inv();
    for (int i = 0; i < (e > 0 ? e : -e); ++i) r = r * b;
    return r;
}

template <typename Elem, typename Key>
void accumulate(Elem& out, const Key& k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = out.find(k);
    if (it == out.end())
        out.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

// Exact rank/trace/image of a projector given its action on a finite basis.
template <typename Key, typename Elem>
long projector_rank(PrimeModulus p, const std::vector<Key>& basis,
                    const std::function<Elem(const Elem&)>& apply, Cyclotomic* trace_out,
                    std::vector<Elem>* image_basis) {
    std::map<Key, int> index;
    for (const auto& k : basis) index.emplace(k, int(index.size()));
    Cyclotomic trace = Cyclotomic::zero(p);
    std::vector<std::pair<int, std::vector<Cyclotomic>>> rows;
    std::vector<Elem> picked;
    for (const auto& b : basis) {
        Elem unit;
        unit.emplace(b, Cyclotomic::one(p));
        Elem img = apply(unit);
        auto self = img.find(b);
        if (self != img.end()) trace += self->second;
        std::vector<Cyclotomic> v(basis.size(), Cyclotomic::zero(p));
        for (const auto& [k, c] : img) v[index.at(k)] = c;
        bool enlarged = false;
        for (auto& [piv, row] : rows) {
            if (v[piv].is_zero()) continue;
            Cyclotomic f = v[piv];
            for (size_t j = 0; j < v.size(); ++j)
                if (!row[j].is_zero()) v[j] = v[j] - f * row[j];
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                piv = int(j);
                break;
            }
        if (piv >= 0) {
            Cyclotomic inv = v[piv].inv();
            for (auto& c : v)
                if (!c.is_zero()) c = c * inv;
            rows.push_back({piv, std::move(v)});
            enlarged = true;
        }
        if (enlarged && image_basis) picked.push_back(img);
    }
    if (trace_out) *trace_out = trace;
    if (image_basis) *image_basis = std::move(picked);
    return long(rows.size());
}

}  // namespace

HPantsSpace::HPantsSpace(const Defect& d1, const Defect& d2, const TubeElement4& target)
    : p_(d1.modulus()),
      d1_(d1),
      d2_(d2),
      target_(target),
      m1_(d1.rep_bottom),
      p1_(d1.rep_top),
      n2_(d2.rep_bottom),
      q2_(d2.rep_top),
      waist_{d1.rep_bottom, d1.rep_bottom, d1.rep_bottom, d1.rep_bottom} {
    if (target.is_zero()) throw InconsistentDecoration();
    // The inflated target carries one uniform object 4-tuple.
    const Tube4& t0 = target.terms().begin()->first;
    waist_ = {t0.inner_m, t0.inner_n, t0.inner_p, t0.inner_q};
    for (const auto& [t, c] : target.terms())
        if (!(t.inner_m == waist_[0]) || !(t.inner_n == waist_[1]) ||
            !(t.inner_p == waist_[2]) || !(t.inner_q == waist_[3]))
            throw InconsistentDecoration();
    const int P = p_.value();
    for (int k0 = 0; k0 < P; ++k0)
        for (int k1 = 0; k1 < P; ++k1)
            for (int k2 = 0; k2 < P; ++k2)
                for (int k3 = 0; k3 < P; ++k3)
                    for (int k4 = 0; k4 < P; ++k4) {
                        PantsH x = pants({k0, k1, k2, k3, k4});
                        if (x.waist_m() == waist_[0] && x.waist_n() == waist_[1] &&
                            x.waist_p() == waist_[2] && x.waist_q() == waist_[3])
                            basis_.push_back({k0, k1, k2, k3, k4});
                    }
}

PantsH HPantsSpace::pants(const Key& key) const {
    return PantsH{m1_, p1_, n2_, q2_,
                  {Zp(key[0], p_), Zp(key[1], p_), Zp(key[2], p_), Zp(key[3], p_),
                   Zp(key[4], p_)}};
}

HPantsSpace::Elem HPantsSpace::glue_leg(int leg, const TubeElement2& t, const Elem& x) const {
    Elem out;
    const WallObject& ob = leg == 1 ? m1_ : n2_;
    const WallObject& ot = leg == 1 ? p1_ : q2_;
    const Wall& wb = ob.wall();
    const Wall& wt = ot.wall();
    for (const auto& [key, cx] : x) {
        for (const auto& [tube, ct] : t.terms()) {
            if (!(tube.outer_bottom() == ob) || !(tube.outer_top() == ot)) continue;
            if (!(tube.inner_bottom == ob) || !(tube.inner_top == ot)) continue;
            Key nk = key;
            Cyclotomic phase = Cyclotomic::one(p_);
            if (leg == 1) {
                // The east string wraps around the hole and crosses the
                // west-arc content; the west string merges freely.
                Zp k0(key[0], p_);
                phase = apow(associator(wb, k0, tube.h), detail::A1) *
                        apow(associator(wt, k0, tube.h), detail::A2);
                nk[0] = val(k0 + tube.g);
                nk[1] = val(Zp(key[1], p_) + tube.h);
            } else {
                Zp k3(key[3], p_);
                phase = apow(associator(wb, k3, tube.h), detail::B1) *
                        apow(associator(wt, k3, tube.h), detail::B2);
                nk[3] = val(k3 + tube.g);
                nk[4] = val(Zp(key[4], p_) + tube.h);
            }
            accumulate(out, nk, phase * cx * ct);
        }
    }
    return out;
}

HPantsSpace::Elem HPantsSpace::glue_waist(const TubeElement4& t, const Elem& x) const {
    Elem out;
    const Wall& N = n2_.wall();
    const Wall& Q = q2_.wall();
    for (const auto& [key, cx] : x) {
        PantsH st = pants(key);
        std::array<WallObject, 4> w{st.waist_m(), st.waist_n(), st.waist_p(), st.waist_q()};
        for (const auto& [tube, ct] : t.terms()) {
            if (!(tube.inner_m == w[0]) || !(tube.inner_n == w[1]) || !(tube.inner_p == w[2]) ||
                !(tube.inner_q == w[3]))
                continue;
            Zp k1(key[1], p_), k2(key[2], p_), k3(key[3], p_), k4(key[4], p_);
            // The east string slides in past k3 and over the top-middle
            // content; the bottom-middle string decomposes onto
            // (k1, k2, -k3) against the merged east content.
            Zp k0(key[0], p_);
            const Wall& M = m1_.wall();
            const Wall& P = p1_.wall();
            Cyclotomic phase = apow(associator(M, tube.w, k1), detail::C1) *
                               apow(associator(P, tube.w, k1), detail::C2) *
                               apow(associator(M, tube.w, k0), detail::C5) *
                               apow(associator(P, tube.w, k0), detail::C6) *
                               apow(associator(N, tube.e, k3), detail::D1) *
                               apow(associator(Q, tube.e, k3), detail::D2) *
                               apow(associator(N, tube.e, k2), detail::D4) *
                               apow(associator(Q, tube.e, k2), detail::D3) *
                               apow(associator(N, tube.bm, k4), detail::E1) *
                               apow(associator(Q, tube.bm, k4), detail::E2) *
                               apow(associator(M, tube.bm, k0), detail::E3) *
                               apow(associator(P, tube.bm, k0), detail::E4) *
                               apow(associator(P, tube.tm, k0), detail::T0) *
                               apow(associator(Q, tube.tm, k4), detail::T2) *
                               apow(associator(P, tube.tm, k1), detail::T5) *
                               apow(associator(Q, tube.tm, k3), detail::T6) *
                               apow(associator(M, tube.w, tube.bm), detail::S1) *
                               apow(associator(P, tube.w, tube.tm), detail::S2) *
                               apow(associator(N, tube.e, tube.bm), detail::S3) *
                               apow(associator(Q, tube.e, tube.tm), detail::S4);
            Key nk{val(Zp(key[0], p_) + tube.w), val(k1 + tube.bm), val(k2 + tube.tm + tube.bm),
                   val(k3 - tube.bm), val(k4 + tube.e)};
            accumulate(out, nk, phase * cx * ct);
        }
    }
    return out;
}

HPantsSpace::Elem HPantsSpace::project(const Elem& x) const {
    return glue_waist(target_, glue_leg(1, d1_.idempotent, glue_leg(2, d2_.idempotent, x)));
}

long HPantsSpace::rank_and_trace(Cyclotomic* trace_out, std::vector<Elem>* image_basis) const {
    return projector_rank<Key, Elem>(
        p_, basis_, [this](const Elem& x) { return project(x); }, trace_out, image_basis);
}

VPantsSpace::VPantsSpace(const Defect& bottom, const Defect& top, const Defect& target)
    : p_(bottom.modulus()),
      d1_(bottom),
      d2_(top),
      target_(target),
      m1_(bottom.rep_bottom),
      n1_(bottom.rep_top),
      n2_(top.rep_bottom),
      p2_(top.rep_top) {
    if (!(bottom.top == top.bottom)) throw MiddleWallMismatch();
    const int P = p_.value();
    for (int k0 = 0; k0 < P; ++k0)
        for (int k1 = 0; k1 < P; ++k1)
            for (int k2 = 0; k2 < P; ++k2)
                for (int k3 = 0; k3 < P; ++k3) {
                    PantsV x = pants({k0, k1, k2, k3});
                    if (x.consistent() && x.waist_m() == target.rep_bottom &&
                        x.waist_p() == target.rep_top)
                        basis_.push_back({k0, k1, k2, k3});
                }
}

PantsV VPantsSpace::pants(const Key& key) const {
    return PantsV{m1_, n1_, n2_, p2_,
                  {Zp(key[0], p_), Zp(key[1], p_), Zp(key[2], p_), Zp(key[3], p_)}};
}

VPantsSpace::Elem VPantsSpace::glue_bottom(const TubeElement2& t, const Elem& x) const {
    Elem out;
    const Wall& M = m1_.wall();
    const Wall& N = n1_.wall();
    for (const auto& [key, cx] : x)
        for (const auto& [tube, ct] : t.terms()) {
            if (!(tube.outer_bottom() == m1_) || !(tube.outer_top() == n1_)) continue;
            if (!(tube.inner_bottom == m1_) || !(tube.inner_top == n1_)) continue;
            // The east string crosses the west arc k2.
            Zp k2(key[2], p_);
            Cyclotomic phase = associator(M, k2, tube.h) * associator(N, k2, tube.h).inv();
            Key nk{key[0], key[1], val(k2 + tube.g), val(Zp(key[3], p_) + tube.h)};
            accumulate(out, nk, phase * cx * ct);
        }
    return out;
}

VPantsSpace::Elem VPantsSpace::glue_top(const TubeElement2& t, const Elem& x) const {
    Elem out;
    const Wall& N = n2_.wall();
    const Wall& P = p2_.wall();
    for (const auto& [key, cx] : x)
        for (const auto& [tube, ct] : t.terms()) {
            if (!(tube.outer_bottom() == n2_) || !(tube.outer_top() == p2_)) continue;
            if (!(tube.inner_bottom == n2_) || !(tube.inner_top == p2_)) continue;
            Zp k0(key[0], p_);
            Cyclotomic phase = associator(N, k0, tube.h) * associator(P, k0, tube.h).inv();
            Key nk{val(k0 + tube.g), val(Zp(key[1], p_) + tube.h), key[2], key[3]};
            accumulate(out, nk, phase * cx * ct);
        }
    return out;
}

VPantsSpace::Elem VPantsSpace::glue_waist(const TubeElement2& t, const Elem& x) const {
    Elem out;
    const Wall& M = m1_.wall();
    const Wall& N = n1_.wall();
    const Wall& P = p2_.wall();
    for (const auto& [key, cx] : x) {
        PantsV st = pants(key);
        for (const auto& [tube, ct] : t.terms()) {
            if (!(tube.inner_bottom == st.waist_m()) || !(tube.inner_top == st.waist_p()))
                continue;
            Zp k1(key[1], p_), k3(key[3], p_);
            // The west string decomposes across the middle strand, crossing
            // the two east arcs; the east string merges freely.
            Cyclotomic phase = associator(M, tube.g, k3) * associator(N, tube.g, k3).inv() *
                               associator(N, tube.g, k1) * associator(P, tube.g, k1).inv();
            Key nk{val(Zp(key[0], p_) + tube.g), val(k1 + tube.h), val(Zp(key[2], p_) + tube.g),
                   val(k3 + tube.h)};
            accumulate(out, nk, phase * cx * ct);
        }
    }
    return out;
}

VPantsSpace::Elem VPantsSpace::project(const Elem& x) const {
    return glue_waist(target_.idempotent,
                      glue_bottom(d1_.idempotent, glue_top(d2_.idempotent, x)));
}

long VPantsSpace::rank_and_trace(Cyclotomic* trace_out, std::vector<Elem>* image_basis) const {
    return projector_rank<Key, Elem>(
        p_, basis_, [this](const Elem& x) { return project(x); }, trace_out, image_basis);
}

FusionOutcome fuse_horizontal(const Defect& d1, const Defect& d2) {
    if (d1.modulus() != d2.modulus()) throw ModulusMismatch();
    PrimeModulus p = d1.modulus();
    auto bfuse = wall_fuse(d1.bottom, d2.bottom);
    auto tfuse = wall_fuse(d1.top, d2.top);
    const Wall& wb = bfuse.components[0].result;
    const Wall& wt = tfuse.components[0].result;
    const auto& candidates = classified(wb, wt);

    FusionOutcome out{d1, d2, true, {}};
    for (int mu = 0; mu < bfuse.components[0].index_set_size; ++mu) {
        for (int nu = 0; nu < tfuse.components[0].index_set_size; ++nu) {
            std::vector<FusionEntry> entries;
            for (const auto& cand : candidates) {
                TubeElement4 t4 =
                    inflate(cand, d1.bottom, d2.bottom, d1.top, d2.top, Zp(mu, p), Zp(nu, p));
                HPantsSpace space(d1, d2, t4);
                if (space.basis().empty()) continue;
                long rank = space.rank_and_trace(nullptr, nullptr);
                if (rank > 0) entries.push_back({cand, rank});
            }
            if (!entries.empty()) out.components[{mu, nu}] = std::move(entries);
        }
    }
    return out;
}

FusionOutcome fuse_vertical(const Defect& bottom, const Defect& top) {
    if (!(bottom.top == top.bottom)) throw MiddleWallMismatch();
    const auto& candidates = classified(bottom.bottom, top.top);
    FusionOutcome out{bottom, top, false, {}};
    std::vector<FusionEntry> entries;
    for (const auto& cand : candidates) {
        VPantsSpace space(bottom, top, cand);
        if (space.basis().empty()) continue;
        long rank = space.rank_and_trace(nullptr, nullptr);
        if (rank > 0) entries.push_back({cand, rank});
    }
    if (!entries.empty()) out.components[{0, 0}] = std::move(entries);
    return out;
}

std::vector<HPantsSpace::Elem> pants_basis_h(const Defect& d1, const Defect& d2,
                                             const Defect& target, Zp mu, Zp nu) {
    TubeElement4 t4 = inflate(target, d1.bottom, d2.bottom, d1.top, d2.top, mu, nu);
    HPantsSpace space(d1, d2, t4);
    std::vector<HPantsSpace::Elem> image;
    space.rank_and_trace(nullptr, &image);
    return image;
}

std::vector<VPantsSpace::Elem> pants_basis_v(const Defect& bottom, const Defect& top,
                                             const Defect& target) {
    VPantsSpace space(bottom, top, target);
    std::vector<VPantsSpace::Elem> image;
    space.rank_and_trace(nullptr, &image);
    return image;
}

}  // namespace zpd
