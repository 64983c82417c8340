#include "zpd/tubes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <set>

namespace zpd {

std::string Tube2::to_string() const {
    return "[" + inner_bottom.to_string() + "|" + inner_top.to_string() + "; g=" +
           std::to_string(g.value()) + ", h=" + std::to_string(h.value()) + "]";
}

Tube2 identity_tube(const WallObject& m, const WallObject& n) {
    PrimeModulus p = m.wall().modulus();
    return Tube2{m, n, Zp(0, p), Zp(0, p)};
}

std::pair<Cyclotomic, Tube2> tube_compose(const Tube2& outer, const Tube2& inner) {
    if (!(outer.inner_bottom == inner.outer_bottom()) || !(outer.inner_top == inner.outer_top()))
        throw DecorationMismatch();
    Zp h0 = inner.h;  // inner tube's east string
    Zp g1 = outer.g;  // outer tube's west string
    Cyclotomic phase = associator(inner.bottom_wall(), h0, g1) *
                       associator(inner.top_wall(), h0, g1).inv();
    Tube2 result{inner.inner_bottom, inner.inner_top, inner.g + outer.g, inner.h + outer.h};
    return {phase, result};
}

void TubeElement2::add(const Tube2& t, const Cyclotomic& c) {
    if (!(t.bottom_wall() == bottom_) || !(t.top_wall() == top_))
        throw DecorationMismatch();
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TubeElement2 TubeElement2::scaled(const Rational& r) const {
    TubeElement2 out(bottom_, top_);
    if (r == 0) return out;
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, c.scaled(r));
    return out;
}

TubeElement2 TubeElement2::scaled(const Cyclotomic& k) const {
    TubeElement2 out(bottom_, top_);
    if (k.is_zero()) return out;
    for (const auto& [t, c] : terms_) out.add(t, c * k);
    return out;
}

TubeElement2 operator+(const TubeElement2& a, const TubeElement2& b) {
    TubeElement2 out = a;
    for (const auto& [t, c] : b.terms_) out.add(t, c);
    return out;
}

TubeElement2 operator-(const TubeElement2& a, const TubeElement2& b) {
    TubeElement2 out = a;
    for (const auto& [t, c] : b.terms_) out.add(t, -c);
    return out;
}

bool operator==(const TubeElement2& a, const TubeElement2& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.terms_ == b.terms_;
}

std::string TubeElement2::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")" + t.to_string();
    }
    return s;
}

TubeElement2 element_compose(const TubeElement2& a, const TubeElement2& b) {
    TubeElement2 out(b.bottom_wall(), b.top_wall());
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            if (!(ta.inner_bottom == tb.outer_bottom()) || !(ta.inner_top == tb.outer_top()))
                continue;
            auto [phase, t] = tube_compose(ta, tb);
            out.add(t, phase * ca * cb);
        }
    }
    return out;
}

std::string Defect::to_string() const {
    std::string s = bottom.to_string() + "/" + top.to_string();
    for (size_t i = 0; i < labels.size(); ++i)
        s += (i == 0 ? ":" : ",") + std::to_string(labels[i].value());
    return s;
}

bool operator<(const Defect& a, const Defect& b) {
    if (a.bottom != b.bottom) return a.bottom < b.bottom;
    if (a.top != b.top) return a.top < b.top;
    return a.labels < b.labels;
}

bool operator==(const Defect& a, const Defect& b) {
    return a.bottom == b.bottom && a.top == b.top && a.labels == b.labels;
}

namespace {

struct StringPair {
    Zp g, h;
};

// Orbit of an object pair under the two-sided action, with the connecting
// strings that carry the representative to each member.
struct Orbit {
    WallObject rep_b;
    WallObject rep_t;
    std::vector<std::pair<std::pair<WallObject, WallObject>, StringPair>> members;
};

std::vector<Orbit> object_orbits(const Wall& bottom, const Wall& top) {
    PrimeModulus p = bottom.modulus();
    auto bs = simple_objects(bottom);
    auto ts = simple_objects(top);
    std::set<std::pair<WallObject, WallObject>> seen;
    std::vector<Orbit> orbits;
    for (const auto& b : bs) {
        for (const auto& t : ts) {
            if (seen.count({b, t})) continue;
            Orbit orb{b, t, {}};
            for (int g = 0; g < p.value(); ++g) {
                for (int h = 0; h < p.value(); ++h) {
                    Zp zg(g, p), zh(h, p);
                    auto mb = act(zg, b, zh);
                    auto mt = act(zg, t, zh);
                    if (!seen.count({mb, mt})) {
                        seen.insert({mb, mt});
                        orb.members.push_back({{mb, mt}, {zg, zh}});
                    }
                }
            }
            // Representatives are lexicographically smallest, except X_k-T
            // where the catalogue pins the form (0, (a, 0)).
            if (bottom.kind() == WallKind::X && top.kind() == WallKind::T) {
                for (const auto& [objs, strings] : orb.members)
                    if (objs.first.labels()[0].value() == 0 &&
                        objs.second.labels()[1].value() == 0) {
                        orb.rep_b = objs.first;
                        orb.rep_t = objs.second;
                        break;
                    }
            }
            orbits.push_back(std::move(orb));
        }
    }
    return orbits;
}

std::vector<StringPair> stabilizer(const WallObject& b, const WallObject& t) {
    PrimeModulus p = b.wall().modulus();
    std::vector<StringPair> out;
    for (int g = 0; g < p.value(); ++g)
        for (int h = 0; h < p.value(); ++h) {
            Zp zg(g, p), zh(h, p);
            if (act(zg, b, zh) == b && act(zg, t, zh) == t) out.push_back({zg, zh});
        }
    return out;
}

// Exponent e with omega^e = c; requires c to be a power of omega.
int omega_log(const Cyclotomic& c, PrimeModulus p) {
    for (int e = 0; e < p.value(); ++e)
        if (c == omega_pow(p, e)) return e;
    throw std::logic_error("phase is not a power of omega");
}

// Cocycle exponent a with phi(s_g, s_h) = omega^{a g h} for the cyclic
// stabilizer parameterized by s_g.
int twist_exponent(const Wall& bottom, const Wall& top, const WallObject& rb,
                   const WallObject& rt, const std::function<StringPair(int)>& param) {
    PrimeModulus p = bottom.modulus();
    StringPair s1 = param(1);
    Tube2 t1{rb, rt, s1.g, s1.h};
    auto [phase, t] = tube_compose(t1, t1);
    int a = omega_log(phase, p);
    // The cocycle must be bilinear in the parameterization.
    for (int g = 0; g < p.value(); ++g)
        for (int h = 0; h < p.value(); ++h) {
            StringPair sg = param(g), sh = param(h);
            Tube2 tg{rb, rt, sg.g, sg.h}, th{rb, rt, sh.g, sh.h};
            auto [ph, tr] = tube_compose(th, tg);
            if (ph != omega_pow(p, long(a) * g * h))
                throw std::logic_error("stabilizer cocycle is not bilinear");
        }
    return a;
}

// Orbit-invariant labels per the idempotent catalogue (empty when the orbit
// is unique or the representative objects carry no residual label).
std::vector<Zp> orbit_labels(const Wall& bottom, const Wall& top, const WallObject& rb,
                             const WallObject& rt) {
    WallKind kb = bottom.kind(), kt = top.kind();
    auto lab = [](const WallObject& o, int i) { return o.labels()[i]; };
    if (kb == WallKind::T && kt == WallKind::T) return {lab(rt, 0), lab(rt, 1)};
    if (kb == WallKind::T && (kt == WallKind::L || kt == WallKind::R || kt == WallKind::X))
        return {lab(rt, 0)};
    if (kt == WallKind::T && (kb == WallKind::L || kb == WallKind::R || kb == WallKind::X))
        return {lab(rt, 0)};
    bool same_single = (kb == WallKind::L && kt == WallKind::L) ||
                       (kb == WallKind::R && kt == WallKind::R) ||
                       (kb == WallKind::X && kt == WallKind::X && bottom.param() == top.param());
    if (same_single) return {lab(rt, 0)};
    return {};
}

}  // namespace

std::vector<Defect> classify_defects(const Wall& bottom, const Wall& top) {
    if (bottom.modulus() != top.modulus()) throw ModulusMismatch();
    PrimeModulus p = bottom.modulus();
    const int P = p.value();
    std::vector<Defect> out;

    for (const auto& orb : object_orbits(bottom, top)) {
        const WallObject& rb = orb.rep_b;
        const WallObject& rt = orb.rep_t;
        auto stab = stabilizer(rb, rt);
        std::vector<Zp> base = orbit_labels(bottom, top, rb, rt);

        if (stab.size() == 1) {
            TubeElement2 e(bottom, top);
            e.add(identity_tube(rb, rt), Cyclotomic::one(p));
            out.push_back(Defect{bottom, top, base, e, rb, rt});
            continue;
        }

        if (int(stab.size()) == P) {
            // Cyclic stabilizer. Table-calibrated parameterization: families
            // involving an untwisted wall on the diagonal-action side are
            // parameterized by the west string, the rest by the east string.
            bool has_east = false;
            Zp c(0, p);
            for (const auto& s : stab)
                if (s.h.value() == P - 1) {
                    has_east = true;
                    c = s.g;
                }
            bool west_param;
            if (!has_east) {
                west_param = true;  // S = {(g, 0)}
            } else if (c.value() == 0) {
                west_param = false;  // S = {(0, h)}
            } else {
                // Mixed stabilizer {(c g, -g)}: the catalogue uses the west
                // string when F0 is one of the walls.
                west_param = bottom.kind() == WallKind::F0 || top.kind() == WallKind::F0;
            }
            std::function<StringPair(int)> param;
            if (west_param && has_east && c.value() != 0) {
                Zp d = -zp_inv(c);  // s_g = (g, d g)
                param = [p, d](int g) { return StringPair{Zp(g, p), d * Zp(g, p)}; };
            } else if (west_param) {
                param = [p](int g) { return StringPair{Zp(g, p), Zp(0, p)}; };
            } else {
                param = [p, c](int g) { return StringPair{c * Zp(g, p), Zp(-g, p)}; };
            }
            int a = twist_exponent(bottom, top, rb, rt, param);
            for (int x = 0; x < P; ++x) {
                TubeElement2 e(bottom, top);
                for (int g = 0; g < P; ++g) {
                    StringPair s = param(g);
                    e.add(Tube2{rb, rt, s.g, s.h},
                          theta(Zp(x, p), Zp(a, p), Zp(g, p)).scaled(Rational(1, P)));
                }
                std::vector<Zp> labels = base;
                labels.push_back(Zp(x, p));
                out.push_back(Defect{bottom, top, labels, e, rb, rt});
            }
            continue;
        }

        // Full stabilizer Z/p x Z/p: only F-type wall pairs reach here.
        assert(int(stab.size()) == P * P);
        Zp qb = bottom.twist(), qt = top.twist();
        if (qb == qt) {
            // Untwisted: p^2 characters, strings (g, -h).
            for (int x = 0; x < P; ++x)
                for (int y = 0; y < P; ++y) {
                    TubeElement2 e(bottom, top);
                    for (int g = 0; g < P; ++g)
                        for (int h = 0; h < P; ++h)
                            e.add(Tube2{rb, rt, Zp(g, p), Zp(-h, p)},
                                  omega_pow(p, long(g) * x + long(h) * y).scaled(Rational(1, long(P) * P)));
                    out.push_back(Defect{bottom, top, {Zp(x, p), Zp(y, p)}, e, rb, rt});
                }
        } else {
            // Nondegenerate twisted group algebra: single defect, the
            // rank-one projector averaged over the east-string subgroup.
            TubeElement2 e(bottom, top);
            for (int g = 0; g < P; ++g)
                e.add(Tube2{rb, rt, Zp(0, p), Zp(-g, p)}, Cyclotomic(p, Rational(1, P)));
            out.push_back(Defect{bottom, top, {}, e, rb, rt});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Defect>& classified(const Wall& bottom, const Wall& top) {
    static std::mutex mu;
    static std::map<std::pair<Wall, Wall>, std::vector<Defect>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(bottom, top);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, classify_defects(bottom, top)).first;
    return it->second;
}

int defect_label_arity(const Wall& bottom, const Wall& top) {
    WallKind kb = bottom.kind(), kt = top.kind();
    auto is_single = [](WallKind k) { return k == WallKind::L || k == WallKind::R || k == WallKind::X; };
    auto is_f = [](WallKind k) { return k == WallKind::F0 || k == WallKind::F; };
    if (kb == WallKind::T && kt == WallKind::T) return 2;
    if (kb == WallKind::T || kt == WallKind::T) return is_f(kb) || is_f(kt) ? 0 : 1;
    if (is_single(kb) && is_single(kt)) {
        bool same = kb == kt && (kb != WallKind::X || bottom.param() == top.param());
        return same ? 2 : 0;
    }
    if (is_f(kb) && is_f(kt)) return bottom.twist() == top.twist() ? 2 : 0;
    // one single-type wall against one F-type wall
    return 1;
}

Defect defect_by_labels(const Wall& bottom, const Wall& top, const std::vector<Zp>& labels) {
    const auto& all = classified(bottom, top);
    for (const auto& d : all)
        if (d.labels == labels) return d;
    throw std::domain_error("no defect with these labels");
}

std::vector<Tube2> hom_tubes(const WallObject& from_b, const WallObject& from_t,
                             const WallObject& to_b, const WallObject& to_t) {
    PrimeModulus p = from_b.wall().modulus();
    std::vector<Tube2> out;
    for (int g = 0; g < p.value(); ++g)
        for (int h = 0; h < p.value(); ++h) {
            Tube2 t{from_b, from_t, Zp(g, p), Zp(h, p)};
            if (t.outer_bottom() == to_b && t.outer_top() == to_t) out.push_back(t);
        }
    return out;
}

std::vector<Tube2> all_tubes(const Wall& bottom, const Wall& top) {
    PrimeModulus p = bottom.modulus();
    std::vector<Tube2> out;
    for (const auto& b : simple_objects(bottom))
        for (const auto& t : simple_objects(top))
            for (int g = 0; g < p.value(); ++g)
                for (int h = 0; h < p.value(); ++h)
                    out.push_back(Tube2{b, t, Zp(g, p), Zp(h, p)});
    return out;
}

namespace {

// Incremental exact row reduction over the cyclotomic field.
class RowSpace {
  public:
    explicit RowSpace(int dim) : dim_(dim) {}
    // Returns true if the vector enlarged the span.
    bool insert(std::vector<Cyclotomic> v) {
        for (auto& [piv, row] : rows_) {
            if (v[piv].is_zero()) continue;
            Cyclotomic f = v[piv];
            for (int j = 0; j < dim_; ++j)
                if (!row[j].is_zero()) v[j] = v[j] - f * row[j];
        }
        int piv = -1;
        for (int j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        Cyclotomic inv = v[piv].inv();
        for (int j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) v[j] = v[j] * inv;
        rows_.push_back({piv, std::move(v)});
        return true;
    }
    long rank() const { return long(rows_.size()); }

  private:
    int dim_;
    std::vector<std::pair<int, std::vector<Cyclotomic>>> rows_;
};

std::vector<Cyclotomic> densify(const TubeElement2& e, const std::map<Tube2, int>& index,
                                PrimeModulus p) {
    std::vector<Cyclotomic> v(index.size(), Cyclotomic::zero(p));
    for (const auto& [t, c] : e.terms()) v[index.at(t)] = c;
    return v;
}

}  // namespace

long end_dimension(const Defect& d) {
    PrimeModulus p = d.modulus();
    auto tubes = hom_tubes(d.rep_bottom, d.rep_top, d.rep_bottom, d.rep_top);
    std::map<Tube2, int> index;
    for (const auto& t : all_tubes(d.bottom, d.top)) index.emplace(t, int(index.size()));
    RowSpace space(int(index.size()));
    for (const auto& t : tubes) {
        TubeElement2 mid(d.bottom, d.top);
        mid.add(t, Cyclotomic::one(p));
        TubeElement2 ete = element_compose(d.idempotent, element_compose(mid, d.idempotent));
        if (!ete.is_zero()) space.insert(densify(ete, index, p));
    }
    return space.rank();
}

bool defect_equivalent(const Defect& e1, const Defect& e2) {
    if (e1.bottom != e2.bottom || e1.top != e2.top) return false;
    PrimeModulus p = e1.modulus();
    // Candidate intertwiners u in e2*A*e1 and v in e1*A*e2.
    auto t12 = hom_tubes(e1.rep_bottom, e1.rep_top, e2.rep_bottom, e2.rep_top);
    auto t21 = hom_tubes(e2.rep_bottom, e2.rep_top, e1.rep_bottom, e1.rep_top);
    std::vector<TubeElement2> us, vs;
    for (const auto& t : t12) {
        TubeElement2 mid(e1.bottom, e1.top);
        mid.add(t, Cyclotomic::one(p));
        TubeElement2 u = element_compose(e2.idempotent, element_compose(mid, e1.idempotent));
        if (!u.is_zero()) us.push_back(u);
    }
    for (const auto& t : t21) {
        TubeElement2 mid(e1.bottom, e1.top);
        mid.add(t, Cyclotomic::one(p));
        TubeElement2 v = element_compose(e1.idempotent, element_compose(mid, e2.idempotent));
        if (!v.is_zero()) vs.push_back(v);
    }
    for (const auto& u : us) {
        for (const auto& v : vs) {
            TubeElement2 vu = element_compose(v, u);
            if (vu.is_zero()) continue;
            // vu lies in e1*A*e1 = span{e1}; extract the scalar.
            const auto& [t0, c0] = *vu.terms().begin();
            auto it = e1.idempotent.terms().find(t0);
            if (it == e1.idempotent.terms().end()) continue;
            Cyclotomic lambda = c0 * it->second.inv();
            if (lambda.is_zero()) continue;
            TubeElement2 vn = v.scaled(lambda.inv());
            if (element_compose(vn, u) == e1.idempotent &&
                element_compose(u, vn) == e2.idempotent)
                return true;
        }
    }
    return false;
}

std::vector<long> block_structure(const Wall& bottom, const Wall& top) {
    PrimeModulus p = bottom.modulus();
    auto defects = classify_defects(bottom, top);
    auto tubes = all_tubes(bottom, top);
    std::map<Tube2, int> index;
    for (const auto& t : tubes) index.emplace(t, int(index.size()));
    std::vector<long> dims;
    for (const auto& d : defects) {
        RowSpace space(int(index.size()));
        // Two-sided ideal A e A from the regular representation.
        for (const auto& t1 : tubes) {
            if (!(t1.inner_bottom == d.rep_bottom) || !(t1.inner_top == d.rep_top)) continue;
            TubeElement2 left(bottom, top);
            left.add(t1, Cyclotomic::one(p));
            TubeElement2 le = element_compose(left, d.idempotent);
            if (le.is_zero()) continue;
            for (const auto& t2 : tubes) {
                if (!(t2.outer_bottom() == d.rep_bottom) || !(t2.outer_top() == d.rep_top)) continue;
                TubeElement2 right(bottom, top);
                right.add(t2, Cyclotomic::one(p));
                TubeElement2 lear = element_compose(le, right);
                if (!lear.is_zero()) space.insert(densify(lear, index, p));
            }
        }
        dims.push_back(space.rank());
    }
    std::sort(dims.rbegin(), dims.rend());
    return dims;
}

}  // namespace zpd
