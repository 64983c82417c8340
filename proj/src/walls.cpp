#include "zpd/walls.hpp"

namespace zpd {

std::string Wall::to_string() const {
    switch (kind_) {
        case WallKind::T: return "T";
        case WallKind::L: return "L";
        case WallKind::R: return "R";
        case WallKind::F0: return "F0";
        case WallKind::X: return "X:" + std::to_string(param_.value());
        case WallKind::F: return "F:" + std::to_string(param_.value());
    }
    return "?";
}

std::optional<Wall> Wall::parse(const std::string& text, PrimeModulus p) {
    if (text == "T") return Wall::T(p);
    if (text == "L") return Wall::L(p);
    if (text == "R") return Wall::R(p);
    if (text == "F0") return Wall::F0(p);
    if (text.size() >= 3 && (text[0] == 'X' || text[0] == 'F') && text[1] == ':') {
        try {
            int k = std::stoi(text.substr(2));
            if (k % p.value() == 0) return std::nullopt;
            Zp param(k, p);
            return text[0] == 'X' ? Wall::X(param) : Wall::F(param);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

WallObject WallObject::pair(const Wall& w, Zp a, Zp b) {
    if (w.kind() != WallKind::T) throw std::domain_error("pair objects belong to T walls");
    return WallObject(w, {a, b});
}

WallObject WallObject::single(const Wall& w, Zp a) {
    switch (w.kind()) {
        case WallKind::L:
        case WallKind::R:
        case WallKind::X: return WallObject(w, {a});
        default: throw std::domain_error("single objects belong to L/R/X walls");
    }
}

WallObject WallObject::star(const Wall& w) {
    if (w.kind() != WallKind::F0 && w.kind() != WallKind::F)
        throw std::domain_error("* objects belong to F walls");
    return WallObject(w, {});
}

bool operator<(const WallObject& a, const WallObject& b) {
    if (a.wall_ != b.wall_) return a.wall_ < b.wall_;
    return a.labels_ < b.labels_;
}

std::string WallObject::to_string() const {
    if (is_star()) return "*";
    if (labels_.size() == 1) return std::to_string(labels_[0].value());
    return "(" + std::to_string(labels_[0].value()) + "," + std::to_string(labels_[1].value()) + ")";
}

std::vector<WallObject> simple_objects(const Wall& w) {
    PrimeModulus p = w.modulus();
    std::vector<WallObject> out;
    switch (w.kind()) {
        case WallKind::T:
            for (int a = 0; a < p.value(); ++a)
                for (int b = 0; b < p.value(); ++b) out.push_back(WallObject::pair(w, Zp(a, p), Zp(b, p)));
            break;
        case WallKind::L:
        case WallKind::R:
        case WallKind::X:
            for (int a = 0; a < p.value(); ++a) out.push_back(WallObject::single(w, Zp(a, p)));
            break;
        default: out.push_back(WallObject::star(w));
    }
    return out;
}

std::vector<Wall> enumerate_walls(PrimeModulus p) {
    std::vector<Wall> out{Wall::T(p), Wall::L(p), Wall::R(p), Wall::F0(p)};
    for (int k = 1; k < p.value(); ++k) out.push_back(Wall::X(Zp(k, p)));
    for (int q = 1; q < p.value(); ++q) out.push_back(Wall::F(Zp(q, p)));
    return out;
}

WallObject act(Zp g, const WallObject& m, Zp h) {
    const Wall& w = m.wall();
    switch (w.kind()) {
        case WallKind::T: return WallObject::pair(w, m.labels()[0] + g, m.labels()[1] + h);
        case WallKind::L: return WallObject::single(w, m.labels()[0] + h);
        case WallKind::R: return WallObject::single(w, m.labels()[0] + g);
        case WallKind::X: return WallObject::single(w, m.labels()[0] + g + w.param() * h);
        default: return m;
    }
}

namespace detail {
int associator_twist_delta = 0;
}

Cyclotomic associator(const Wall& w, Zp g, Zp h) {
    PrimeModulus p = w.modulus();
    if (w.kind() != WallKind::F) return Cyclotomic::one(p);
    Zp q = w.param() + Zp(detail::associator_twist_delta, p);
    return omega_pow(q * g * h);
}

namespace {

// Row/column index of Table II: T, L, R, F0 -> 0..3, X -> 4, F -> 5.
int table_index(const Wall& w) {
    switch (w.kind()) {
        case WallKind::T: return 0;
        case WallKind::L: return 1;
        case WallKind::R: return 2;
        case WallKind::F0: return 3;
        case WallKind::X: return 4;
        default: return 5;
    }
}

}  // namespace

WallFusionDecomposition wall_fuse(const Wall& m, const Wall& n) {
    if (m.modulus() != n.modulus()) throw ModulusMismatch();
    PrimeModulus p = m.modulus();
    const int P = p.value();
    const Wall T = Wall::T(p), L = Wall::L(p), R = Wall::R(p), F0 = Wall::F0(p);

    // Table II. Entries are (result wall, index-set size).
    auto plain = [&](Wall w) { return WallFusionComponent{w, 1}; };
    auto timesp = [&](Wall w) { return WallFusionComponent{w, P}; };

    WallFusionComponent c = plain(T);
    int row = table_index(m), col = table_index(n);
    switch (row) {
        case 0:  // T
            c = (col == 0)   ? timesp(T)
                : (col == 1) ? plain(T)
                : (col == 2) ? timesp(R)
                : (col == 3) ? plain(R)
                : (col == 4) ? plain(T)
                             : plain(R);
            break;
        case 1:  // L
            c = (col == 0)   ? timesp(L)
                : (col == 1) ? plain(L)
                : (col == 2) ? timesp(F0)
                : (col == 3) ? plain(F0)
                : (col == 4) ? plain(L)
                             : plain(F0);
            break;
        case 2:  // R
            c = (col == 0)   ? plain(T)
                : (col == 1) ? timesp(T)
                : (col == 2) ? plain(R)
                : (col == 3) ? timesp(R)
                : (col == 4) ? plain(R)
                             : plain(T);
            break;
        case 3:  // F0
            c = (col == 0)   ? plain(L)
                : (col == 1) ? timesp(L)
                : (col == 2) ? plain(F0)
                : (col == 3) ? timesp(F0)
                : (col == 4) ? plain(F0)
                             : plain(L);
            break;
        case 4:  // X_k
            c = (col == 0)   ? plain(T)
                : (col == 1) ? plain(L)
                : (col == 2) ? plain(R)
                : (col == 3) ? plain(F0)
                : (col == 4) ? plain(Wall::X(m.param() * n.param()))
                             : plain(Wall::F(zp_inv(m.param()) * n.param()));
            break;
        default:  // F_q
            c = (col == 0)   ? plain(L)
                : (col == 1) ? plain(T)
                : (col == 2) ? plain(F0)
                : (col == 3) ? plain(R)
                : (col == 4) ? plain(Wall::F(m.param() * n.param()))
                             : plain(Wall::X(zp_inv(m.param()) * n.param()));
            break;
    }
    return WallFusionDecomposition{m, n, {c}};
}

}  // namespace zpd
