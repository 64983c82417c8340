#include "zpd/arith.hpp"

namespace zpd {

PrimeModulus::PrimeModulus(int p) : p_(p) {
    if (p < 2) throw std::domain_error("modulus must be a prime >= 2");
    for (int d = 2; long(d) * d <= p; ++d)
        if (p % d == 0) throw std::domain_error("modulus is not prime");
}

Zp zp_inv(Zp a) {
    if (a.value() == 0) throw ZeroInverse();
    int p = a.modulus();
    // Fermat: a^(p-2) mod p.
    long r = 1, b = a.value(), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return Zp(r, PrimeModulus(p));
}

Cyclotomic::Cyclotomic(PrimeModulus p, const Rational& c) : p_(p.value()), c_(phi()) {
    c_[0] = c;
    c_[0].canonicalize();
}

void Cyclotomic::add_monomial(long k, const Rational& r) {
    int N = p_ == 2 ? 4 : p_;
    long j = k % N;
    if (j < 0) j += N;
    if (p_ == 2) {
        // zeta_4: i^2 = -1, i^3 = -i.
        switch (j) {
            case 0: c_[0] += r; break;
            case 1: c_[1] += r; break;
            case 2: c_[0] -= r; break;
            default: c_[1] -= r; break;
        }
    } else {
        // zeta_p^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
        if (j < p_ - 1) {
            c_[j] += r;
        } else {
            for (int i = 0; i < p_ - 1; ++i) c_[i] -= r;
        }
    }
}

Cyclotomic Cyclotomic::root_power(PrimeModulus p, long k) {
    Cyclotomic z(p, 0);
    z.add_monomial(k, 1);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int j = 1; j < int(c_.size()); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    Cyclotomic r = a;
    for (int j = 0; j < int(r.c_.size()); ++j) r.c_[j] += b.c_[j];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    Cyclotomic r = a;
    for (int j = 0; j < int(r.c_.size()); ++j) r.c_[j] -= b.c_[j];
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    Cyclotomic r(PrimeModulus(a.p_), 0);
    for (int i = 0; i < int(a.c_.size()); ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < int(b.c_.size()); ++j) {
            if (b.c_[j] == 0) continue;
            r.add_monomial(long(i) + j, a.c_[i] * b.c_[j]);
        }
    }
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Rational rc = r;
    rc.canonicalize();
    Cyclotomic out = *this;
    for (auto& c : out.c_) c *= rc;
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(PrimeModulus(p_), 0);
    int N = p_ == 2 ? 4 : p_;
    for (int j = 0; j < int(c_.size()); ++j)
        if (c_[j] != 0) out.add_monomial(-long(j) % N, c_[j]);
    return out;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    // Solve (*this) * x = 1 by Gaussian elimination on the multiplication matrix.
    int n = phi();
    // col j of M = coefficients of (*this) * zeta^j.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        Cyclotomic col = *this * root_power(PrimeModulus(p_), j);
        for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rational d = m[row][col];
        for (auto& x : m[row]) x /= d;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    Cyclotomic out(PrimeModulus(p_), 0);
    for (int i = 0; i < n; ++i) out.c_[i] = m[i][n];
    return out;
}

std::string Cyclotomic::to_string() const {
    std::string s;
    bool first = true;
    for (int j = 0; j < int(c_.size()); ++j) {
        if (c_[j] == 0) continue;
        if (!first) s += " + ";
        s += c_[j].get_str();
        if (j > 0) s += (p_ == 2 ? "*i" : "*w^" + std::to_string(j));
        first = false;
    }
    return first ? "0" : s;
}

Cyclotomic omega_pow(PrimeModulus p, long k) {
    int N = p.cyclotomic_order();
    long j = k % p.value();
    if (j < 0) j += p.value();
    return Cyclotomic::root_power(p, j * (N / p.value()));
}

Cyclotomic omega_pow(Zp k) { return omega_pow(PrimeModulus(k.modulus()), k.value()); }

Cyclotomic theta(Zp x, Zp a, Zp g) {
    PrimeModulus p(x.modulus());
    if (p.value() == 2) {
        // (-1)^{gx} i^{ag}, with g, x, a taken as residues in {0,1}.
        Cyclotomic r = omega_pow(p, long(g.value()) * x.value());
        return r * Cyclotomic::root_power(p, long(a.value()) * g.value());
    }
    long inv2 = zp_inv(Zp(2, p)).value();
    long e = g.value() * long(x.value()) + a.value() * long(g.value()) * g.value() % p.value() * inv2;
    return omega_pow(p, e);
}

}  // namespace zpd
