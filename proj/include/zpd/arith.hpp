#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zpd {

using Rational = mpq_class;

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero residue") {}
};
struct ModulusMismatch : std::domain_error {
    ModulusMismatch() : std::domain_error("operands carry different moduli") {}
};

// Prime modulus p. Primality is checked by trial division at construction.
class PrimeModulus {
  public:
    explicit PrimeModulus(int p);
    int value() const { return p_; }
    // N-th cyclotomic field houses all phases: N = p for odd p, N = 4 for p = 2.
    int cyclotomic_order() const { return p_ == 2 ? 4 : p_; }
    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

  private:
    int p_;
};

// Residue in [0, p).
class Zp {
  public:
    Zp() : v_(0), p_(0) {}
    Zp(long v, PrimeModulus p) : p_(p.value()) { v_ = norm(v, p_); }
    int value() const { return v_; }
    int modulus() const { return p_; }

    friend Zp operator+(Zp a, Zp b) { return Zp(a.v_ + b.v_, a.match(b)); }
    friend Zp operator-(Zp a, Zp b) { return Zp(a.v_ - b.v_, a.match(b)); }
    friend Zp operator*(Zp a, Zp b) { return Zp(long(a.v_) * b.v_, a.match(b)); }
    Zp operator-() const { return Zp(-v_, PrimeModulus(p_)); }
    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(Zp a, Zp b) { return !(a == b); }
    friend bool operator<(Zp a, Zp b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.v_ < b.v_;
    }

    Zp times(long k) const { return Zp(v_ * k, PrimeModulus(p_)); }

  private:
    static int norm(long v, int p) {
        long r = v % p;
        return int(r < 0 ? r + p : r);
    }
    PrimeModulus match(Zp b) const {
        if (p_ != b.p_) throw ModulusMismatch();
        return PrimeModulus(p_);
    }
    int v_;
    int p_;
};

Zp zp_inv(Zp a);

// Exact element of Q(zeta_N), stored on the basis {zeta_N^j : 0 <= j < phi(N)}
// reduced modulo the N-th cyclotomic polynomial. Equality and zero tests are exact.
class Cyclotomic {
  public:
    Cyclotomic() : p_(0) {}
    explicit Cyclotomic(PrimeModulus p, const Rational& c = 0);

    static Cyclotomic zero(PrimeModulus p) { return Cyclotomic(p, 0); }
    static Cyclotomic one(PrimeModulus p) { return Cyclotomic(p, 1); }
    // zeta_N^k (N = cyclotomic order).
    static Cyclotomic root_power(PrimeModulus p, long k);

    PrimeModulus modulus() const { return PrimeModulus(p_); }
    bool is_zero() const;
    bool is_rational() const;
    // Coefficient of zeta_N^j in the reduced basis.
    const Rational& coeff(int j) const { return c_[j]; }
    int basis_size() const { return int(c_.size()); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic scaled(const Rational& r) const;
    // Complex conjugate (zeta -> zeta^{-1}).
    Cyclotomic conj() const;
    // Multiplicative inverse of a nonzero element.
    Cyclotomic inv() const;

    std::string to_string() const;

  private:
    void check(const Cyclotomic& b) const {
        if (p_ != b.p_) throw ModulusMismatch();
    }
    int phi() const { return p_ == 2 ? 2 : p_ - 1; }
    // Adds r * zeta_N^k (k arbitrary) into the reduced representation.
    void add_monomial(long k, const Rational& r);
    int p_;
    std::vector<Rational> c_;
};

// omega^k with omega = exp(2*pi*i/p) = zeta_N^{N/p}.
Cyclotomic omega_pow(Zp k);
Cyclotomic omega_pow(PrimeModulus p, long k);

// Corrected cochain: Theta_{x,a}(g) = (-1)^{gx} i^{ag} for p = 2,
// omega^{gx + a g^2 / 2} for odd p. Satisfies
// Theta_{x,a}(g+k) = Theta_{x,a}(g) Theta_{x,a}(k) omega^{agk}.
Cyclotomic theta(Zp x, Zp a, Zp g);

}  // namespace zpd
