#pragma once

#include "rational.hpp"

#include <vector>

namespace gaudin {

// Dense univariate polynomial in u over the exact rationals. Degree stays
// small (desk scale < 200) so dense storage with exact gcd is adequate.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) coeffs_ = {std::move(c)};
    }
    static Poly variable(); // u
    static Poly from_coeffs(std::vector<Rational> ascending);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // quotient/remainder with remainder degree < divisor degree
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b); // monic gcd, gcd(0,0)=0
    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& u) const;
    BigFloat eval(const BigFloat& u) const;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> coeffs_; // ascending powers, no trailing zeros
};

// Reduced fraction of polynomials in u: den monic, gcd(num,den)=1, den!=0.
// Canonical form makes equality structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(Rational(1))) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Rational c) : RatFunc(Poly(std::move(c)), Poly(Rational(1))) {}
    static RatFunc variable() { return RatFunc(Poly::variable(), Poly(Rational(1))); }
    // 1/(u - pole)
    static RatFunc simple_pole(const Rational& pole);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const;
    bool has_pole_at(const Rational& u) const { return den_.eval(u) == 0; }
    Rational eval(const Rational& u) const; // throws on pole
    BigFloat eval(const BigFloat& u) const;

    std::string to_string(const std::string& var = "u") const;

private:
    Poly num_, den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(Rational(c)) * f; }

} // namespace gaudin
