#include "poly.hpp"

#include <sstream>

namespace gaudin {

namespace {
const Rational kZero(0);
}

Poly Poly::variable() {
    Poly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> ascending) {
    Poly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = Poly();
    r = a;
    if (a.degree() < b.degree()) return;
    q.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.leading() / b.leading();
        q.coeffs_[static_cast<size_t>(shift)] = f;
        // r -= f * u^shift * b
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i + static_cast<size_t>(shift)] -= f * b.coeffs_[i];
        r.trim();
    }
    q.trim();
}

Poly Poly::gcd(Poly a, Poly b) {
    // Euclid with monic remainders to keep coefficients tame.
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly Poly::derivative() const {
    Poly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<unsigned>(i));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rational(1) / leading());
}

Rational Poly::eval(const Rational& u) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * u + *it;
    return v;
}

BigFloat Poly::eval(const BigFloat& u) const {
    BigFloat v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * u + to_big_float(*it);
    return v;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        first = false;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::simple_pole(const Rational& pole) {
    return RatFunc(Poly(Rational(1)), Poly::from_coeffs({-pole, Rational(1)}));
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& u) const {
    Rational d = den_.eval(u);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(u) / d;
}

BigFloat RatFunc::eval(const BigFloat& u) const {
    return num_.eval(u) / den_.eval(u);
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == Poly(Rational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace gaudin
