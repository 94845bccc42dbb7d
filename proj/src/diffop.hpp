#pragma once

#include "poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gaudin {

// One generator letter: basis pair (i,j) of E_ij / F_ij acting on tensor
// factor `site`. Letters are u-independent and commute with d/du and with
// coefficient functions, never with each other.
struct Letter {
    int i = 0, j = 0;
    int site = 1;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Rational binomial(int n, int k);

// Normal-ordered operator: sum of  f(u) * letters * d^k  with all d-powers on
// the right. Products concatenate letters in order and push d past
// coefficients by d o f = f d + f'.
class DiffOp {
public:
    struct Key {
        Word word;
        int ddeg = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using TermMap = std::map<Key, RatFunc>;

    DiffOp() = default;
    static DiffOp zero() { return DiffOp(); }
    static DiffOp constant(const Rational& c) { return term(Word{}, 0, RatFunc(c)); }
    static DiffOp d(int power = 1) { return term(Word{}, power, RatFunc(Rational(1))); }
    static DiffOp term(Word w, int ddeg, RatFunc coeff);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int max_ddeg() const;
    int site_count_bound() const; // largest site index appearing

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator*(const DiffOp& o) const; // normal-ordered composition
    DiffOp operator*(const RatFunc& f) const;
    DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
    DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }
    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }

    // coefficient of d^k as a d-free operator
    DiffOp slice(int k) const;

    std::string to_string() const;

private:
    void add_term(const Key& key, const RatFunc& f);
    TermMap terms_; // no zero coefficients stored
};

// Normal-ordered scalar differential operator over a differential ring R
// (required ops: +, -, *, derivative(), is_zero()). R = RatFunc for exact
// work; R = Jet for float-mode evaluation at a sample point.
template <class R>
class ScalarOp {
public:
    using CoeffMap = std::map<int, R>;

    ScalarOp() = default;
    static ScalarOp zero() { return ScalarOp(); }
    static ScalarOp term(int ddeg, R coeff) {
        ScalarOp s;
        if (!coeff.is_zero()) s.coeffs_.emplace(ddeg, std::move(coeff));
        return s;
    }
    static ScalarOp d(int power, const R& one) { return term(power, one); }

    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    int max_ddeg() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    R coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? R() : it->second;
    }

    ScalarOp operator-() const {
        ScalarOp r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }
    ScalarOp operator+(const ScalarOp& o) const {
        ScalarOp r(*this);
        for (const auto& [k, c] : o.coeffs_) r.add(k, c);
        return r;
    }
    ScalarOp operator-(const ScalarOp& o) const { return *this + (-o); }
    ScalarOp operator*(const ScalarOp& o) const {
        // (f d^k)(g d^l) = sum_r C(k,r) f g^(r) d^(k-r+l)
        ScalarOp r;
        for (const auto& [k, f] : coeffs_) {
            for (const auto& [l, g] : o.coeffs_) {
                R gd = g;
                for (int s = 0; s <= k; ++s) {
                    R piece = f * gd;
                    scale(piece, binomial(k, s));
                    r.add(k - s + l, piece);
                    if (s < k) gd = gd.derivative();
                }
            }
        }
        return r;
    }
    ScalarOp& operator+=(const ScalarOp& o) { return *this = *this + o; }
    ScalarOp& operator*=(const ScalarOp& o) { return *this = *this * o; }
    bool operator==(const ScalarOp& o) const { return coeffs_ == o.coeffs_; }

    ScalarOp slice(int k) const { return term(0, coeff(k)); }

private:
    static void scale(R& x, const Rational& c); // defined per ring below
    void add(int k, const R& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    CoeffMap coeffs_;
};

using ScalarDiffOp = ScalarOp<RatFunc>;

template <>
inline void ScalarOp<RatFunc>::scale(RatFunc& x, const Rational& c) {
    x = x * RatFunc(c);
}

// Truncated Taylor expansion at a fixed sample point; order() coefficients
// are stored as f^(r)(u0)/r!. Supports exactly the differential-ring ops the
// oracle builders need, so float-mode verification can evaluate eigenvalue
// operators (including the derivatives produced by normal ordering) without
// float polynomial gcds.
class Jet {
public:
    Jet() = default;
    Jet(int order, BigFloat value) : t_(static_cast<size_t>(order) + 1, BigFloat(0)) {
        t_[0] = std::move(value);
    }
    static Jet of_simple_pole(int order, const BigFloat& u0, const BigFloat& pole);

    int order() const { return static_cast<int>(t_.size()) - 1; }
    const BigFloat& value() const { return t_.at(0); }
    const BigFloat& taylor(int r) const { return t_.at(static_cast<size_t>(r)); }

    bool is_zero() const;
    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet derivative() const;
    void scale_by(const Rational& c);

private:
    std::vector<BigFloat> t_;
};

template <>
inline void ScalarOp<Jet>::scale(Jet& x, const Rational& c) {
    x.scale_by(c);
}

using JetOp = ScalarOp<Jet>;

} // namespace gaudin
