#include "diffop.hpp"

#include <sstream>

namespace gaudin {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

DiffOp DiffOp::term(Word w, int ddeg, RatFunc coeff) {
    DiffOp op;
    if (!coeff.is_zero()) op.terms_.emplace(Key{std::move(w), ddeg}, std::move(coeff));
    return op;
}

int DiffOp::max_ddeg() const {
    int m = -1;
    for (const auto& [key, f] : terms_) m = std::max(m, key.ddeg);
    return m;
}

int DiffOp::site_count_bound() const {
    int m = 0;
    for (const auto& [key, f] : terms_)
        for (const Letter& l : key.word) m = std::max(m, l.site);
    return m;
}

void DiffOp::add_term(const Key& key, const RatFunc& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [key, f] : terms_) r.terms_.emplace(key, -f);
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r(*this);
    for (const auto& [key, f] : o.terms_) r.add_term(key, f);
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator*(const DiffOp& o) const {
    DiffOp r;
    for (const auto& [ka, fa] : terms_) {
        for (const auto& [kb, fb] : o.terms_) {
            Word w = ka.word;
            w.insert(w.end(), kb.word.begin(), kb.word.end());
            // d^k o g = sum_s C(k,s) g^(s) d^(k-s)
            RatFunc gd = fb;
            for (int s = 0; s <= ka.ddeg; ++s) {
                RatFunc c = fa * gd * RatFunc(binomial(ka.ddeg, s));
                r.add_term(Key{w, ka.ddeg - s + kb.ddeg}, c);
                if (s < ka.ddeg) gd = gd.derivative();
            }
        }
    }
    return r;
}

DiffOp DiffOp::operator*(const RatFunc& f) const {
    DiffOp r;
    if (f.is_zero()) return r;
    for (const auto& [key, g] : terms_) r.add_term(key, g * f);
    return r;
}

DiffOp DiffOp::slice(int k) const {
    DiffOp r;
    for (const auto& [key, f] : terms_)
        if (key.ddeg == k) r.terms_.emplace(Key{key.word, 0}, f);
    return r;
}

std::string DiffOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << f.to_string() << "]";
        for (const Letter& l : key.word) os << " X(" << l.i << "," << l.j << ")_" << l.site;
        if (key.ddeg > 0) os << " d^" << key.ddeg;
    }
    return os.str();
}

Jet Jet::of_simple_pole(int order, const BigFloat& u0, const BigFloat& pole) {
    // Taylor coefficients of 1/(u-p) at u0: (-1)^r / (u0-p)^(r+1)
    Jet j(order, BigFloat(0));
    BigFloat base = u0 - pole;
    BigFloat powinv = 1 / base;
    for (int r = 0; r <= order; ++r) {
        j.t_[static_cast<size_t>(r)] = (r % 2 == 0) ? powinv : BigFloat(-powinv);
        powinv /= base;
    }
    return j;
}

bool Jet::is_zero() const {
    for (const auto& c : t_)
        if (c != 0) return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r(*this);
    for (auto& c : r.t_) c = -c;
    return r;
}

Jet Jet::operator+(const Jet& o) const {
    Jet r(*this);
    if (o.t_.size() > r.t_.size()) r.t_.resize(o.t_.size(), BigFloat(0));
    for (size_t i = 0; i < o.t_.size(); ++i) r.t_[i] += o.t_[i];
    return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator*(const Jet& o) const {
    // truncated Cauchy product of Taylor coefficients
    size_t n = std::max(t_.size(), o.t_.size());
    Jet r;
    r.t_.assign(n, BigFloat(0));
    for (size_t i = 0; i < t_.size(); ++i)
        for (size_t j = 0; j < o.t_.size() && i + j < n; ++j)
            r.t_[i + j] += t_[i] * o.t_[j];
    return r;
}

Jet Jet::derivative() const {
    // a_r = f^(r)/r!  ->  (f')^(r)/r! = a_(r+1) * (r+1); top order is lost
    Jet r;
    if (t_.size() <= 1) {
        r.t_.assign(1, BigFloat(0));
        return r;
    }
    r.t_.resize(t_.size() - 1);
    for (size_t i = 0; i + 1 < t_.size(); ++i)
        r.t_[i] = t_[i + 1] * BigFloat(static_cast<unsigned>(i + 1));
    return r;
}

void Jet::scale_by(const Rational& c) {
    BigFloat f = to_big_float(c);
    for (auto& x : t_) x *= f;
}

} // namespace gaudin
