#include "lambda_ring.hpp"

#include <sstream>

namespace gaudin {

LPoly LPoly::symbol(const LSym& s) {
    LPoly p;
    p.t_.emplace(LMono{{s, 1}}, Rational(1));
    return p;
}

void LPoly::add(const LMono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LPoly LPoly::operator-() const {
    LPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

LPoly LPoly::operator+(const LPoly& o) const {
    LPoly r(*this);
    for (const auto& [m, c] : o.t_) r.add(m, c);
    return r;
}

LPoly LPoly::operator-(const LPoly& o) const { return *this + (-o); }

LPoly LPoly::operator*(const LPoly& o) const {
    LPoly r;
    for (const auto& [m1, c1] : t_) {
        for (const auto& [m2, c2] : o.t_) {
            // merge sorted exponent lists
            LMono m;
            m.reserve(m1.size() + m2.size());
            size_t a = 0, b = 0;
            while (a < m1.size() || b < m2.size()) {
                if (b == m2.size() || (a < m1.size() && m1[a].first < m2[b].first))
                    m.push_back(m1[a++]);
                else if (a == m1.size() || m2[b].first < m1[a].first)
                    m.push_back(m2[b++]);
                else {
                    m.emplace_back(m1[a].first, m1[a].second + m2[b].second);
                    ++a;
                    ++b;
                }
            }
            r.add(m, c1 * c2);
        }
    }
    return r;
}

std::string LPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (const auto& [s, e] : m) {
            os << "*l" << s.idx << "(" << s.arg << ")";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {
LPoly normalize_pair(LPoly& num, LPoly& den) {
    if (num.is_zero()) {
        den = LPoly(Rational(1));
        return den;
    }
    // scale so the first denominator coefficient is 1
    const Rational& lead = den.terms().begin()->second;
    if (lead != 1) {
        LPoly inv{Rational(1) / lead};
        num = num * inv;
        den = den * inv;
    }
    return den;
}
} // namespace

LFrac LFrac::operator+(const LFrac& o) const {
    LFrac r{num * o.den + o.num * den, den * o.den};
    normalize_pair(r.num, r.den);
    return r;
}

LFrac LFrac::operator-(const LFrac& o) const {
    LFrac r{num * o.den - o.num * den, den * o.den};
    normalize_pair(r.num, r.den);
    return r;
}

LFrac LFrac::operator*(const LFrac& o) const {
    LFrac r{num * o.num, den * o.den};
    normalize_pair(r.num, r.den);
    return r;
}

LFrac LFrac::operator/(const LFrac& o) const {
    if (o.is_zero()) throw InputError("division by zero lambda element");
    LFrac r{num * o.den, den * o.num};
    normalize_pair(r.num, r.den);
    return r;
}

bool LFrac::equals(const LFrac& o) const { return (num * o.den) == (o.num * den); }

std::string LFrac::to_string() const {
    if (den == LPoly(Rational(1))) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

LambdaRing::LambdaRing(Family f, int rank_or_size) : family(f) {
    switch (f) {
        case Family::A:
            N = rank_or_size;
            n = N - 1;
            break;
        case Family::B:
            n = rank_or_size;
            N = 2 * n + 1;
            kappa = Rational(2 * n - 1, 2); // N/2 - 1
            break;
        case Family::C:
            n = rank_or_size;
            N = 2 * n;
            kappa = Rational(n + 1); // N/2 + 1
            break;
        case Family::D:
            n = rank_or_size;
            N = 2 * n;
            kappa = Rational(n - 1); // N/2 - 1
            break;
    }
    if (n < 1) throw InputError("lambda ring needs rank >= 1");
}

LFrac LambdaRing::lambda(int j, const Rational& a) const {
    if (j < 1 || j > N) throw InputError("lambda index out of range");
    if (family == Family::A || j <= n)
        return LFrac::of(LPoly::symbol(LSym{j, a}));
    if (family == Family::B && j == n + 1) {
        // closed-form middle lambda: prod_k l_k(a+n-k) / prod_k l_k(a+n-k+1/2)
        LFrac r = LFrac::constant(Rational(1));
        for (int k = 1; k <= n; ++k) {
            Rational s = a + Rational(n - k);
            r = r * lambda(k, s) / lambda(k, s + Rational(1, 2));
        }
        return r;
    }
    // descend from t = N using lambda_t = l_{N-t}(a+kappa-(N-t)) l_{t+1}(a) / l_{N-t+1}(a+kappa-(N-t))
    // with l_{N+1} := 1; stops at the middle (B) or at n+1 (C/D)
    LFrac acc = LFrac::constant(Rational(1)); // lambda_{N+1}
    for (int t = N; t >= j; --t) {
        int i = N - t;
        Rational s = a + kappa - Rational(i);
        LFrac numf = i == 0 ? LFrac::constant(Rational(1)) : lambda(i, s);
        acc = numf * acc / lambda(i + 1, s);
    }
    return acc;
}

Rational LambdaRing::step(int i) const {
    if (family == Family::A || i < n) return Rational(1);
    switch (family) {
        case Family::B: return Rational(1, 2);
        case Family::C: return Rational(2);
        case Family::D: return Rational(1);
        default: return Rational(1);
    }
}

std::vector<LambdaRing::SigmaTerm> LambdaRing::generator_image(int i, int j) const {
    // rows of S~_i on the stored (unprimed) symbols only
    std::vector<SigmaTerm> out;
    const Rational a(0); // argument added by caller
    if (family == Family::A || i < n) {
        if (j == i) out.push_back({Rational(1), Rational(0)});
        if (j == i + 1) out.push_back({Rational(-1), Rational(1)});
        return out;
    }
    switch (family) {
        case Family::B:
            if (j == n) {
                out.push_back({Rational(1), Rational(0)});
                out.push_back({Rational(1), Rational(-1, 2)});
            }
            break;
        case Family::C:
            if (j == n) out.push_back({Rational(1), Rational(0)});
            break;
        case Family::D:
            if (j == n - 1 || j == n) out.push_back({Rational(1), Rational(0)});
            break;
        default: break;
    }
    return out;
}

LFrac LambdaRing::shift_ratio(int i, const Rational& b) const {
    // sigma_i(b + step) = ratio(b) sigma_i(b) from the module relations
    if (family == Family::A || i < n) return lambda(i, b) / lambda(i + 1, b);
    switch (family) {
        case Family::B: return lambda(n, b) / lambda(n + 1, b);
        case Family::C: return lambda(n, b) / lambda(n + 1, b);
        case Family::D: return lambda(n - 1, b) / lambda(n + 1, b);
        default: throw InputError("bad family");
    }
}

namespace {
Rational rational_mod(const Rational& a, const Rational& s) {
    // minimal nonnegative residue of a modulo the positive step s
    Rational q = a / s;
    BigInt num = numerator(q), den = denominator(q);
    BigInt fl = num / den;
    if (num < 0 && fl * den != num) fl -= 1;
    return a - s * Rational(fl);
}
} // namespace

void LambdaRing::sigma_add(SigmaElement& acc, int i, const Rational& arg, const LFrac& coeff) const {
    const Rational s = step(i);
    Rational rep = rational_mod(arg, s);
    LFrac c = coeff;
    Rational b = arg;
    while (b > rep) {
        b -= s;
        c = c * shift_ratio(i, b); // sigma(b+s) = ratio(b) sigma(b)
    }
    while (b < rep) {
        c = c / shift_ratio(i, b); // sigma(b) = sigma(b+s)/ratio(b)
        b += s;
    }
    auto [it, inserted] = acc.try_emplace(rep, c);
    if (!inserted) it->second = it->second + c;
}

SigmaElement LambdaRing::screening(int i, const LFrac& A) const {
    if (i < 1 || i > colors()) throw InputError("screening color out of range");
    // S(P/Q) = S(P)/Q - (P/Q^2) S(Q); on a monomial the image is the
    // monomial itself times a sigma combination, accumulated per symbol.
    auto screen_poly = [&](const LPoly& P) {
        // list of (sigma arg, lambda-fraction coefficient) before reduction
        std::vector<std::pair<Rational, LFrac>> raw;
        for (const auto& [mono, c] : P.terms()) {
            for (const auto& [sym, e] : mono) {
                std::vector<SigmaTerm> img = generator_image(i, sym.idx);
                for (const SigmaTerm& t : img) {
                    // e * c * mono * coeff, sigma at sym.arg + t.arg
                    LPoly scaled;
                    scaled.add(mono, c * Rational(e) * t.coeff);
                    raw.emplace_back(sym.arg + t.arg, LFrac::of(scaled));
                }
            }
        }
        return raw;
    };
    SigmaElement acc;
    LFrac invden = LFrac::constant(Rational(1)) / LFrac::of(A.den);
    for (auto& [arg, coeff] : screen_poly(A.num)) sigma_add(acc, i, arg, coeff * invden);
    LFrac head = LFrac{A.num, A.den * A.den};
    for (auto& [arg, coeff] : screen_poly(A.den)) {
        LFrac c = LFrac::constant(Rational(-1)) * head * coeff;
        sigma_add(acc, i, arg, c);
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

bool LambdaRing::is_character(const LFrac& A) const {
    for (int i = 1; i <= colors(); ++i)
        if (!screening(i, A).empty()) return false;
    return true;
}

LFrac LambdaRing::lambda_sum(const Rational& a, bool reduced) const {
    LFrac s = LFrac::constant(Rational(0));
    for (int j = 1; j <= N; ++j) s = s + lambda(j, a);
    if (reduced) s = s - LFrac::constant(Rational(N));
    return s;
}

} // namespace gaudin
