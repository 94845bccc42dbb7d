#pragma once

#include "lie.hpp"

#include <map>
#include <vector>

namespace gaudin {

// symbol lambda_i(a): unprimed index i and exact rational shift a
struct LSym {
    int idx = 1;
    Rational arg;
    bool operator==(const LSym& o) const { return idx == o.idx && arg == o.arg; }
    bool operator<(const LSym& o) const { return idx != o.idx ? idx < o.idx : arg < o.arg; }
};

// sorted (symbol, exponent) list
using LMono = std::vector<std::pair<LSym, int>>;

class LPoly {
public:
    LPoly() = default;
    explicit LPoly(Rational c) {
        if (c != 0) t_.emplace(LMono{}, std::move(c));
    }
    static LPoly symbol(const LSym& s);

    bool is_zero() const { return t_.empty(); }
    const std::map<LMono, Rational>& terms() const { return t_; }

    LPoly operator-() const;
    LPoly operator+(const LPoly& o) const;
    LPoly operator-(const LPoly& o) const;
    LPoly operator*(const LPoly& o) const;
    LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
    bool operator==(const LPoly& o) const { return t_ == o.t_; }

    void add(const LMono& m, const Rational& c);
    std::string to_string() const;

private:
    std::map<LMono, Rational> t_;
};

// Element of the lambda ring, canonically represented over the unprimed
// symbols: a fraction with cross-multiplication equality. For B/C/D the
// primed and middle lambdas are eliminated eagerly through the defining
// relations, so denominators stay lambda-monomials.
struct LFrac {
    LPoly num;
    LPoly den{Rational(1)};

    static LFrac of(LPoly p) { return {std::move(p), LPoly(Rational(1))}; }
    static LFrac constant(const Rational& c) { return of(LPoly(c)); }
    bool is_zero() const { return num.is_zero(); }

    LFrac operator+(const LFrac& o) const;
    LFrac operator-(const LFrac& o) const;
    LFrac operator*(const LFrac& o) const;
    LFrac operator/(const LFrac& o) const;
    bool equals(const LFrac& o) const; // num*o.den == o.num*den
    std::string to_string() const;
};

// image of one screening operator: coefficients of sigma_i at canonical
// orbit representatives
using SigmaElement = std::map<Rational, LFrac>;

// The lambda ring of one classical family with its screening operators.
class LambdaRing {
public:
    LambdaRing(Family f, int rank_or_size);

    Family family;
    int N = 0;       // number of lambda indices
    int n = 0;       // colors 1..n (type A: N-1)
    Rational kappa;  // relation shift parameter (B/C/D)

    int colors() const { return family == Family::A ? N - 1 : n; }
    int prime(int i) const { return N - i + 1; }

    // lambda_j(a) for any j in 1..N, primed/middle indices eliminated
    LFrac lambda(int j, const Rational& a) const;

    // step of the sigma_i orbit lattice
    Rational step(int i) const;

    // the i-th screening operator, with sigma arguments reduced to canonical
    // representatives in [0, step)
    SigmaElement screening(int i, const LFrac& A) const;

    bool is_character(const LFrac& A) const;

    // first fundamental character sum_{j=1..N} lambda_j(a); subtracting the
    // constant N keeps it in the kernel and gives a nontrivial top component
    LFrac lambda_sum(const Rational& a, bool reduced) const;

private:
    struct SigmaTerm {
        Rational coeff;
        Rational arg;
    };
    // S~_i(lambda_j(a)) = lambda_j(a) * sum of coeff*sigma_i(arg)
    std::vector<SigmaTerm> generator_image(int i, int j) const;
    // sigma_i(b + step) = ratio(b) sigma_i(b)
    LFrac shift_ratio(int i, const Rational& b) const;
    void sigma_add(SigmaElement& acc, int i, const Rational& arg, const LFrac& coeff) const;
};

} // namespace gaudin
