#pragma once

#include "diffop.hpp"
#include "lambda_ring.hpp"

namespace gaudin {

// variable mu_i^(r), identified with F_ii[-r-1] * r!; degree -(r+1)
struct WSym {
    int idx = 1;
    int r = 0;
    friend auto operator<=>(const WSym&, const WSym&) = default;
};

using WMono = std::vector<std::pair<WSym, int>>;

class WPoly {
public:
    WPoly() = default;
    explicit WPoly(Rational c) {
        if (c != 0) t_.emplace(WMono{}, std::move(c));
    }
    static WPoly symbol(const WSym& s);

    bool is_zero() const { return t_.empty(); }
    const std::map<WMono, Rational>& terms() const { return t_; }

    WPoly operator-() const;
    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator*(const WPoly& o) const;
    WPoly& operator+=(const WPoly& o) { return *this = *this + o; }
    bool operator==(const WPoly& o) const { return t_ == o.t_; }

    // the derivation [tau, .]: mu_i^(r) -> mu_i^(r+1)
    WPoly derivative() const;
    // coefficient-wise partial derivative d/d mu_i^(r)
    WPoly partial(const WSym& s) const;
    int max_r() const;
    void add(const WMono& m, const Rational& c);
    std::string to_string() const;

private:
    std::map<WMono, Rational> t_;
};

template <>
inline void ScalarOp<WPoly>::scale(WPoly& x, const Rational& c) {
    x = x * WPoly(c);
}

// normal-ordered polynomial in mu's and tau, tau powers to the right
using WDiffElement = ScalarOp<WPoly>;

// deg mu_i^(r) = -r-1, extended multiplicatively
int wmono_degree(const WMono& m);

// The gr map: substitute lambda_i(a) -> 1 + sum_r mu_i^(r) a^r / r!, grade,
// and keep the maximum-degree homogeneous component. Components above the
// cutoff are exact (all degrees are <= 0), so the loop grows the cutoff only
// while everything in the window cancels.
struct GrResult {
    int degree = 0;
    WPoly top;
};
GrResult gr_map(const LFrac& A, int cap = 16);

// screening coefficients V_{i[0]} .. V_{i[R]} for the W-algebra of the given
// family (the V_n generating function depends on the type)
std::vector<WPoly> v_coefficients(int i, Family family, int n_or_N, int R);

WPoly screening_V(int i, const WPoly& P, Family family, int n_or_N);

bool is_W_element(const WPoly& P, Family family, int n_or_N);

// Langlands duality: B <-> C, A and D fixed
Family langlands_dual(Family f);

enum class HcKind { CdetChain, Elementary, Complete, BcdTrace, Pfaffian };

// Harish-Chandra images of the Hamiltonian generators as elements of
// U(h_-)[tau]: chains and symmetric functions in tau +- F_ii[-1].
WDiffElement hc_image(Family family, HcKind kind, int m, int n_or_N);

} // namespace gaudin
