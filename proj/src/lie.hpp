#pragma once

#include "rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gaudin {

enum class Family { A, B, C, D };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Weight as values on the diagonal basis: E_11..E_NN for type A,
// F_11..F_nn for types B/C/D.
using WeightVec = std::vector<Rational>;

using BasisPair = std::pair<int, int>;
// linear combination of canonical basis pairs
using LinComb = std::map<BasisPair, Rational>;

// Classical Lie algebra data: gl_N (type A) or the F_ij = E_ij - theta E_j'i'
// realizations of o_N / sp_2n inside gl_N. Generator letters are index pairs
// (i,j) in 1..N; canonical representatives resolve the linear relations
// F_ij = -theta_ij F_j'i' of the B/C/D spanning sets.
class LieSpec {
public:
    // A: second argument is the matrix size N; B/C/D: the rank n.
    static LieSpec make(Family f, int rank_or_size);

    Family family;
    int N = 0;         // matrix size
    int n = 0;         // rank of the root system (A: N-1)
    int diag_size = 0; // weight-vector length: N for A, n for B/C/D

    int prime(int i) const { return N - i + 1; }
    int eps(int i) const { return (family == Family::C && i > n) ? -1 : 1; }
    Rational theta(int i, int j) const { return Rational(eps(i) * eps(j)); }

    // F_ij = sign * F_(ci,cj) with (ci,cj) canonical; sign 0 when F_ij = 0
    struct Canon {
        Rational sign;
        int i = 0, j = 0;
    };
    Canon canonicalize(int i, int j) const;

    // exact structure constants, computed from the E_ij realization
    LinComb bracket(int i, int j, int k, int l) const;
    LinComb bracket_combs(const LinComb& x, const LinComb& y) const;

    // root of the canonical pair (i,j), i != j, as values on the diagonal
    std::vector<Rational> root_of_pair(int i, int j) const;

    // simple root alpha_l evaluated on the d-th diagonal basis element
    Rational simple_root_on_diag(int l, int d) const;
    // Chevalley coroot h_l expanded over the diagonal basis
    std::vector<Rational> coroot_diag(int l) const;
    // a_{ls} = alpha_s(h_l), the pairing <coroot_l, alpha_s>
    Rational cartan(int l, int s) const;
    // lambda(h_l)
    Rational pair_coroot_weight(int l, const WeightVec& lambda) const;
    // chi(F_ii) / chi(E_ii) for any diagonal index i in 1..N
    Rational functional_on_diag(int i, const WeightVec& chi) const;

    // Chevalley generators as scaled letters; coefficients chosen so that
    // [e_l, f_l] = h_l holds exactly in the F basis.
    struct Chevalley {
        Rational e_coeff;
        BasisPair e;
        Rational f_coeff;
        BasisPair f;
    };
    Chevalley chevalley(int l) const;

    int rank() const { return family == Family::A ? N - 1 : n; }

    // negative-root basis in the fixed PBW order (height, then lex)
    const std::vector<BasisPair>& neg_basis() const { return neg_basis_; }
    int neg_index(const BasisPair& p) const;
    const std::vector<BasisPair>& pos_basis() const { return pos_basis_; }
    // all canonical pairs: lower, diagonal (1..diag_size), upper
    std::vector<BasisPair> all_basis() const;

    std::string name() const;

private:
    void build_bases();
    std::vector<BasisPair> neg_basis_, pos_basis_;
    std::map<BasisPair, int> neg_index_;
};

} // namespace gaudin
