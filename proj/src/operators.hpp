#pragma once

#include "bethe.hpp"

namespace gaudin {

// E_ij(u) = sum_a (E_ij)_a/(u-z_a) - chi(E_ij), and the F version for B/C/D.
// sign = -1 builds the flipped current used by the stability checks.
class CurrentMatrix {
public:
    CurrentMatrix(const GaudinInstance& inst, int sign = +1);
    const DiffOp& entry(int i, int j) const { return e_.at(idx(i, j)); }
    int size() const { return N_; }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>((i - 1) * N_ + (j - 1)); }
    int N_;
    std::vector<DiffOp> e_;
};

// dense exact matrix on (C^N)^{x m}, indexed by base-N multi-indices
class TensorMatrix {
public:
    TensorMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {}
    static TensorMatrix identity(int dim);
    int dim() const { return dim_; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    TensorMatrix operator*(const TensorMatrix& o) const;
    TensorMatrix operator+(const TensorMatrix& o) const;
    TensorMatrix operator-(const TensorMatrix& o) const;
    TensorMatrix scaled(const Rational& c) const;
    bool operator==(const TensorMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
    Rational trace() const;

private:
    int dim_;
    std::vector<Rational> a_;
};

// permutation/contraction operators on (C^N)^{x m}
TensorMatrix perm_op(int N, int m, int a, int b);                    // P_ab
TensorMatrix contraction_op(const LieSpec& spec, int m, int a, int b); // Q_ab (eps signs in type C)

// images of the normalized (anti)symmetrizers of Sym_m on (C^N)^{x m}
TensorMatrix antisymmetrizer(int N, int m);
TensorMatrix symmetrizer(int N, int m);

// Brauer-algebra symmetrizer S^(m): lexicographic product of the
// (1 +- P_ab/(b-a) - Q_ab/denom) factors, prefactor 1/m!.
// Throws on a vanishing denominator, reporting the offending pair.
TensorMatrix brauer_symmetrizer(const LieSpec& spec, int m);

// gamma_m(omega) = (omega+m-2)/(omega+2m-2)
Rational gamma_factor(const Rational& omega, int m);

// row/column determinant of  delta*d + sign*X(u)  over the given current
enum class DetOrder { Row, Column };
DiffOp det_operator(const GaudinInstance& inst, DetOrder order, int sign);
inline DiffOp rdet_operator(const GaudinInstance& inst) { return det_operator(inst, DetOrder::Row, +1); }
// the cdet(d - E(u)) variant used by the population comparison
inline DiffOp cdet_operator(const GaudinInstance& inst) { return det_operator(inst, DetOrder::Column, -1); }

// tr S (d + X(u))_1 ... (d + X(u))_m with scalar matrix S; slot order can be
// reversed for the reversal-stability checks.
DiffOp trace_with_matrix(const CurrentMatrix& cur, const TensorMatrix& S, int m,
                         const Rational& prefactor, bool reverse_slots = false);

enum class ProjectorKind { Antisymmetrizer, Symmetrizer };
DiffOp projector_trace_operator(const GaudinInstance& inst, int m, ProjectorKind kind,
                                int sign = +1, bool reverse_slots = false);

// tr (d + E^t(u))^k
DiffOp trace_power_operator(const GaudinInstance& inst, int k);

// gamma_m(omega) tr S^(m) (d+F(u))_1...(d+F(u))_m, omega = N (B/D), -2n (C)
DiffOp bcd_trace_operator(const GaudinInstance& inst, int m, int sign = +1);

// Pf F~(u), type D; `reversed` multiplies each permutation product in
// reverse order (the anti-automorphism image)
DiffOp pfaffian_operator(const GaudinInstance& inst, int sign = +1, bool reversed = false);

// all monomial tensor states of total lowering depth <= depth
std::vector<ExactState> spanning_states(const ModuleCtxPtr& ctx, int depth);
// deterministic pseudo-random monomial states
std::vector<ExactState> random_states(const ModuleCtxPtr& ctx, int count, int depth, uint64_t seed);

bool operators_agree_on(const DiffOp& a, const DiffOp& b, const std::vector<ExactState>& states);

// Operational form of the involution-stability lemmas, tested on states:
// type A compares the projector traces against the reversed slot order, and
// B/C/D compare the flipped-current build against the original.
bool sigma_stability_check(const GaudinInstance& inst, int m, const std::vector<ExactState>& states);

// flipped + reversed Pfaffian acts as (-1)^n times the original
bool pfaffian_sign_check(const GaudinInstance& inst, const std::vector<ExactState>& states);

} // namespace gaudin
