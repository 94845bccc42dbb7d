#pragma once

#include "verma.hpp"

#include <optional>

namespace gaudin {

// Gaudin data: distinct evaluation points z_a, one Verma highest weight per
// point, and a Cartan twist chi (vanishing on n_+ and n_-).
struct GaudinInstance {
    LieSpec spec;
    std::vector<WeightVec> weights;
    std::vector<Rational> z;
    WeightVec chi;

    int ell() const { return static_cast<int>(z.size()); }
    ModuleCtxPtr ctx() const;
    void validate() const; // distinctness + length checks
};

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bethe roots with colors. Roots are exact rationals (exact mode) or
// high-precision floats (when the BAE solution is irrational).
struct BetheConfig {
    GaudinInstance inst;
    std::vector<int> colors; // 1..rank, one per root
    bool exact = true;
    std::vector<Rational> w_exact;
    std::vector<BigFloat> w_float;

    int m() const { return static_cast<int>(colors.size()); }
    BigFloat root_float(int j) const {
        return exact ? to_big_float(w_exact[static_cast<size_t>(j)]) : w_float[static_cast<size_t>(j)];
    }
    void validate() const; // pairwise distinct, disjoint from z
};

// residual_j = sum_i <ac_{c_j},lambda_i>/(w_j - z_i)
//            - sum_{s!=j} <ac_{c_j},alpha_{c_s}>/(w_j - w_s) - <ac_{c_j},chi>
std::vector<Rational> bae_residual_exact(const BetheConfig& cfg);
std::vector<BigFloat> bae_residual_float(const BetheConfig& cfg);

inline constexpr double kBaeToleranceExp = -30; // success: max |residual| < 1e-30
BigFloat bae_tolerance();

struct SolveOptions {
    int max_iterations = 200;
};

// Newton refinement of the seeds in high precision, with an exact-rational
// shortcut when the system is a single root with a linear closed form.
// Throws SolveError on: no finite solution, singular Jacobian, divergence,
// root collision.
BetheConfig bae_solve(const GaudinInstance& inst, const std::vector<int>& colors,
                      const std::vector<BigFloat>& seeds, const SolveOptions& opts = {});

// The weight-(sum lambda - sum alpha) Bethe vector, summed over all ordered
// partitions of the root set into ell ordered blocks.
ExactState bethe_vector_exact(const BetheConfig& cfg);
FloatState bethe_vector_float(const BetheConfig& cfg);

// number of (assignment, block-order) pairs the enumeration visits
BigInt ordered_partition_count(int m, int ell);

// Eigenvalue function for one diagonal index: a constant plus simple poles at
// the z_a (exact residues) and at the Bethe roots.
struct EigenFn {
    Rational constant;                                  // -chi(F_ii)
    std::vector<std::pair<Rational, Rational>> z_part;  // (residue, pole)
    bool roots_exact = true;
    std::vector<std::pair<Rational, Rational>> w_exact_part;
    std::vector<std::pair<Rational, BigFloat>> w_float_part;

    RatFunc to_ratfunc() const; // exact roots only
    Jet jet_at(const BigFloat& u0, int order) const;
    bool is_pole_near(const Rational& u, const Rational& min_dist) const;
};

// cal E_ii(u) / cal F_ii(u) for i = 1..diag_size
std::vector<EigenFn> eigen_functions(const BetheConfig& cfg);

} // namespace gaudin
