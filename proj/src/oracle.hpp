#pragma once

#include "operators.hpp"

#include <functional>

namespace gaudin {

// Noncommutative complete/elementary symmetric functions in ordered
// variables: h_m sums products x_{i1}..x_{im} with i1 <= ... <= im,
// e_m with i1 > ... > im.
template <class R>
ScalarOp<R> ncsf_complete(const std::vector<ScalarOp<R>>& x, int m) {
    if (m <= 0) throw InputError("symmetric-function degree must be positive");
    ScalarOp<R> out;
    std::function<void(int, int, const ScalarOp<R>&, bool)> rec =
        [&](int left, int lo, const ScalarOp<R>& acc, bool first) {
            if (left == 0) {
                out += acc;
                return;
            }
            for (int i = lo; i < static_cast<int>(x.size()); ++i)
                rec(left - 1, i, first ? x[static_cast<size_t>(i)] : acc * x[static_cast<size_t>(i)],
                    false);
        };
    rec(m, 0, ScalarOp<R>(), true);
    return out;
}

template <class R>
ScalarOp<R> ncsf_elementary(const std::vector<ScalarOp<R>>& x, int m) {
    const int p = static_cast<int>(x.size());
    if (m <= 0 || m > p) throw InputError("elementary symmetric degree out of range");
    ScalarOp<R> out;
    std::function<void(int, int, const ScalarOp<R>&, bool)> rec =
        [&](int left, int hi, const ScalarOp<R>& acc, bool first) {
            if (left == 0) {
                out += acc;
                return;
            }
            for (int i = hi; i >= left - 1; --i)
                rec(left - 1, i - 1, first ? x[static_cast<size_t>(i)] : acc * x[static_cast<size_t>(i)],
                    false);
        };
    rec(m, p - 1, ScalarOp<R>(), true);
    return out;
}

// formal z-series with ScalarOp coefficients, truncated at order K
template <class R>
class OpSeries {
public:
    explicit OpSeries(int K) : c_(static_cast<size_t>(K) + 1) {}
    static OpSeries unit(int K, const R& one) {
        OpSeries s(K);
        s.c_[0] = ScalarOp<R>::term(0, one);
        return s;
    }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    ScalarOp<R>& coeff(int k) { return c_.at(static_cast<size_t>(k)); }
    const ScalarOp<R>& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }

    OpSeries operator+(const OpSeries& o) const {
        OpSeries r(*this);
        for (int k = 0; k <= order(); ++k) r.c_[static_cast<size_t>(k)] += o.coeff(k);
        return r;
    }
    OpSeries operator*(const OpSeries& o) const {
        OpSeries r(order());
        for (int a = 0; a <= order(); ++a)
            for (int b = 0; a + b <= order(); ++b)
                r.c_[static_cast<size_t>(a + b)] += coeff(a) * o.coeff(b);
        return r;
    }
    // multiplicative inverse; needs an invertible constant term, which here
    // is always the unit operator
    OpSeries inverse(const R& one) const;

private:
    std::vector<ScalarOp<R>> c_;
};

enum class OpKind { Rdet, Cdet, AntisymTrace, SymTrace, TracePower, BcdTrace, Pfaffian };

std::string op_kind_name(OpKind k);
OpKind op_kind_from_name(const std::string& s);
bool op_kind_needs_degree(OpKind k);

// Hamiltonian-side operator for the given kind (m = trace degree / power)
DiffOp build_operator(const GaudinInstance& inst, OpKind kind, int m);

// predicted eigenvalue operator, exact coefficients
ScalarDiffOp oracle_exact(const BetheConfig& cfg, OpKind kind, int m);
// the same formula over truncated jets at the sample point u0
JetOp oracle_jet(const BetheConfig& cfg, OpKind kind, int m, const BigFloat& u0, int order);

// Generating-function eigenvalue for types B/D as a z-series to order K
std::vector<ScalarDiffOp> eig_genfun_bd(const BetheConfig& cfg, int K);
// z-series inverse over the exact scalar operators
std::vector<ScalarDiffOp> series_inverse(const std::vector<ScalarDiffOp>& a);

struct SliceCheck {
    int k = 0;
    bool pass = false;
    std::string deviation; // "0" when equal; max |dev| or a mismatch witness otherwise
};

struct VerifyReport {
    bool bae_ok = false;
    std::vector<std::string> bae_residuals;
    bool vector_nonzero = false;
    std::string refusal; // set when certification was refused (and not forced)
    std::vector<SliceCheck> slices;
    bool pass = false;
};

inline const char* kVerifyFloatTolerance = "1e-20";

// Slice-by-slice comparison of the operator action on the Bethe vector
// against the predicted eigenvalue operator. Exact roots: canonical-form
// equality per d-degree. Float roots: max coefficient deviation over sample
// points away from all poles, threshold kVerifyFloatTolerance.
// Refuses to certify on BAE violation or a zero Bethe vector unless `force`
// is set (the slice comparison is still reported for diagnostics).
VerifyReport verify_eigen(const BetheConfig& cfg, OpKind kind, int m, bool force = false);

struct MasterFnReport {
    bool supported = false;
    std::string reason;
    bool pass = false;
};

// Population-side differential operator built from ln' (T_a y_{a-1} / y_a)
// compared coefficient-wise against the eigenvalue operator: type A against
// rdet, type B against the z^(2n) generating-function coefficient, type C
// against the m = 2n+1 elementary-trace eigenvalue. Needs chi = 0, integer
// weights and exact roots.
MasterFnReport masterfn_crosscheck(const BetheConfig& cfg);

} // namespace gaudin
