#pragma once

#include "diffop.hpp"
#include "lie.hpp"

#include <memory>

namespace gaudin {

// PBW monomial of a Verma module: nondecreasing sequence of negative-root
// basis indices, denoting the product F_{b1} F_{b2} ... F_{bk} 1_lambda
// (rightmost factor acts first).
using Mono = std::vector<int>;

template <class K>
using ModTerms = std::map<Mono, K>;

template <class K>
K scalar_from_rational(const Rational& q);
template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) { return q; }
template <>
inline BigFloat scalar_from_rational<BigFloat>(const Rational& q) { return to_big_float(q); }

inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const BigFloat& x) { return x == 0; }

namespace detail {
template <class K>
void mod_add(ModTerms<K>& acc, const Mono& m, const K& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (scalar_is_zero(it->second)) acc.erase(it);
    }
}
} // namespace detail

// Image of F_(i,j) . (monomial) in M_lambda, straightened to the PBW basis.
// Cartan letters act diagonally, raising letters annihilate 1_lambda, and
// out-of-order lowering pairs are swapped through the bracket; the rewrite
// terminates because (length, inversion count) drops lexicographically.
template <class K>
ModTerms<K> apply_pair(const LieSpec& spec, const WeightVec& lambda, int i, int j, const Mono& m);

// Straighten an arbitrary generator word (leftmost letter outermost) applied
// to the highest-weight vector.
template <class K>
ModTerms<K> straighten(const LieSpec& spec, const WeightVec& lambda,
                       const std::vector<BasisPair>& word);

struct ModuleContext {
    LieSpec spec;
    std::vector<WeightVec> weights; // lambda_1 .. lambda_ell
    int ell() const { return static_cast<int>(weights.size()); }
};
using ModuleCtxPtr = std::shared_ptr<const ModuleContext>;

using MonoTuple = std::vector<Mono>;

// Exact (K = Rational) or high-precision float (K = BigFloat) element of
// M_{lambda_1} x ... x M_{lambda_ell}; sparse, no zero coefficients.
template <class K>
class TensorState {
public:
    TensorState() = default;
    explicit TensorState(ModuleCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static TensorState highest_weight(ModuleCtxPtr ctx) {
        TensorState s(ctx);
        s.terms_.emplace(MonoTuple(static_cast<size_t>(ctx->ell())), scalar_from_rational<K>(Rational(1)));
        return s;
    }

    const ModuleCtxPtr& ctx() const { return ctx_; }
    const std::map<MonoTuple, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const MonoTuple& t, const K& c) {
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    TensorState operator+(const TensorState& o) const {
        TensorState r(*this);
        for (const auto& [t, c] : o.terms_) r.add(t, c);
        return r;
    }
    TensorState operator-(const TensorState& o) const {
        TensorState r(*this);
        for (const auto& [t, c] : o.terms_) r.add(t, -c);
        return r;
    }
    TensorState scaled(const K& f) const {
        TensorState r(ctx_);
        if (scalar_is_zero(f)) return r;
        for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * f);
        return r;
    }
    bool operator==(const TensorState& o) const { return terms_ == o.terms_; }

    // c * X_(i,j) applied at the given tensor factor
    TensorState act(int i, int j, int site, const Rational& coeff = Rational(1)) const {
        if (site < 1 || site > ctx_->ell()) throw InputError("site index out of range");
        TensorState r(ctx_);
        const WeightVec& lam = ctx_->weights[static_cast<size_t>(site - 1)];
        K cf = scalar_from_rational<K>(coeff);
        for (const auto& [tuple, c] : terms_) {
            ModTerms<K> res = apply_pair<K>(ctx_->spec, lam, i, j, tuple[static_cast<size_t>(site - 1)]);
            for (const auto& [m, v] : res) {
                MonoTuple t = tuple;
                t[static_cast<size_t>(site - 1)] = m;
                r.add(t, c * v * cf);
            }
        }
        return r;
    }

    TensorState act_word(const Word& word) const {
        TensorState s = *this;
        for (auto it = word.rbegin(); it != word.rend(); ++it) s = s.act(it->i, it->j, it->site);
        return s;
    }

private:
    ModuleCtxPtr ctx_;
    std::map<MonoTuple, K> terms_;
};

using ExactState = TensorState<Rational>;
using FloatState = TensorState<BigFloat>;

// Common h-weight of all terms of the state; throws on the zero state or if
// the terms disagree.
template <class K>
WeightVec weight_of(const TensorState<K>& s);

// Result of applying a DiffOp to a u-independent state: for each d-degree,
// a function-of-u-weighted combination of tensor monomials.
using ExactSlices = std::map<int, std::map<MonoTuple, RatFunc>>;
ExactSlices apply_diffop(const DiffOp& op, const ExactState& s);

// Float-mode application, with every coefficient function evaluated at the
// given exact sample points (one value per point and monomial).
using FloatSlicesAt = std::map<int, std::map<MonoTuple, std::vector<BigFloat>>>;
FloatSlicesAt apply_diffop_at(const DiffOp& op, const FloatState& s,
                              const std::vector<Rational>& samples);

extern template ModTerms<Rational> apply_pair<Rational>(const LieSpec&, const WeightVec&, int, int, const Mono&);
extern template ModTerms<BigFloat> apply_pair<BigFloat>(const LieSpec&, const WeightVec&, int, int, const Mono&);
extern template ModTerms<Rational> straighten<Rational>(const LieSpec&, const WeightVec&, const std::vector<BasisPair>&);
extern template WeightVec weight_of<Rational>(const TensorState<Rational>&);
extern template WeightVec weight_of<BigFloat>(const TensorState<BigFloat>&);

} // namespace gaudin
