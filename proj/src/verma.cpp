#include "verma.hpp"

#include <algorithm>

namespace gaudin {

namespace {

enum class Kind { Lower, Cartan, Raise };

Kind classify(const LieSpec& spec, const BasisPair& p) {
    if (p.first == p.second) return Kind::Cartan;
    return p.first > p.second ? Kind::Lower : Kind::Raise;
}

// weight of a monomial below the highest weight: lambda + sum of letter roots
WeightVec mono_weight(const LieSpec& spec, const WeightVec& lambda, const Mono& m) {
    WeightVec w = lambda;
    for (int b : m) {
        const BasisPair& p = spec.neg_basis()[static_cast<size_t>(b)];
        std::vector<Rational> root = spec.root_of_pair(p.first, p.second);
        for (size_t d = 0; d < w.size(); ++d) w[d] += root[d];
    }
    return w;
}

template <class K>
ModTerms<K> apply_canonical(const LieSpec& spec, const WeightVec& lambda, const BasisPair& p,
                            const Mono& m);

template <class K>
void apply_comb(const LieSpec& spec, const WeightVec& lambda, const LinComb& comb, const Mono& m,
                const K& scale, ModTerms<K>& acc) {
    for (const auto& [p, c] : comb) {
        ModTerms<K> part = apply_canonical<K>(spec, lambda, p, m);
        K f = scale * scalar_from_rational<K>(c);
        for (const auto& [mono, v] : part) detail::mod_add(acc, mono, v * f);
    }
}

template <class K>
ModTerms<K> apply_canonical(const LieSpec& spec, const WeightVec& lambda, const BasisPair& p,
                            const Mono& m) {
    ModTerms<K> out;
    switch (classify(spec, p)) {
        case Kind::Cartan: {
            WeightVec w = mono_weight(spec, lambda, m);
            detail::mod_add(out, m, scalar_from_rational<K>(w[static_cast<size_t>(p.first - 1)]));
            return out;
        }
        case Kind::Lower: {
            int x = spec.neg_index(p);
            if (m.empty() || x <= m.front()) {
                Mono r;
                r.reserve(m.size() + 1);
                r.push_back(x);
                r.insert(r.end(), m.begin(), m.end());
                detail::mod_add(out, r, scalar_from_rational<K>(Rational(1)));
                return out;
            }
            break;
        }
        case Kind::Raise: {
            if (m.empty()) return out; // n_+ annihilates 1_lambda
            break;
        }
    }
    // X F_{m0} rest = F_{m0} (X rest) + [X, F_{m0}] rest
    const BasisPair head = spec.neg_basis()[static_cast<size_t>(m.front())];
    Mono rest(m.begin() + 1, m.end());
    ModTerms<K> inner = apply_canonical<K>(spec, lambda, p, rest);
    for (const auto& [mono, v] : inner) {
        ModTerms<K> re = apply_canonical<K>(spec, lambda, head, mono);
        for (const auto& [mono2, v2] : re) detail::mod_add(out, mono2, v * v2);
    }
    LinComb br = spec.bracket(p.first, p.second, head.first, head.second);
    apply_comb(spec, lambda, br, rest, scalar_from_rational<K>(Rational(1)), out);
    return out;
}

} // namespace

template <class K>
ModTerms<K> apply_pair(const LieSpec& spec, const WeightVec& lambda, int i, int j, const Mono& m) {
    LieSpec::Canon c = spec.canonicalize(i, j);
    ModTerms<K> out;
    if (c.sign == 0) return out;
    ModTerms<K> part = apply_canonical<K>(spec, lambda, {c.i, c.j}, m);
    K f = scalar_from_rational<K>(c.sign);
    for (const auto& [mono, v] : part) detail::mod_add(out, mono, v * f);
    return out;
}

template <class K>
ModTerms<K> straighten(const LieSpec& spec, const WeightVec& lambda,
                       const std::vector<BasisPair>& word) {
    ModTerms<K> state;
    detail::mod_add(state, Mono{}, scalar_from_rational<K>(Rational(1)));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        ModTerms<K> next;
        for (const auto& [m, c] : state) {
            ModTerms<K> part = apply_pair<K>(spec, lambda, it->first, it->second, m);
            for (const auto& [mono, v] : part) detail::mod_add(next, mono, c * v);
        }
        state = std::move(next);
    }
    return state;
}

template <class K>
WeightVec weight_of(const TensorState<K>& s) {
    if (s.is_zero()) throw InputError("weight of the zero state is undefined (empty)");
    const ModuleContext& ctx = *s.ctx();
    bool first = true;
    WeightVec common;
    for (const auto& [tuple, c] : s.terms()) {
        WeightVec w(static_cast<size_t>(ctx.spec.diag_size), Rational(0));
        for (int k = 0; k < ctx.ell(); ++k) {
            WeightVec wk = mono_weight(ctx.spec, ctx.weights[static_cast<size_t>(k)],
                                       tuple[static_cast<size_t>(k)]);
            for (size_t d = 0; d < w.size(); ++d) w[d] += wk[d];
        }
        if (first) {
            common = w;
            first = false;
        } else if (w != common) {
            throw InputError("state is not weight-homogeneous");
        }
    }
    return common;
}

ExactSlices apply_diffop(const DiffOp& op, const ExactState& s) {
    ExactSlices out;
    for (const auto& [key, f] : op.terms()) {
        ExactState acted = s.act_word(key.word);
        auto& slice = out[key.ddeg];
        for (const auto& [tuple, c] : acted.terms()) {
            RatFunc add = f * RatFunc(c);
            auto [it, inserted] = slice.try_emplace(tuple, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) slice.erase(it);
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

FloatSlicesAt apply_diffop_at(const DiffOp& op, const FloatState& s,
                              const std::vector<Rational>& samples) {
    FloatSlicesAt out;
    std::vector<BigFloat> fs(samples.size());
    for (const auto& [key, f] : op.terms()) {
        for (size_t k = 0; k < samples.size(); ++k) fs[k] = to_big_float(f.eval(samples[k]));
        FloatState acted = s.act_word(key.word);
        auto& slice = out[key.ddeg];
        for (const auto& [tuple, c] : acted.terms()) {
            auto [it, inserted] =
                slice.try_emplace(tuple, std::vector<BigFloat>(samples.size(), BigFloat(0)));
            for (size_t k = 0; k < samples.size(); ++k) it->second[k] += fs[k] * c;
        }
    }
    return out;
}

template ModTerms<Rational> apply_pair<Rational>(const LieSpec&, const WeightVec&, int, int, const Mono&);
template ModTerms<BigFloat> apply_pair<BigFloat>(const LieSpec&, const WeightVec&, int, int, const Mono&);
template ModTerms<Rational> straighten<Rational>(const LieSpec&, const WeightVec&, const std::vector<BasisPair>&);
template WeightVec weight_of<Rational>(const TensorState<Rational>&);
template WeightVec weight_of<BigFloat>(const TensorState<BigFloat>&);

} // namespace gaudin
