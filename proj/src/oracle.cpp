#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gaudin {

template <class R>
OpSeries<R> OpSeries<R>::inverse(const R& one) const {
    // constant term must be the unit; then G_j = -sum_{i>=1} A_i G_{j-i}
    OpSeries<R> g = OpSeries<R>::unit(order(), one);
    for (int j = 1; j <= order(); ++j) {
        ScalarOp<R> acc;
        for (int i = 1; i <= j; ++i) acc += coeff(i) * g.coeff(j - i);
        g.coeff(j) = -acc;
    }
    return g;
}

template class OpSeries<RatFunc>;
template class OpSeries<Jet>;

std::string op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::Rdet: return "rdet";
        case OpKind::Cdet: return "cdet";
        case OpKind::AntisymTrace: return "antisym-trace";
        case OpKind::SymTrace: return "sym-trace";
        case OpKind::TracePower: return "trace-power";
        case OpKind::BcdTrace: return "bcd-trace";
        case OpKind::Pfaffian: return "pfaffian";
    }
    return "?";
}

OpKind op_kind_from_name(const std::string& s) {
    for (OpKind k : {OpKind::Rdet, OpKind::Cdet, OpKind::AntisymTrace, OpKind::SymTrace,
                     OpKind::TracePower, OpKind::BcdTrace, OpKind::Pfaffian})
        if (op_kind_name(k) == s) return k;
    throw InputError("unknown operator kind '" + s + "'");
}

bool op_kind_needs_degree(OpKind k) {
    return k == OpKind::AntisymTrace || k == OpKind::SymTrace || k == OpKind::TracePower ||
           k == OpKind::BcdTrace;
}

DiffOp build_operator(const GaudinInstance& inst, OpKind kind, int m) {
    switch (kind) {
        case OpKind::Rdet: return rdet_operator(inst);
        case OpKind::Cdet: return cdet_operator(inst);
        case OpKind::AntisymTrace:
            return projector_trace_operator(inst, m, ProjectorKind::Antisymmetrizer);
        case OpKind::SymTrace: return projector_trace_operator(inst, m, ProjectorKind::Symmetrizer);
        case OpKind::TracePower: return trace_power_operator(inst, m);
        case OpKind::BcdTrace: return bcd_trace_operator(inst, m);
        case OpKind::Pfaffian: return pfaffian_operator(inst);
    }
    throw InputError("unknown operator kind");
}

namespace {

// shared oracle formulas over any differential ring
template <class R>
struct Factors {
    R one;
    std::vector<R> eig; // cal E_ii / cal F_ii, i = 1..diag_size
};

template <class R>
ScalarOp<R> dplus(const Factors<R>& f, const R& g) {
    ScalarOp<R> s = ScalarOp<R>::term(1, f.one);
    s += ScalarOp<R>::term(0, g);
    return s;
}

template <class R>
ScalarOp<R> dbare(const Factors<R>& f) {
    return ScalarOp<R>::term(1, f.one);
}

template <class R>
std::vector<ScalarOp<R>> type_a_slots(const Factors<R>& f) {
    std::vector<ScalarOp<R>> x;
    for (const R& e : f.eig) x.push_back(dplus(f, e));
    return x;
}

// B: (d+F_11 .. d+F_nn, d-F_nn .. d-F_11); C inserts a bare d in the middle
template <class R>
std::vector<ScalarOp<R>> mirror_slots(const Factors<R>& f, bool with_middle, int drop_plus,
                                      int drop_minus) {
    const int n = static_cast<int>(f.eig.size());
    std::vector<ScalarOp<R>> x;
    for (int i = 1; i <= n - drop_plus; ++i) x.push_back(dplus(f, f.eig[static_cast<size_t>(i - 1)]));
    if (with_middle) x.push_back(dbare(f));
    for (int i = n - drop_minus; i >= 1; --i)
        x.push_back(dplus(f, -f.eig[static_cast<size_t>(i - 1)]));
    return x;
}

template <class R>
ScalarOp<R> unit_op(const Factors<R>& f) {
    return ScalarOp<R>::term(0, f.one);
}

inline RatFunc scale_half(const RatFunc&) { return RatFunc(Rational(1, 2)); }
inline Jet scale_half(const Jet& one) {
    Jet h = one;
    h.scale_by(Rational(1, 2));
    return h;
}

template <class R>
ScalarOp<R> oracle_formula(const LieSpec& spec, OpKind kind, int m, const Factors<R>& f) {
    switch (spec.family) {
        case Family::A: {
            std::vector<ScalarOp<R>> x = type_a_slots(f);
            const int N = spec.N;
            switch (kind) {
                case OpKind::Rdet: return ncsf_elementary(x, N); // (d+E_NN)...(d+E_11)
                case OpKind::Cdet: {
                    // cdet(d - E(u)) pairs with (d-E_11)...(d-E_NN)
                    ScalarOp<R> prod = unit_op(f);
                    for (int i = 1; i <= N; ++i) prod = prod * dplus(f, -f.eig[static_cast<size_t>(i - 1)]);
                    return prod;
                }
                case OpKind::AntisymTrace:
                    if (m == 0) return unit_op(f);
                    return ncsf_elementary(x, m);
                case OpKind::SymTrace:
                    if (m == 0) return unit_op(f);
                    return ncsf_complete(x, m);
                case OpKind::TracePower: {
                    if (m == 0) {
                        ScalarOp<R> c = unit_op(f);
                        ScalarOp<R> out;
                        for (int i = 0; i < N; ++i) out += c;
                        return out;
                    }
                    OpSeries<R> total(m);
                    for (int i = 1; i <= N; ++i) {
                        OpSeries<R> term = OpSeries<R>::unit(m, f.one);
                        for (int a = 1; a <= i; ++a) {
                            // (1 - z x_a)^{-1} = sum_k x_a^k z^k
                            OpSeries<R> geo(m);
                            ScalarOp<R> pw = unit_op(f);
                            for (int k = 0; k <= m; ++k) {
                                geo.coeff(k) = pw;
                                if (k < m) pw = pw * x[static_cast<size_t>(a - 1)];
                            }
                            term = term * geo;
                        }
                        for (int a = i - 1; a >= 1; --a) {
                            OpSeries<R> lin(m);
                            lin.coeff(0) = unit_op(f);
                            if (m >= 1) lin.coeff(1) = -x[static_cast<size_t>(a - 1)];
                            term = term * lin;
                        }
                        total = total + term;
                    }
                    return total.coeff(m);
                }
                default: throw InputError("operator kind not available in type A");
            }
        }
        case Family::B: {
            if (kind != OpKind::BcdTrace) throw InputError("type B supports bcd-trace");
            std::vector<ScalarOp<R>> x = mirror_slots(f, false, 0, 0);
            return ncsf_complete(x, m);
        }
        case Family::C: {
            if (kind != OpKind::BcdTrace) throw InputError("type C supports bcd-trace");
            if (m < 1 || m > 2 * spec.n + 1) throw InputError("type C eigenvalue needs 1 <= m <= 2n+1");
            std::vector<ScalarOp<R>> x = mirror_slots(f, true, 0, 0);
            return ncsf_elementary(x, m);
        }
        case Family::D: {
            if (kind == OpKind::Pfaffian) {
                // (F_11 - d)...(F_nn - d) applied to 1: the d-free slice
                ScalarOp<R> prod = unit_op(f);
                for (int i = 1; i <= spec.n; ++i) {
                    ScalarOp<R> factor = ScalarOp<R>::term(0, f.eig[static_cast<size_t>(i - 1)]);
                    factor += ScalarOp<R>::term(1, -f.one);
                    prod = prod * factor;
                }
                return prod.slice(0);
            }
            if (kind != OpKind::BcdTrace) throw InputError("type D supports bcd-trace and pfaffian");
            std::vector<ScalarOp<R>> first = mirror_slots(f, false, 1, 0);
            std::vector<ScalarOp<R>> second = mirror_slots(f, false, 0, 1);
            ScalarOp<R> h1 = ncsf_complete(first, m);
            ScalarOp<R> h2 = ncsf_complete(second, m);
            return (h1 + h2) * ScalarOp<R>::term(0, scale_half(f.one));
        }
    }
    throw InputError("unreachable oracle family");
}

Factors<RatFunc> exact_factors(const BetheConfig& cfg) {
    Factors<RatFunc> f;
    f.one = RatFunc(Rational(1));
    for (const EigenFn& e : eigen_functions(cfg)) f.eig.push_back(e.to_ratfunc());
    return f;
}

Factors<Jet> jet_factors(const BetheConfig& cfg, const BigFloat& u0, int order) {
    Factors<Jet> f;
    f.one = Jet(order, BigFloat(1));
    for (const EigenFn& e : eigen_functions(cfg)) f.eig.push_back(e.jet_at(u0, order));
    return f;
}

} // namespace

ScalarDiffOp oracle_exact(const BetheConfig& cfg, OpKind kind, int m) {
    if (!cfg.exact) throw InputError("exact oracle needs exact roots");
    return oracle_formula(cfg.inst.spec, kind, m, exact_factors(cfg));
}

JetOp oracle_jet(const BetheConfig& cfg, OpKind kind, int m, const BigFloat& u0, int order) {
    return oracle_formula(cfg.inst.spec, kind, m, jet_factors(cfg, u0, order));
}

std::vector<ScalarDiffOp> eig_genfun_bd(const BetheConfig& cfg, int K) {
    const LieSpec& spec = cfg.inst.spec;
    if (spec.family != Family::B && spec.family != Family::D)
        throw InputError("generating-function eigenvalue needs family B or D");
    Factors<RatFunc> f = exact_factors(cfg);
    const int n = spec.n;
    auto lin = [&](const ScalarDiffOp& X) {
        OpSeries<RatFunc> s(K);
        s.coeff(0) = ScalarDiffOp::term(0, f.one);
        if (K >= 1) s.coeff(1) = X;
        return s;
    };
    auto dplus_op = [&](const RatFunc& g) {
        ScalarDiffOp s = ScalarDiffOp::term(1, f.one);
        s += ScalarDiffOp::term(0, g);
        return s;
    };
    OpSeries<RatFunc> total = OpSeries<RatFunc>::unit(K, f.one);
    for (int i = 1; i <= n; ++i) total = total * lin(dplus_op(-f.eig[static_cast<size_t>(i - 1)]));
    if (spec.family == Family::D) {
        OpSeries<RatFunc> mid = lin(ScalarDiffOp::term(1, f.one)).inverse(f.one);
        total = total * mid;
    }
    for (int i = n; i >= 1; --i) total = total * lin(dplus_op(f.eig[static_cast<size_t>(i - 1)]));
    std::vector<ScalarDiffOp> out;
    for (int k = 0; k <= K; ++k) out.push_back(total.coeff(k));
    return out;
}

std::vector<ScalarDiffOp> series_inverse(const std::vector<ScalarDiffOp>& a) {
    if (a.empty()) throw InputError("empty series");
    const int K = static_cast<int>(a.size()) - 1;
    OpSeries<RatFunc> s(K);
    for (int k = 0; k <= K; ++k) s.coeff(k) = a[static_cast<size_t>(k)];
    RatFunc one(Rational(1));
    if (!(s.coeff(0) == ScalarDiffOp::term(0, one)))
        throw InputError("series inverse needs unit constant term");
    OpSeries<RatFunc> g = s.inverse(one);
    std::vector<ScalarDiffOp> out;
    for (int k = 0; k <= K; ++k) out.push_back(g.coeff(k));
    return out;
}

namespace {

std::vector<Rational> pick_samples(const BetheConfig& cfg, const DiffOp& op, int count) {
    // rationals away from every pole: |u - z| >= 1/2 exactly, |u - w| >= 1/4
    std::vector<Rational> samples;
    const Rational zdist(1, 2);
    const BigFloat wdist = BigFloat(1) / 4;
    for (int k = 2; static_cast<int>(samples.size()) < count && k < 2000; ++k) {
        for (Rational cand : {Rational(k, 2), Rational(-k, 2), Rational(2 * k + 1, 3)}) {
            if (static_cast<int>(samples.size()) >= count) break;
            bool ok = true;
            for (const Rational& z : cfg.inst.z)
                if (abs(cand - z) < zdist) ok = false;
            for (int j = 0; ok && j < cfg.m(); ++j)
                if (abs(to_big_float(cand) - cfg.root_float(j)) < wdist) ok = false;
            if (ok && std::find(samples.begin(), samples.end(), cand) == samples.end())
                samples.push_back(cand);
        }
    }
    if (static_cast<int>(samples.size()) < count) throw InputError("could not place sample points");
    return samples;
}

std::string bf_str(const BigFloat& x) { return big_float_to_string(x, 10); }

} // namespace

VerifyReport verify_eigen(const BetheConfig& cfg, OpKind kind, int m, bool force) {
    cfg.validate();
    VerifyReport rep;
    const BigFloat tol = bae_tolerance();
    if (cfg.exact) {
        std::vector<Rational> res = bae_residual_exact(cfg);
        rep.bae_ok = true;
        for (const Rational& r : res) {
            rep.bae_residuals.push_back(rational_to_string(r));
            if (r != 0) rep.bae_ok = false;
        }
    } else {
        std::vector<BigFloat> res = bae_residual_float(cfg);
        rep.bae_ok = true;
        for (const BigFloat& r : res) {
            rep.bae_residuals.push_back(bf_str(r));
            if (abs(r) >= tol) rep.bae_ok = false;
        }
    }

    if (!rep.bae_ok && !force) {
        rep.refusal = "BAE violated: refusing to certify (residuals reported)";
        rep.pass = false;
        return rep;
    }

    DiffOp op = build_operator(cfg.inst, kind, m);

    if (cfg.exact) {
        ExactState phi = bethe_vector_exact(cfg);
        rep.vector_nonzero = !phi.is_zero();
        if (!rep.vector_nonzero) {
            rep.refusal = "zero Bethe vector: eigenvalue statement is vacuous";
            rep.pass = false;
            return rep;
        }
        ScalarDiffOp oracle = oracle_exact(cfg, kind, m);
        ExactSlices lhs = apply_diffop(op, phi);
        int kmax = std::max(op.max_ddeg(), oracle.max_ddeg());
        bool all = true;
        for (int k = 0; k <= kmax; ++k) {
            std::map<MonoTuple, RatFunc> rhs;
            RatFunc ok = oracle.coeff(k);
            if (!ok.is_zero())
                for (const auto& [t, c] : phi.terms()) rhs.emplace(t, ok * RatFunc(c));
            auto it = lhs.find(k);
            static const std::map<MonoTuple, RatFunc> kEmpty;
            const auto& lk = it == lhs.end() ? kEmpty : it->second;
            SliceCheck sc;
            sc.k = k;
            sc.pass = lk == rhs;
            if (sc.pass) {
                sc.deviation = "0";
            } else {
                int mismatches = 0;
                for (const auto& [t, f] : lk) {
                    auto jt = rhs.find(t);
                    if (jt == rhs.end() || !(jt->second == f)) ++mismatches;
                }
                for (const auto& [t, f] : rhs)
                    if (lk.find(t) == lk.end()) ++mismatches;
                sc.deviation = "exact mismatch on " + std::to_string(mismatches) + " monomial(s)";
                all = false;
            }
            rep.slices.push_back(std::move(sc));
        }
        rep.pass = all && rep.bae_ok;
        return rep;
    }

    FloatState phi = bethe_vector_float(cfg);
    rep.vector_nonzero = !phi.is_zero();
    if (!rep.vector_nonzero) {
        rep.refusal = "zero Bethe vector: eigenvalue statement is vacuous";
        rep.pass = false;
        return rep;
    }
    const int kmax_op = op.max_ddeg();
    // sample count ~ twice the largest coefficient degree bound
    int degree_bound = (cfg.inst.ell() + cfg.m()) * (kmax_op + 2) + 4;
    std::vector<Rational> samples = pick_samples(cfg, op, 2 * degree_bound + 1);
    FloatSlicesAt lhs = apply_diffop_at(op, phi, samples);
    const BigFloat vtol(kVerifyFloatTolerance);
    int kmax = kmax_op;
    for (const auto& [k, mp] : lhs) kmax = std::max(kmax, k);

    std::vector<JetOp> oracles;
    oracles.reserve(samples.size());
    for (const Rational& u : samples)
        oracles.push_back(oracle_jet(cfg, kind, m, to_big_float(u), kmax + 1));

    bool all = true;
    for (int k = 0; k <= kmax; ++k) {
        BigFloat worst(0);
        auto it = lhs.find(k);
        // union of monomials on both sides
        std::map<MonoTuple, char> monos;
        if (it != lhs.end())
            for (const auto& [t, v] : it->second) monos[t] = 1;
        for (const auto& [t, c] : phi.terms()) monos[t] = 1;
        for (size_t s = 0; s < samples.size(); ++s) {
            Jet ocoeff = oracles[s].coeff(k);
            BigFloat oval = ocoeff.order() >= 0 ? ocoeff.value() : BigFloat(0);
            for (const auto& [t, flag] : monos) {
                BigFloat l(0);
                if (it != lhs.end()) {
                    auto jt = it->second.find(t);
                    if (jt != it->second.end()) l = jt->second[s];
                }
                BigFloat r(0);
                auto pt = phi.terms().find(t);
                if (pt != phi.terms().end()) r = oval * pt->second;
                worst = std::max(worst, BigFloat(abs(l - r)));
            }
        }
        SliceCheck sc;
        sc.k = k;
        sc.pass = worst < vtol;
        sc.deviation = bf_str(worst);
        if (!sc.pass) all = false;
        rep.slices.push_back(std::move(sc));
    }
    rep.pass = all && rep.bae_ok;
    return rep;
}

MasterFnReport masterfn_crosscheck(const BetheConfig& cfg) {
    cfg.validate();
    MasterFnReport rep;
    const LieSpec& spec = cfg.inst.spec;
    if (spec.family == Family::D) {
        rep.reason = "unsupported family (A, B, C only)";
        return rep;
    }
    if (!cfg.exact) {
        rep.reason = "needs exact Bethe roots";
        return rep;
    }
    for (const Rational& c : cfg.inst.chi)
        if (c != 0) {
            rep.reason = "unsupported: chi must vanish";
            return rep;
        }
    for (const WeightVec& w : cfg.inst.weights)
        for (const Rational& v : w)
            if (denominator(v) != 1) {
                rep.reason = "non-integer weights: T_a undefined as a polynomial";
                return rep;
            }

    // y polynomials per color
    const int ncolors = spec.rank();
    std::vector<Poly> ypoly(static_cast<size_t>(ncolors), Poly(Rational(1)));
    for (int j = 0; j < cfg.m(); ++j) {
        int c = cfg.colors[static_cast<size_t>(j)];
        ypoly[static_cast<size_t>(c - 1)] =
            ypoly[static_cast<size_t>(c - 1)] *
            Poly::from_coeffs({-cfg.w_exact[static_cast<size_t>(j)], Rational(1)});
    }
    auto logderiv = [](const RatFunc& f) { return f.derivative() / f; };

    int Nslots = 0;
    std::vector<RatFunc> lnTy; // ln'(T_a y_{a-1}/y_a) per slot a = 1..Nslots
    switch (spec.family) {
        case Family::A: Nslots = spec.N; break;
        case Family::B: Nslots = 2 * spec.n; break;
        case Family::C: Nslots = 2 * spec.n + 1; break;
        default: break;
    }
    const int n = spec.n;
    auto weight_exponents = [&](int a) {
        std::vector<Rational> e;
        for (const WeightVec& w : cfg.inst.weights) e.push_back(w[static_cast<size_t>(a - 1)]);
        return e;
    };
    auto yfun = [&](int a) -> RatFunc { // y_a by slot index, 1-based; 0 and Nslots give 1
        if (a <= 0 || a >= Nslots) return RatFunc(Rational(1));
        int base = 0;
        bool squared = false;
        switch (spec.family) {
            case Family::A: base = a; break;
            case Family::B: base = a <= n ? a : 2 * n - a; break;
            case Family::C: {
                int idx = a <= n ? a : 2 * n - a + 1;
                base = idx;
                squared = (idx == n);
                break;
            }
            default: break;
        }
        RatFunc y(Rational(1));
        if (base >= 1 && base <= ncolors) {
            y = RatFunc(ypoly[static_cast<size_t>(base - 1)], Poly(Rational(1)));
            if (squared) y = y * y;
        }
        return y;
    };
    auto Tfun = [&](int a) -> RatFunc { // T_a as a rational function
        auto fromExp = [&](const std::vector<Rational>& e, bool invert) {
            RatFunc T(Rational(1));
            for (size_t k = 0; k < e.size(); ++k) {
                long ex = static_cast<long>(numerator(e[k]).convert_to<long long>());
                if (invert) ex = -ex;
                RatFunc lin(Poly::from_coeffs({-cfg.inst.z[k], Rational(1)}), Poly(Rational(1)));
                for (long t = 0; t < ex; ++t) T = T * lin;
                for (long t = 0; t > ex; --t) T = T / lin;
            }
            return T;
        };
        switch (spec.family) {
            case Family::A: return fromExp(weight_exponents(a), false);
            case Family::B:
                if (a <= n) return fromExp(weight_exponents(a), false);
                return fromExp(weight_exponents(2 * n - a + 1), true);
            case Family::C:
                if (a <= n) return fromExp(weight_exponents(a), false);
                if (a == n + 1) return RatFunc(Rational(1));
                return fromExp(weight_exponents(2 * n - a + 2), true);
            default: return RatFunc(Rational(1));
        }
    };

    RatFunc one(Rational(1));
    ScalarDiffOp prod = ScalarDiffOp::term(0, one);
    for (int a = Nslots; a >= 1; --a) {
        RatFunc g = logderiv(Tfun(a) * yfun(a - 1) / yfun(a));
        ScalarDiffOp factor = ScalarDiffOp::term(1, one);
        factor += ScalarDiffOp::term(0, g);
        prod = prod * factor;
    }

    ScalarDiffOp target;
    switch (spec.family) {
        case Family::A: target = oracle_exact(cfg, OpKind::Rdet, 0); break;
        case Family::B: target = eig_genfun_bd(cfg, 2 * n)[static_cast<size_t>(2 * n)]; break;
        case Family::C: target = oracle_exact(cfg, OpKind::BcdTrace, 2 * n + 1); break;
        default: break;
    }
    rep.supported = true;
    rep.pass = prod == target;
    if (!rep.pass) rep.reason = "coefficient mismatch";
    return rep;
}

} // namespace gaudin
