#include "bethe.hpp"

#include <algorithm>
#include <sstream>

namespace gaudin {

ModuleCtxPtr GaudinInstance::ctx() const {
    auto c = std::make_shared<ModuleContext>();
    c->spec = spec;
    c->weights = weights;
    return c;
}

void GaudinInstance::validate() const {
    if (z.empty()) throw InputError("instance needs at least one evaluation point");
    if (weights.size() != z.size()) throw InputError("weights/evalPoints length mismatch");
    for (size_t a = 0; a < z.size(); ++a)
        for (size_t b = a + 1; b < z.size(); ++b)
            if (z[a] == z[b]) throw InputError("evalPoints not distinct");
    for (const auto& w : weights)
        if (static_cast<int>(w.size()) != spec.diag_size)
            throw InputError("weight vector has wrong length for " + spec.name());
    if (static_cast<int>(chi.size()) != spec.diag_size)
        throw InputError("chi vector has wrong length for " + spec.name());
}

void BetheConfig::validate() const {
    inst.validate();
    const size_t m = colors.size();
    if (exact ? w_exact.size() != m : w_float.size() != m)
        throw InputError("root/color length mismatch");
    for (int c : colors)
        if (c < 1 || c > inst.spec.rank()) throw InputError("root color out of range");
    if (exact) {
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (w_exact[a] == w_exact[b]) throw InputError("Bethe roots not distinct");
        for (size_t a = 0; a < m; ++a)
            for (const Rational& zz : inst.z)
                if (w_exact[a] == zz) throw InputError("root collides with evaluation point");
    } else {
        const BigFloat min_sep = BigFloat("1e-15");
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (abs(w_float[a] - w_float[b]) < min_sep)
                    throw InputError("Bethe roots not distinct");
        for (size_t a = 0; a < m; ++a)
            for (const Rational& zz : inst.z)
                if (abs(w_float[a] - to_big_float(zz)) < min_sep)
                    throw InputError("root collides with evaluation point");
    }
}

BigFloat bae_tolerance() { return BigFloat("1e-30"); }

namespace {

// pairing data reused by residuals and the Jacobian
struct PairingTable {
    std::vector<std::vector<Rational>> cw; // cw[j][i] = <ac_{c_j}, lambda_i>
    std::vector<std::vector<Rational>> cr; // cr[j][s] = <ac_{c_j}, alpha_{c_s}>
    std::vector<Rational> cchi;            // <ac_{c_j}, chi>
};

PairingTable pairings(const BetheConfig& cfg) {
    PairingTable t;
    const int m = cfg.m();
    const int ell = cfg.inst.ell();
    t.cw.assign(m, std::vector<Rational>(static_cast<size_t>(ell)));
    t.cr.assign(m, std::vector<Rational>(static_cast<size_t>(m)));
    t.cchi.assign(m, Rational(0));
    for (int j = 0; j < m; ++j) {
        const int cj = cfg.colors[static_cast<size_t>(j)];
        for (int i = 0; i < ell; ++i)
            t.cw[j][i] = cfg.inst.spec.pair_coroot_weight(cj, cfg.inst.weights[static_cast<size_t>(i)]);
        for (int s = 0; s < m; ++s) {
            std::vector<Rational> h = cfg.inst.spec.coroot_diag(cj);
            Rational v(0);
            for (int d = 1; d <= cfg.inst.spec.diag_size; ++d)
                v += h[static_cast<size_t>(d - 1)] *
                     cfg.inst.spec.simple_root_on_diag(cfg.colors[static_cast<size_t>(s)], d);
            t.cr[j][s] = v;
        }
        t.cchi[j] = cfg.inst.spec.pair_coroot_weight(cj, cfg.inst.chi);
    }
    return t;
}

} // namespace

std::vector<Rational> bae_residual_exact(const BetheConfig& cfg) {
    if (!cfg.exact) throw InputError("exact residuals need exact roots");
    cfg.validate();
    PairingTable t = pairings(cfg);
    const int m = cfg.m();
    std::vector<Rational> r(static_cast<size_t>(m), Rational(0));
    for (int j = 0; j < m; ++j) {
        const Rational& wj = cfg.w_exact[static_cast<size_t>(j)];
        Rational v(0);
        for (int i = 0; i < cfg.inst.ell(); ++i) v += t.cw[j][i] / (wj - cfg.inst.z[static_cast<size_t>(i)]);
        for (int s = 0; s < m; ++s)
            if (s != j) v -= t.cr[j][s] / (wj - cfg.w_exact[static_cast<size_t>(s)]);
        r[static_cast<size_t>(j)] = v - t.cchi[j];
    }
    return r;
}

std::vector<BigFloat> bae_residual_float(const BetheConfig& cfg) {
    cfg.validate();
    PairingTable t = pairings(cfg);
    const int m = cfg.m();
    std::vector<BigFloat> r(static_cast<size_t>(m), BigFloat(0));
    for (int j = 0; j < m; ++j) {
        BigFloat wj = cfg.root_float(j);
        BigFloat v(0);
        for (int i = 0; i < cfg.inst.ell(); ++i)
            v += to_big_float(t.cw[j][i]) / (wj - to_big_float(cfg.inst.z[static_cast<size_t>(i)]));
        for (int s = 0; s < m; ++s)
            if (s != j) v -= to_big_float(t.cr[j][s]) / (wj - cfg.root_float(s));
        r[static_cast<size_t>(j)] = v - to_big_float(t.cchi[j]);
    }
    return r;
}

namespace {

// m=1 closed form: clear denominators of sum_i c_i/(w - z_i) = d.
// Returns the numerator polynomial in w.
Poly single_root_polynomial(const GaudinInstance& inst, int color) {
    const int ell = inst.ell();
    std::vector<Poly> lin;
    lin.reserve(static_cast<size_t>(ell));
    for (const Rational& zz : inst.z) lin.push_back(Poly::from_coeffs({-zz, Rational(1)}));
    Poly p;
    for (int i = 0; i < ell; ++i) {
        Rational c = inst.spec.pair_coroot_weight(color, inst.weights[static_cast<size_t>(i)]);
        Poly term{Rational(c)};
        for (int k2 = 0; k2 < ell; ++k2)
            if (k2 != i) term = term * lin[static_cast<size_t>(k2)];
        p = p + term;
    }
    Rational d = inst.spec.pair_coroot_weight(color, inst.chi);
    if (d != 0) {
        Poly full{Rational(d)};
        for (const Poly& l : lin) full = full * l;
        p = p - full;
    }
    return p;
}

} // namespace

BetheConfig bae_solve(const GaudinInstance& inst, const std::vector<int>& colors,
                      const std::vector<BigFloat>& seeds, const SolveOptions& opts) {
    inst.validate();
    const int m = static_cast<int>(colors.size());
    BetheConfig cfg;
    cfg.inst = inst;
    cfg.colors = colors;

    if (m == 0) {
        cfg.exact = true;
        return cfg;
    }

    if (m == 1) {
        Poly p = single_root_polynomial(inst, colors[0]);
        if (p.is_zero()) throw SolveError("degenerate system: every root solves the equation");
        if (p.degree() == 0) throw SolveError("no finite solution");
        if (p.degree() == 1) {
            cfg.exact = true;
            cfg.w_exact = {-p.coeff(0) / p.coeff(1)};
            cfg.validate();
            return cfg;
        }
    }

    if (static_cast<int>(seeds.size()) != m) throw SolveError("seed count does not match root count");
    std::vector<BigFloat> w = seeds;
    cfg.exact = false;
    cfg.w_float = w;
    PairingTable t = pairings(cfg);
    const BigFloat tol = bae_tolerance();
    const BigFloat pivot_floor("1e-50");

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        cfg.w_float = w;
        std::vector<BigFloat> r = bae_residual_float(cfg);
        BigFloat worst(0);
        for (const auto& x : r) worst = std::max(worst, BigFloat(abs(x)));
        if (worst < tol) {
            cfg.validate();
            return cfg;
        }
        // Jacobian of the residual map
        std::vector<std::vector<BigFloat>> J(static_cast<size_t>(m),
                                             std::vector<BigFloat>(static_cast<size_t>(m), BigFloat(0)));
        for (int j = 0; j < m; ++j) {
            BigFloat diag(0);
            for (int i = 0; i < inst.ell(); ++i) {
                BigFloat d = w[static_cast<size_t>(j)] - to_big_float(inst.z[static_cast<size_t>(i)]);
                diag -= to_big_float(t.cw[j][i]) / (d * d);
            }
            for (int s = 0; s < m; ++s) {
                if (s == j) continue;
                BigFloat d = w[static_cast<size_t>(j)] - w[static_cast<size_t>(s)];
                BigFloat q = to_big_float(t.cr[j][s]) / (d * d);
                diag += q;
                J[static_cast<size_t>(j)][static_cast<size_t>(s)] = -q;
            }
            J[static_cast<size_t>(j)][static_cast<size_t>(j)] = diag;
        }
        // Solve J delta = -r by Gaussian elimination with partial pivoting.
        std::vector<BigFloat> rhs(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) rhs[static_cast<size_t>(j)] = -r[static_cast<size_t>(j)];
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int row = col + 1; row < m; ++row)
                if (abs(J[row][col]) > abs(J[piv][col])) piv = row;
            if (abs(J[piv][col]) < pivot_floor) throw SolveError("Jacobian singular");
            std::swap(J[col], J[piv]);
            std::swap(rhs[static_cast<size_t>(col)], rhs[static_cast<size_t>(piv)]);
            for (int row = 0; row < m; ++row) {
                if (row == col || J[row][col] == 0) continue;
                BigFloat f = J[row][col] / J[col][col];
                for (int k2 = col; k2 < m; ++k2) J[row][k2] -= f * J[col][k2];
                rhs[static_cast<size_t>(row)] -= f * rhs[static_cast<size_t>(col)];
            }
        }
        const BigFloat blowup("1e40");
        for (int j = 0; j < m; ++j) {
            w[static_cast<size_t>(j)] += rhs[static_cast<size_t>(j)] / J[j][j];
            if (abs(w[static_cast<size_t>(j)]) > blowup) throw SolveError("divergence");
        }
        // collision guard: report, never perturb
        const BigFloat min_sep("1e-15");
        for (int a = 0; a < m; ++a) {
            for (int b = a + 1; b < m; ++b)
                if (abs(w[a] - w[b]) < min_sep) throw SolveError("collision of roots");
            for (const Rational& zz : inst.z)
                if (abs(w[a] - to_big_float(zz)) < min_sep)
                    throw SolveError("root collided with an evaluation point");
        }
    }
    throw SolveError("divergence: no convergence after max iterations");
}

BigInt ordered_partition_count(int m, int ell) {
    // sum over block assignments of prod |block|! via the odometer itself
    // would be ell^m assignments; count in closed form instead:
    // sum over compositions handled implicitly by iterating assignments.
    BigInt total = 0;
    std::vector<int> assign(static_cast<size_t>(m), 0);
    while (true) {
        std::vector<int> sizes(static_cast<size_t>(ell), 0);
        for (int v : assign) sizes[static_cast<size_t>(v)]++;
        BigInt prod = 1;
        for (int s : sizes)
            for (int k = 2; k <= s; ++k) prod *= k;
        total += prod;
        int pos = 0;
        while (pos < m && ++assign[static_cast<size_t>(pos)] == ell) assign[static_cast<size_t>(pos++)] = 0;
        if (pos == m) break;
    }
    return total;
}

namespace {

template <class K>
TensorState<K> bethe_vector_impl(const BetheConfig& cfg) {
    cfg.validate();
    auto ctx = cfg.inst.ctx();
    const int m = cfg.m();
    const int ell = cfg.inst.ell();
    TensorState<K> acc(ctx);

    auto root_scalar = [&](int j) -> K {
        if (cfg.exact) return scalar_from_rational<K>(cfg.w_exact[static_cast<size_t>(j)]);
        if constexpr (std::is_same_v<K, BigFloat>)
            return cfg.w_float[static_cast<size_t>(j)];
        else
            throw InputError("float roots require the float engine");
    };
    std::vector<K> wval;
    wval.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) wval.push_back(root_scalar(j));
    std::vector<K> zval;
    for (const Rational& zz : cfg.inst.z) zval.push_back(scalar_from_rational<K>(zz));

    // every block assignment {1..m} -> {1..ell}, then every linear order
    // inside each block
    std::vector<int> assign(static_cast<size_t>(m), 0);
    while (true) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(ell));
        for (int j = 0; j < m; ++j) blocks[static_cast<size_t>(assign[static_cast<size_t>(j)])].push_back(j);
        // iterate the cartesian product of permutations of each block
        std::vector<std::vector<int>> order = blocks;
        bool more = true;
        while (more) {
            K coeff = scalar_from_rational<K>(Rational(1));
            for (int k = 0; k < ell; ++k) {
                const auto& blk = order[static_cast<size_t>(k)];
                for (size_t s = 0; s < blk.size(); ++s) {
                    K next = (s + 1 < blk.size()) ? wval[static_cast<size_t>(blk[s + 1])]
                                                  : zval[static_cast<size_t>(k)];
                    K d = wval[static_cast<size_t>(blk[s])] - next;
                    coeff = coeff / d;
                }
            }
            {
                TensorState<K> term = TensorState<K>::highest_weight(ctx);
                for (int k = 0; k < ell; ++k) {
                    const auto& blk = order[static_cast<size_t>(k)];
                    // product f_{i_{j1}} ... f_{i_{ja}} 1_lambda, rightmost first
                    for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
                        LieSpec::Chevalley ch =
                            cfg.inst.spec.chevalley(cfg.colors[static_cast<size_t>(*it)]);
                        term = term.act(ch.f.first, ch.f.second, k + 1, ch.f_coeff);
                    }
                }
                acc = acc + term.scaled(coeff);
            }
            // advance to the next combination of block orders
            more = false;
            for (int k = 0; k < ell; ++k) {
                auto& blk = order[static_cast<size_t>(k)];
                if (std::next_permutation(blk.begin(), blk.end())) {
                    more = true;
                    break;
                }
                blk = blocks[static_cast<size_t>(k)]; // reset and carry
            }
        }
        int pos = 0;
        while (pos < m && ++assign[static_cast<size_t>(pos)] == ell) assign[static_cast<size_t>(pos++)] = 0;
        if (pos == m) break;
    }
    return acc;
}

} // namespace

ExactState bethe_vector_exact(const BetheConfig& cfg) {
    if (!cfg.exact) throw InputError("exact Bethe vector needs exact roots");
    return bethe_vector_impl<Rational>(cfg);
}

FloatState bethe_vector_float(const BetheConfig& cfg) { return bethe_vector_impl<BigFloat>(cfg); }

RatFunc EigenFn::to_ratfunc() const {
    if (!roots_exact) throw InputError("float poles cannot form an exact rational function");
    RatFunc f(Rational(constant));
    for (const auto& [res, pole] : z_part) f += res * RatFunc::simple_pole(pole);
    for (const auto& [res, pole] : w_exact_part) f += res * RatFunc::simple_pole(pole);
    return f;
}

Jet EigenFn::jet_at(const BigFloat& u0, int order) const {
    Jet j(order, to_big_float(constant));
    for (const auto& [res, pole] : z_part) {
        Jet p = Jet::of_simple_pole(order, u0, to_big_float(pole));
        p.scale_by(res);
        j += p;
    }
    for (const auto& [res, pole] : w_exact_part) {
        Jet p = Jet::of_simple_pole(order, u0, to_big_float(pole));
        p.scale_by(res);
        j += p;
    }
    for (const auto& [res, pole] : w_float_part) {
        Jet p = Jet::of_simple_pole(order, u0, pole);
        p.scale_by(res);
        j += p;
    }
    return j;
}

bool EigenFn::is_pole_near(const Rational& u, const Rational& min_dist) const {
    for (const auto& [res, pole] : z_part)
        if (abs(u - pole) < min_dist) return true;
    for (const auto& [res, pole] : w_exact_part)
        if (abs(u - pole) < min_dist) return true;
    BigFloat uu = to_big_float(u), dd = to_big_float(min_dist);
    for (const auto& [res, pole] : w_float_part)
        if (abs(uu - pole) < dd) return true;
    return false;
}

std::vector<EigenFn> eigen_functions(const BetheConfig& cfg) {
    cfg.validate();
    const LieSpec& spec = cfg.inst.spec;
    std::vector<EigenFn> out(static_cast<size_t>(spec.diag_size));
    for (int i = 1; i <= spec.diag_size; ++i) {
        EigenFn& fn = out[static_cast<size_t>(i - 1)];
        fn.constant = -cfg.inst.chi[static_cast<size_t>(i - 1)];
        fn.roots_exact = cfg.exact;
        for (int a = 0; a < cfg.inst.ell(); ++a) {
            Rational res = cfg.inst.weights[static_cast<size_t>(a)][static_cast<size_t>(i - 1)];
            if (res != 0) fn.z_part.emplace_back(res, cfg.inst.z[static_cast<size_t>(a)]);
        }
        for (int j = 0; j < cfg.m(); ++j) {
            Rational res = -spec.simple_root_on_diag(cfg.colors[static_cast<size_t>(j)], i);
            if (res == 0) continue;
            if (cfg.exact)
                fn.w_exact_part.emplace_back(res, cfg.w_exact[static_cast<size_t>(j)]);
            else
                fn.w_float_part.emplace_back(res, cfg.w_float[static_cast<size_t>(j)]);
        }
    }
    return out;
}

} // namespace gaudin
