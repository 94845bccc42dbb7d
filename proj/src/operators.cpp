#include "operators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace gaudin {

CurrentMatrix::CurrentMatrix(const GaudinInstance& inst, int sign) : N_(inst.spec.N) {
    inst.validate();
    e_.resize(static_cast<size_t>(N_) * N_);
    Rational sgn(sign);
    for (int i = 1; i <= N_; ++i) {
        for (int j = 1; j <= N_; ++j) {
            DiffOp op;
            for (int a = 0; a < inst.ell(); ++a) {
                RatFunc f = sgn * RatFunc::simple_pole(inst.z[static_cast<size_t>(a)]);
                op += DiffOp::term(Word{Letter{i, j, a + 1}}, 0, f);
            }
            if (i == j) {
                Rational c = inst.spec.functional_on_diag(i, inst.chi);
                if (c != 0) op += DiffOp::term(Word{}, 0, RatFunc(-sgn * c));
            }
            e_[idx(i, j)] = std::move(op);
        }
    }
}

TensorMatrix TensorMatrix::identity(int dim) {
    TensorMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

TensorMatrix TensorMatrix::operator*(const TensorMatrix& o) const {
    TensorMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                const Rational& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

TensorMatrix TensorMatrix::operator+(const TensorMatrix& o) const {
    TensorMatrix r(*this);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

TensorMatrix TensorMatrix::operator-(const TensorMatrix& o) const {
    TensorMatrix r(*this);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

TensorMatrix TensorMatrix::scaled(const Rational& c) const {
    TensorMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

Rational TensorMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// digits of the multi-index (i_1..i_m), each in 0..N-1; slot 1 most significant
std::vector<int> unflatten(int idx, int N, int m) {
    std::vector<int> d(static_cast<size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        d[static_cast<size_t>(k)] = idx % N;
        idx /= N;
    }
    return d;
}

int flatten(const std::vector<int>& d, int N) {
    int idx = 0;
    for (int x : d) idx = idx * N + x;
    return idx;
}

} // namespace

TensorMatrix perm_op(int N, int m, int a, int b) {
    const int dim = ipow(N, m);
    TensorMatrix P(dim);
    for (int col = 0; col < dim; ++col) {
        std::vector<int> d = unflatten(col, N, m);
        std::swap(d[static_cast<size_t>(a - 1)], d[static_cast<size_t>(b - 1)]);
        P.at(flatten(d, N), col) = 1;
    }
    return P;
}

TensorMatrix contraction_op(const LieSpec& spec, int m, int a, int b) {
    const int N = spec.N;
    const int dim = ipow(N, m);
    TensorMatrix Q(dim);
    // Q_ab = sum_{i,j} (eps_i eps_j) e_ij at slot a (x) e_i'j' at slot b
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            Rational w = spec.family == Family::C ? spec.theta(i, j) : Rational(1);
            for (int rest = 0; rest < ipow(N, m - 2); ++rest) {
                std::vector<int> other = unflatten(rest, N, m - 2);
                std::vector<int> row(static_cast<size_t>(m)), col(static_cast<size_t>(m));
                size_t t = 0;
                for (int k = 1; k <= m; ++k) {
                    if (k == a) {
                        row[static_cast<size_t>(k - 1)] = i - 1;
                        col[static_cast<size_t>(k - 1)] = j - 1;
                    } else if (k == b) {
                        row[static_cast<size_t>(k - 1)] = spec.prime(i) - 1;
                        col[static_cast<size_t>(k - 1)] = spec.prime(j) - 1;
                    } else {
                        row[static_cast<size_t>(k - 1)] = col[static_cast<size_t>(k - 1)] = other[t++];
                    }
                }
                Q.at(flatten(row, N), flatten(col, N)) += w;
            }
        }
    }
    return Q;
}

namespace {

TensorMatrix sym_group_projector(int N, int m, bool anti) {
    const int dim = ipow(N, m);
    TensorMatrix S(dim);
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    Rational fact(1);
    for (int k = 2; k <= m; ++k) fact *= k;
    do {
        // sign of perm
        int inv = 0;
        for (size_t x = 0; x < perm.size(); ++x)
            for (size_t y = x + 1; y < perm.size(); ++y)
                if (perm[x] > perm[y]) ++inv;
        Rational w = (anti && inv % 2) ? Rational(-1) : Rational(1);
        for (int col = 0; col < dim; ++col) {
            std::vector<int> d = unflatten(col, N, m), r(static_cast<size_t>(m));
            // position k receives the vector from position perm^{-1}(k)
            for (int k = 0; k < m; ++k) r[static_cast<size_t>(perm[static_cast<size_t>(k)])] = d[static_cast<size_t>(k)];
            S.at(flatten(r, N), col) += w;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return S.scaled(Rational(1) / fact);
}

} // namespace

TensorMatrix antisymmetrizer(int N, int m) { return sym_group_projector(N, m, true); }
TensorMatrix symmetrizer(int N, int m) { return sym_group_projector(N, m, false); }

TensorMatrix brauer_symmetrizer(const LieSpec& spec, int m) {
    if (spec.family == Family::A) throw InputError("Brauer symmetrizer is for types B/C/D");
    if (m < 1) throw InputError("symmetrizer degree must be >= 1");
    const bool symplectic = spec.family == Family::C;
    if (symplectic && m > spec.n)
        throw InputError("type C product formula supports m <= n (got m=" + std::to_string(m) + ")");
    const int N = spec.N;
    const int dim = ipow(N, m);
    TensorMatrix S = TensorMatrix::identity(dim);
    for (int a = 1; a < m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            Rational pden(b - a);
            Rational qden = symplectic ? Rational(spec.n - b + a + 1)
                                       : Rational(N, 2) + Rational(b - a - 1);
            if (qden == 0) {
                std::ostringstream os;
                os << "vanishing symmetrizer denominator at pair (" << a << "," << b << ")";
                throw InputError(os.str());
            }
            TensorMatrix factor = TensorMatrix::identity(dim);
            TensorMatrix P = perm_op(N, m, a, b);
            TensorMatrix Q = contraction_op(spec, m, a, b);
            if (symplectic)
                factor = factor - P.scaled(Rational(1) / pden) - Q.scaled(Rational(1) / qden);
            else
                factor = factor + P.scaled(Rational(1) / pden) - Q.scaled(Rational(1) / qden);
            S = S * factor;
        }
    }
    Rational fact(1);
    for (int k = 2; k <= m; ++k) fact *= k;
    return S.scaled(Rational(1) / fact);
}

Rational gamma_factor(const Rational& omega, int m) {
    Rational den = omega + Rational(2 * m - 2);
    if (den == 0) throw InputError("gamma_m denominator vanishes");
    return (omega + Rational(m - 2)) / den;
}

DiffOp det_operator(const GaudinInstance& inst, DetOrder order, int sign) {
    if (inst.spec.family != Family::A) throw InputError("row/column determinants are type A operators");
    const int N = inst.spec.N;
    CurrentMatrix cur(inst, sign);
    std::vector<int> perm(static_cast<size_t>(N));
    std::iota(perm.begin(), perm.end(), 1);
    DiffOp total;
    do {
        int inv = 0;
        for (size_t x = 0; x < perm.size(); ++x)
            for (size_t y = x + 1; y < perm.size(); ++y)
                if (perm[x] > perm[y]) ++inv;
        DiffOp prod = DiffOp::constant(Rational(inv % 2 ? -1 : 1));
        for (int k = 1; k <= N; ++k) {
            int i = order == DetOrder::Row ? k : perm[static_cast<size_t>(k - 1)];
            int j = order == DetOrder::Row ? perm[static_cast<size_t>(k - 1)] : k;
            DiffOp factor = cur.entry(i, j);
            if (i == j) factor += DiffOp::d();
            prod = prod * factor;
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

DiffOp trace_with_matrix(const CurrentMatrix& cur, const TensorMatrix& S, int m,
                         const Rational& prefactor, bool reverse_slots) {
    const int N = cur.size();
    const int dim = ipow(N, m);
    DiffOp total;
    for (int row = 0; row < dim; ++row) {
        std::vector<int> iv = unflatten(row, N, m);
        for (int col = 0; col < dim; ++col) {
            const Rational& s = S.at(row, col);
            if (s == 0) continue;
            std::vector<int> jv = unflatten(col, N, m);
            // tr S X_1...X_m = sum S_{ij} (X_1)_{j1 i1} ... (X_m)_{jm im}
            DiffOp prod = DiffOp::constant(s * prefactor);
            for (int a = 0; a < m; ++a) {
                int slot = reverse_slots ? m - 1 - a : a;
                int i = jv[static_cast<size_t>(slot)] + 1;
                int j = iv[static_cast<size_t>(slot)] + 1;
                DiffOp factor = cur.entry(i, j);
                if (i == j) factor += DiffOp::d();
                prod = prod * factor;
            }
            total += prod;
        }
    }
    return total;
}

DiffOp projector_trace_operator(const GaudinInstance& inst, int m, ProjectorKind kind, int sign,
                                bool reverse_slots) {
    if (inst.spec.family != Family::A) throw InputError("projector traces are type A operators");
    if (m < 1) throw InputError("trace degree must be >= 1");
    if (kind == ProjectorKind::Antisymmetrizer && m > inst.spec.N)
        throw InputError("antisymmetrizer vanishes for m > N");
    CurrentMatrix cur(inst, sign);
    TensorMatrix S = kind == ProjectorKind::Antisymmetrizer ? antisymmetrizer(inst.spec.N, m)
                                                            : symmetrizer(inst.spec.N, m);
    return trace_with_matrix(cur, S, m, Rational(1), reverse_slots);
}

DiffOp trace_power_operator(const GaudinInstance& inst, int k) {
    if (inst.spec.family != Family::A) throw InputError("trace powers are type A operators");
    if (k < 0) throw InputError("trace power must be >= 0");
    const int N = inst.spec.N;
    CurrentMatrix cur(inst, +1);
    if (k == 0) return DiffOp::constant(Rational(N));
    // tr B^k over the cyclic index tuples, B_{ij} = delta d + E_ji(u)
    auto entry = [&](int i, int j) {
        DiffOp f = cur.entry(j, i);
        if (i == j) f += DiffOp::d();
        return f;
    };
    DiffOp total;
    std::vector<int> idx(static_cast<size_t>(k), 1);
    while (true) {
        DiffOp prod = DiffOp::constant(Rational(1));
        for (int a = 0; a < k; ++a)
            prod = prod * entry(idx[static_cast<size_t>(a)], idx[static_cast<size_t>((a + 1) % k)]);
        total += prod;
        int pos = 0;
        while (pos < k && ++idx[static_cast<size_t>(pos)] > N) idx[static_cast<size_t>(pos++)] = 1;
        if (pos == k) break;
    }
    return total;
}

DiffOp bcd_trace_operator(const GaudinInstance& inst, int m, int sign) {
    if (inst.spec.family == Family::A) throw InputError("bcd-trace needs family B, C or D");
    if (m < 1) throw InputError("trace degree must be >= 1");
    Rational omega = inst.spec.family == Family::C ? Rational(-inst.spec.N) : Rational(inst.spec.N);
    Rational gamma = gamma_factor(omega, m);
    CurrentMatrix cur(inst, sign);
    TensorMatrix S = brauer_symmetrizer(inst.spec, m);
    return trace_with_matrix(cur, S, m, gamma, false);
}

DiffOp pfaffian_operator(const GaudinInstance& inst, int sign, bool reversed) {
    if (inst.spec.family != Family::D) throw InputError("the Pfaffian needs family D");
    const int n = inst.spec.n;
    const int N = inst.spec.N;
    CurrentMatrix cur(inst, sign);
    // F~_ij(u) = F_{i j'}(u)
    auto tilde = [&](int i, int j) -> const DiffOp& { return cur.entry(i, inst.spec.prime(j)); };
    std::vector<int> perm(static_cast<size_t>(N));
    std::iota(perm.begin(), perm.end(), 1);
    DiffOp total;
    do {
        int inv = 0;
        for (size_t x = 0; x < perm.size(); ++x)
            for (size_t y = x + 1; y < perm.size(); ++y)
                if (perm[x] > perm[y]) ++inv;
        DiffOp prod = DiffOp::constant(Rational(inv % 2 ? -1 : 1));
        if (!reversed) {
            for (int p = 0; p < n; ++p)
                prod = prod * tilde(perm[static_cast<size_t>(2 * p)], perm[static_cast<size_t>(2 * p + 1)]);
        } else {
            for (int p = n - 1; p >= 0; --p)
                prod = prod * tilde(perm[static_cast<size_t>(2 * p)], perm[static_cast<size_t>(2 * p + 1)]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational norm(1);
    for (int k = 2; k <= n; ++k) norm *= k;
    for (int k = 0; k < n; ++k) norm *= 2;
    return total * RatFunc(Rational(1) / norm);
}

std::vector<ExactState> spanning_states(const ModuleCtxPtr& ctx, int depth) {
    const int nb = static_cast<int>(ctx->spec.neg_basis().size());
    // nondecreasing sequences over the basis, length <= depth
    std::vector<Mono> monos{Mono{}};
    std::vector<Mono> frontier{Mono{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<Mono> next;
        for (const Mono& m : frontier) {
            int lo = m.empty() ? 0 : m.back();
            for (int b = lo; b < nb; ++b) {
                Mono mm = m;
                mm.push_back(b);
                next.push_back(mm);
            }
        }
        monos.insert(monos.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    // tensor tuples with total length <= depth
    std::vector<ExactState> out;
    std::vector<MonoTuple> tuples{MonoTuple(static_cast<size_t>(ctx->ell()))};
    std::vector<size_t> choice(static_cast<size_t>(ctx->ell()), 0);
    while (true) {
        int total = 0;
        MonoTuple t(static_cast<size_t>(ctx->ell()));
        for (int k = 0; k < ctx->ell(); ++k) {
            t[static_cast<size_t>(k)] = monos[choice[static_cast<size_t>(k)]];
            total += static_cast<int>(t[static_cast<size_t>(k)].size());
        }
        if (total <= depth) {
            ExactState s(ctx);
            s.add(t, Rational(1));
            out.push_back(std::move(s));
        }
        size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == monos.size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    return out;
}

std::vector<ExactState> random_states(const ModuleCtxPtr& ctx, int count, int depth, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int nb = static_cast<int>(ctx->spec.neg_basis().size());
    std::vector<ExactState> out;
    for (int c = 0; c < count; ++c) {
        MonoTuple t(static_cast<size_t>(ctx->ell()));
        int total = 1 + static_cast<int>(rng() % static_cast<uint64_t>(depth));
        for (int d = 0; d < total; ++d) {
            size_t site = rng() % t.size();
            t[site].push_back(static_cast<int>(rng() % static_cast<uint64_t>(nb)));
        }
        for (auto& m : t) std::sort(m.begin(), m.end());
        ExactState s(ctx);
        s.add(t, Rational(1));
        out.push_back(std::move(s));
    }
    return out;
}

bool operators_agree_on(const DiffOp& a, const DiffOp& b, const std::vector<ExactState>& states) {
    for (const ExactState& s : states) {
        ExactSlices ra = apply_diffop(a, s);
        ExactSlices rb = apply_diffop(b, s);
        if (ra != rb) return false;
    }
    return true;
}

bool sigma_stability_check(const GaudinInstance& inst, int m, const std::vector<ExactState>& states) {
    if (inst.spec.family == Family::A) {
        for (ProjectorKind kind : {ProjectorKind::Antisymmetrizer, ProjectorKind::Symmetrizer}) {
            if (kind == ProjectorKind::Antisymmetrizer && m > inst.spec.N) continue;
            DiffOp fwd = projector_trace_operator(inst, m, kind, +1, false);
            DiffOp rev = projector_trace_operator(inst, m, kind, +1, true);
            if (!operators_agree_on(fwd, rev, states)) return false;
        }
        return true;
    }
    DiffOp plus = bcd_trace_operator(inst, m, +1);
    DiffOp minus = bcd_trace_operator(inst, m, -1);
    return operators_agree_on(plus, minus, states);
}

bool pfaffian_sign_check(const GaudinInstance& inst, const std::vector<ExactState>& states) {
    DiffOp fwd = pfaffian_operator(inst, +1, false);
    DiffOp img = pfaffian_operator(inst, -1, true);
    if (inst.spec.n % 2) fwd = -fwd;
    return operators_agree_on(img, fwd, states);
}

} // namespace gaudin
