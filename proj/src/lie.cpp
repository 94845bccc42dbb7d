#include "lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaudin {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    throw InputError("unknown family '" + s + "' (expected A, B, C or D)");
}

LieSpec LieSpec::make(Family f, int rank_or_size) {
    LieSpec s;
    s.family = f;
    switch (f) {
        case Family::A:
            if (rank_or_size < 1) throw InputError("type A needs N >= 1");
            s.N = rank_or_size;
            s.n = s.N - 1;
            s.diag_size = s.N;
            break;
        case Family::B:
            if (rank_or_size < 1) throw InputError("type B needs n >= 1");
            s.n = rank_or_size;
            s.N = 2 * s.n + 1;
            s.diag_size = s.n;
            break;
        case Family::C:
            if (rank_or_size < 1) throw InputError("type C needs n >= 1");
            s.n = rank_or_size;
            s.N = 2 * s.n;
            s.diag_size = s.n;
            break;
        case Family::D:
            // n = 1 gives the abelian o_2; kept constructible for the
            // degenerate Pfaffian case, but it has no simple roots.
            if (rank_or_size < 1) throw InputError("type D needs n >= 1");
            s.n = rank_or_size;
            s.N = 2 * s.n;
            s.diag_size = s.n;
            break;
    }
    s.build_bases();
    return s;
}

std::string LieSpec::name() const {
    switch (family) {
        case Family::A: return "gl_" + std::to_string(N);
        case Family::B:
        case Family::D: return "o_" + std::to_string(N);
        case Family::C: return "sp_" + std::to_string(N);
    }
    return "?";
}

LieSpec::Canon LieSpec::canonicalize(int i, int j) const {
    if (i < 1 || i > N || j < 1 || j > N) throw InputError("generator index out of range");
    if (family == Family::A) return {Rational(1), i, j};
    const bool orthogonal = family != Family::C;
    if (i == j) {
        if (i <= n) return {Rational(1), i, j};
        if (orthogonal && 2 * i == N + 1) return {Rational(0), i, j}; // middle F = 0
        return {Rational(-1), prime(i), prime(i)};                    // F_ii = -F_i'i'
    }
    if (orthogonal && i + j == N + 1) return {Rational(0), i, j}; // anti-diagonal F = 0
    if (i + j <= N + 1) return {Rational(1), i, j};
    return {-theta(i, j), prime(j), prime(i)};
}

namespace {
// [E_ab, E_cd] = d_bc E_ad - d_da E_cb on sparse gl elements
using GlElem = std::map<BasisPair, Rational>;

void gl_add(GlElem& x, BasisPair p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = x.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

GlElem gl_bracket(const GlElem& x, const GlElem& y) {
    GlElem r;
    for (const auto& [p, a] : x) {
        for (const auto& [q, b] : y) {
            Rational c = a * b;
            if (p.second == q.first) gl_add(r, {p.first, q.second}, c);
            if (q.second == p.first) gl_add(r, {q.first, p.second}, -c);
        }
    }
    return r;
}
} // namespace

LinComb LieSpec::bracket(int i, int j, int k, int l) const {
    GlElem x, y;
    if (family == Family::A) {
        gl_add(x, {i, j}, Rational(1));
        gl_add(y, {k, l}, Rational(1));
    } else {
        gl_add(x, {i, j}, Rational(1));
        gl_add(x, {prime(j), prime(i)}, -theta(i, j));
        gl_add(y, {k, l}, Rational(1));
        gl_add(y, {prime(l), prime(k)}, -theta(k, l));
    }
    GlElem br = gl_bracket(x, y);
    // Read the F-expansion off the E-coefficients at canonical slots.
    LinComb out;
    for (const auto& [p, c] : br) {
        Canon cn = canonicalize(p.first, p.second);
        if (cn.sign == 0) continue;
        if (family != Family::A && !(cn.i == p.first && cn.j == p.second)) continue;
        auto [it, inserted] = out.try_emplace(BasisPair{cn.i, cn.j}, c);
        if (!inserted) it->second += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

LinComb LieSpec::bracket_combs(const LinComb& x, const LinComb& y) const {
    LinComb r;
    for (const auto& [p, a] : x) {
        for (const auto& [q, b] : y) {
            LinComb br = bracket(p.first, p.second, q.first, q.second);
            for (const auto& [s, c] : br) {
                auto [it, inserted] = r.try_emplace(s, a * b * c);
                if (!inserted) it->second += a * b * c;
            }
        }
    }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

std::vector<Rational> LieSpec::root_of_pair(int i, int j) const {
    std::vector<Rational> w(static_cast<size_t>(diag_size), Rational(0));
    auto bump = [&](int idx, int s) {
        if (family == Family::A) {
            w[static_cast<size_t>(idx - 1)] += s;
        } else {
            if (idx <= n) w[static_cast<size_t>(idx - 1)] += s;
            if (prime(idx) <= n) w[static_cast<size_t>(prime(idx) - 1)] -= s;
        }
    };
    bump(i, +1);
    bump(j, -1);
    return w;
}

Rational LieSpec::simple_root_on_diag(int l, int d) const {
    if (l < 1 || l > rank() || d < 1 || d > diag_size) throw InputError("root/diagonal index out of range");
    Rational v(0);
    switch (family) {
        case Family::A:
            if (d == l) v = 1;
            if (d == l + 1) v = -1;
            break;
        case Family::B:
            if (l < n) {
                if (d == l) v = 1;
                if (d == l + 1) v = -1;
            } else if (d == n) {
                v = 1; // alpha_n = eps_n
            }
            break;
        case Family::C:
            if (l < n) {
                if (d == l) v = 1;
                if (d == l + 1) v = -1;
            } else if (d == n) {
                v = 2; // alpha_n = 2 eps_n
            }
            break;
        case Family::D:
            if (l < n) {
                if (d == l) v = 1;
                if (d == l + 1) v = -1;
            } else {
                if (d == n - 1 || d == n) v = 1; // alpha_n = eps_(n-1) + eps_n
            }
            break;
    }
    return v;
}

std::vector<Rational> LieSpec::coroot_diag(int l) const {
    if (l < 1 || l > rank()) throw InputError("coroot index out of range");
    std::vector<Rational> h(static_cast<size_t>(diag_size), Rational(0));
    const bool last = family != Family::A && l == n;
    if (!last) {
        h[static_cast<size_t>(l - 1)] = 1;
        h[static_cast<size_t>(l)] = -1;
        return h;
    }
    switch (family) {
        case Family::B: h[static_cast<size_t>(n - 1)] = 2; break;               // 2 F_nn
        case Family::C: h[static_cast<size_t>(n - 1)] = 1; break;               // F_nn
        case Family::D:
            h[static_cast<size_t>(n - 2)] = 1;
            h[static_cast<size_t>(n - 1)] = 1; // F_(n-1,n-1) + F_nn
            break;
        default: break;
    }
    return h;
}

Rational LieSpec::cartan(int l, int s) const {
    std::vector<Rational> h = coroot_diag(l);
    Rational v(0);
    for (int d = 1; d <= diag_size; ++d)
        v += h[static_cast<size_t>(d - 1)] * simple_root_on_diag(s, d);
    return v;
}

Rational LieSpec::pair_coroot_weight(int l, const WeightVec& lambda) const {
    if (static_cast<int>(lambda.size()) != diag_size) throw InputError("weight vector has wrong length");
    std::vector<Rational> h = coroot_diag(l);
    Rational v(0);
    for (size_t d = 0; d < lambda.size(); ++d) v += h[d] * lambda[d];
    return v;
}

Rational LieSpec::functional_on_diag(int i, const WeightVec& chi) const {
    if (static_cast<int>(chi.size()) != diag_size) throw InputError("functional vector has wrong length");
    Canon c = canonicalize(i, i);
    if (c.sign == 0) return Rational(0);
    return c.sign * chi[static_cast<size_t>(c.i - 1)];
}

LieSpec::Chevalley LieSpec::chevalley(int l) const {
    if (l < 1 || l > rank()) throw InputError("Chevalley index out of range");
    Chevalley c;
    if (family == Family::A || l < n) {
        c = {Rational(1), {l, l + 1}, Rational(1), {l + 1, l}};
        return c;
    }
    switch (family) {
        case Family::B: c = {Rational(1), {n, n + 1}, Rational(2), {n + 1, n}}; break;
        case Family::C: c = {Rational(1), {n, n + 1}, Rational(1, 4), {n + 1, n}}; break;
        case Family::D: c = {Rational(1), {n - 1, n + 1}, Rational(1), {n + 1, n - 1}}; break;
        default: break;
    }
    return c;
}

void LieSpec::build_bases() {
    std::vector<BasisPair> lower;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i <= j) continue;
            Canon c = canonicalize(i, j);
            if (c.sign == 0) continue;
            if (c.i == i && c.j == j) lower.emplace_back(i, j);
        }

    // Height of the positive root attached to each lowering pair: solve
    // root = sum_s m_s alpha_s against the Cartan pairings, ht = -sum m_s.
    const int r = rank();
    auto height = [&](const BasisPair& p) -> Rational {
        if (r == 0) return Rational(0);
        std::vector<Rational> root = root_of_pair(p.first, p.second);
        std::vector<std::vector<Rational>> M(static_cast<size_t>(r),
                                             std::vector<Rational>(static_cast<size_t>(r + 1), Rational(0)));
        for (int l = 1; l <= r; ++l) {
            std::vector<Rational> h = coroot_diag(l);
            for (int s = 1; s <= r; ++s) M[l - 1][s - 1] = cartan(l, s);
            Rational rhs(0);
            for (size_t d = 0; d < root.size(); ++d) rhs += h[d] * root[d];
            M[l - 1][static_cast<size_t>(r)] = rhs;
        }
        // Gaussian elimination; Cartan matrices here are invertible.
        for (int col = 0; col < r; ++col) {
            int piv = -1;
            for (int row = col; row < r; ++row)
                if (M[row][col] != 0) {
                    piv = row;
                    break;
                }
            if (piv < 0) throw std::logic_error("singular Cartan system");
            std::swap(M[col], M[piv]);
            for (int row = 0; row < r; ++row) {
                if (row == col || M[row][col] == 0) continue;
                Rational f = M[row][col] / M[col][col];
                for (int k = col; k <= r; ++k) M[row][k] -= f * M[col][k];
            }
        }
        Rational ht(0);
        for (int s = 0; s < r; ++s) ht -= M[s][static_cast<size_t>(r)] / M[s][s];
        return ht;
    };

    std::vector<std::pair<Rational, BasisPair>> keyed;
    keyed.reserve(lower.size());
    for (const auto& p : lower) keyed.emplace_back(height(p), p);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    neg_basis_.clear();
    for (auto& [h, p] : keyed) neg_basis_.push_back(p);
    for (size_t k = 0; k < neg_basis_.size(); ++k) neg_index_[neg_basis_[k]] = static_cast<int>(k);

    pos_basis_.clear();
    for (const auto& p : neg_basis_) pos_basis_.emplace_back(p.second, p.first);
}

int LieSpec::neg_index(const BasisPair& p) const {
    auto it = neg_index_.find(p);
    if (it == neg_index_.end()) throw std::logic_error("not a negative-root basis pair");
    return it->second;
}

std::vector<BasisPair> LieSpec::all_basis() const {
    std::vector<BasisPair> all = neg_basis_;
    for (int d = 1; d <= diag_size; ++d) all.emplace_back(d, d);
    for (const auto& p : pos_basis_) all.push_back(p);
    return all;
}

} // namespace gaudin
