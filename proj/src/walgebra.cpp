#include "walgebra.hpp"

#include "oracle.hpp"

#include <sstream>

namespace gaudin {

WPoly WPoly::symbol(const WSym& s) {
    WPoly p;
    p.t_.emplace(WMono{{s, 1}}, Rational(1));
    return p;
}

void WPoly::add(const WMono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

WPoly WPoly::operator-() const {
    WPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

WPoly WPoly::operator+(const WPoly& o) const {
    WPoly r(*this);
    for (const auto& [m, c] : o.t_) r.add(m, c);
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const { return *this + (-o); }

WPoly WPoly::operator*(const WPoly& o) const {
    WPoly r;
    for (const auto& [m1, c1] : t_) {
        for (const auto& [m2, c2] : o.t_) {
            WMono m;
            m.reserve(m1.size() + m2.size());
            size_t a = 0, b = 0;
            while (a < m1.size() || b < m2.size()) {
                if (b == m2.size() || (a < m1.size() && m1[a].first < m2[b].first))
                    m.push_back(m1[a++]);
                else if (a == m1.size() || m2[b].first < m1[a].first)
                    m.push_back(m2[b++]);
                else {
                    m.emplace_back(m1[a].first, m1[a].second + m2[b].second);
                    ++a;
                    ++b;
                }
            }
            r.add(m, c1 * c2);
        }
    }
    return r;
}

WPoly WPoly::derivative() const {
    // D = sum over present symbols of mu_i^(r+1) d/dmu_i^(r)
    std::set<WSym> syms;
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m) syms.insert(s);
    WPoly r;
    for (const WSym& s : syms) r += symbol(WSym{s.idx, s.r + 1}) * partial(s);
    return r;
}

WPoly WPoly::partial(const WSym& s) const {
    WPoly r;
    for (const auto& [m, c] : t_) {
        for (size_t k = 0; k < m.size(); ++k) {
            if (!(m[k].first == s)) continue;
            WMono d = m;
            Rational coeff = c * Rational(m[k].second);
            if (d[k].second == 1)
                d.erase(d.begin() + static_cast<long>(k));
            else
                d[k].second -= 1;
            r.add(d, coeff);
        }
    }
    return r;
}

int WPoly::max_r() const {
    int mr = 0;
    for (const auto& [m, c] : t_)
        for (const auto& [s, e] : m) mr = std::max(mr, s.r);
    return mr;
}

std::string WPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (const auto& [s, e] : m) {
            os << "*m" << s.idx << "^(" << s.r << ")";
            if (e != 1) os << "**" << e;
        }
    }
    return os.str();
}

int wmono_degree(const WMono& m) {
    int d = 0;
    for (const auto& [s, e] : m) d -= (s.r + 1) * e;
    return d;
}

namespace {

// polynomial in the mu's graded by degree, truncated below -cutoff; all
// degrees are nonpositive so retained components are exact
class GradedSeries {
public:
    explicit GradedSeries(int cutoff) : cutoff_(cutoff) {}
    static GradedSeries constant(int cutoff, const Rational& c) {
        GradedSeries s(cutoff);
        if (c != 0) s.comp_[0] = WPoly(c);
        return s;
    }
    int cutoff() const { return cutoff_; }
    const std::map<int, WPoly>& components() const { return comp_; }
    void add(int deg, const WPoly& p) {
        if (deg < -cutoff_ || p.is_zero()) return;
        auto [it, inserted] = comp_.try_emplace(deg, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) comp_.erase(it);
        }
    }
    GradedSeries operator+(const GradedSeries& o) const {
        GradedSeries r(*this);
        for (const auto& [d, p] : o.comp_) r.add(d, p);
        return r;
    }
    GradedSeries operator*(const GradedSeries& o) const {
        GradedSeries r(cutoff_);
        for (const auto& [d1, p1] : comp_) {
            for (const auto& [d2, p2] : o.comp_) {
                if (d1 + d2 < -cutoff_) continue;
                r.add(d1 + d2, p1 * p2);
            }
        }
        return r;
    }
    GradedSeries inverse() const {
        auto it = comp_.find(0);
        if (it == comp_.end() || it->second.terms().size() != 1 ||
            !it->second.terms().begin()->first.empty())
            throw InputError("graded series inverse needs a scalar constant component");
        Rational c = it->second.terms().begin()->second;
        // X = c(1 + T) with deg T < 0: X^-1 = c^-1 sum (-T)^k
        GradedSeries t(cutoff_);
        for (const auto& [d, p] : comp_)
            if (d < 0) t.add(d, p * WPoly(Rational(1) / c));
        GradedSeries acc = constant(cutoff_, Rational(1) / c);
        GradedSeries pw = constant(cutoff_, Rational(1));
        for (int k = 1; k <= cutoff_; ++k) {
            pw = pw * t;
            if (pw.comp_.empty()) break;
            GradedSeries scaled(cutoff_);
            Rational sign = k % 2 ? Rational(-1) : Rational(1);
            for (const auto& [d, p] : pw.comp_) scaled.add(d, p * WPoly(sign / c));
            acc = acc + scaled;
        }
        return acc;
    }

private:
    int cutoff_;
    std::map<int, WPoly> comp_;
};

GradedSeries lambda_series(const LSym& sym, int cutoff) {
    // lambda_i(a) -> 1 + sum_r mu_i^(r) a^r / r!
    GradedSeries s = GradedSeries::constant(cutoff, Rational(1));
    Rational pow(1), fact(1);
    for (int r = 0; r < cutoff; ++r) {
        if (r > 0) {
            pow *= sym.arg;
            fact *= r;
        }
        WPoly p = WPoly::symbol(WSym{sym.idx, r}) * WPoly(pow / fact);
        s.add(-(r + 1), p);
    }
    return s;
}

GradedSeries poly_series(const LPoly& P, int cutoff) {
    GradedSeries total(cutoff);
    for (const auto& [mono, c] : P.terms()) {
        GradedSeries term = GradedSeries::constant(cutoff, c);
        for (const auto& [sym, e] : mono) {
            GradedSeries ls = lambda_series(sym, cutoff);
            for (int k = 0; k < e; ++k) term = term * ls;
        }
        total = total + term;
    }
    return total;
}

} // namespace

GrResult gr_map(const LFrac& A, int cap) {
    if (A.is_zero()) return {0, WPoly()};
    GrResult prev{1, WPoly()};
    bool have_prev = false;
    for (int cutoff = 1; cutoff <= cap; ++cutoff) {
        GradedSeries s = poly_series(A.num, cutoff) * poly_series(A.den, cutoff).inverse();
        if (s.components().empty()) continue;
        int top = s.components().rbegin()->first;
        GrResult cur{top, s.components().rbegin()->second};
        if (have_prev && prev.degree == cur.degree && prev.top == cur.top) return cur;
        prev = cur;
        have_prev = true;
    }
    throw InputError("gr truncation not saturated at cap R=" + std::to_string(cap));
}

Family langlands_dual(Family f) {
    switch (f) {
        case Family::B: return Family::C;
        case Family::C: return Family::B;
        default: return f;
    }
}

std::vector<WPoly> v_coefficients(int i, Family family, int n_or_N, int R) {
    const int ncolors = family == Family::A ? n_or_N - 1 : n_or_N;
    if (i < 1 || i > ncolors) throw InputError("screening index out of range");
    const int n = n_or_N;
    // exponent series E(z) = sum_{m>=1} g_m z^m / m with
    // F_jj[-m] = mu_j^(m-1)/(m-1)!
    auto gm = [&](int m) {
        WPoly g;
        Rational fact(1);
        for (int k = 1; k < m; ++k) fact *= k;
        auto mu = [&](int j) { return WPoly::symbol(WSym{j, m - 1}) * WPoly(Rational(1) / fact); };
        if (family == Family::A || i < ncolors) {
            g = mu(i) - mu(i + 1);
        } else {
            switch (family) {
                case Family::B: g = mu(n); break;
                case Family::C: g = mu(n) * WPoly(Rational(2)); break;
                case Family::D: g = mu(n - 1) + mu(n); break;
                default: break;
            }
        }
        return g * WPoly(Rational(1, m));
    };
    // exp of the series: V = sum_k E^k / k!, truncated at z^R
    std::vector<WPoly> E(static_cast<size_t>(R) + 1);
    for (int m = 1; m <= R; ++m) E[static_cast<size_t>(m)] = gm(m);
    std::vector<WPoly> V(static_cast<size_t>(R) + 1);
    V[0] = WPoly(Rational(1));
    std::vector<WPoly> pw(static_cast<size_t>(R) + 1); // E^k truncated
    pw[0] = WPoly(Rational(1));
    Rational kfact(1);
    for (int k = 1; k <= R; ++k) {
        std::vector<WPoly> next(static_cast<size_t>(R) + 1);
        for (int a = 0; a <= R; ++a) {
            if (pw[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 1; a + b <= R; ++b)
                next[static_cast<size_t>(a + b)] +=
                    pw[static_cast<size_t>(a)] * E[static_cast<size_t>(b)];
        }
        pw = std::move(next);
        kfact *= k;
        for (int r = k; r <= R; ++r)
            V[static_cast<size_t>(r)] += pw[static_cast<size_t>(r)] * WPoly(Rational(1) / kfact);
    }
    return V;
}

WPoly screening_V(int i, const WPoly& P, Family family, int n_or_N) {
    const int ncolors = family == Family::A ? n_or_N - 1 : n_or_N;
    const int R = P.max_r();
    std::vector<WPoly> V = v_coefficients(i, family, n_or_N, R);
    WPoly out;
    for (int r = 0; r <= R; ++r) {
        // d/dF_jj[-r-1] = r! d/dmu_j^(r)
        Rational fact(1);
        for (int k = 2; k <= r; ++k) fact *= k;
        WPoly slot;
        if (family == Family::A || i < ncolors) {
            slot = P.partial(WSym{i, r}) - P.partial(WSym{i + 1, r});
        } else {
            switch (family) {
                case Family::B: slot = P.partial(WSym{n_or_N, r}); break;
                case Family::C: slot = P.partial(WSym{n_or_N, r}); break;
                case Family::D:
                    slot = P.partial(WSym{n_or_N - 1, r}) + P.partial(WSym{n_or_N, r});
                    break;
                default: break;
            }
        }
        if (slot.is_zero()) continue;
        out += V[static_cast<size_t>(r)] * slot * WPoly(fact);
    }
    return out;
}

bool is_W_element(const WPoly& P, Family family, int n_or_N) {
    const int ncolors = family == Family::A ? n_or_N - 1 : n_or_N;
    for (int i = 1; i <= ncolors; ++i)
        if (!screening_V(i, P, family, n_or_N).is_zero()) return false;
    return true;
}

WDiffElement hc_image(Family family, HcKind kind, int m, int n_or_N) {
    WPoly one(Rational(1));
    auto tau_plus = [&](const WPoly& p) {
        WDiffElement s = WDiffElement::term(1, one);
        s += WDiffElement::term(0, p);
        return s;
    };
    auto mu0 = [&](int i) { return WPoly::symbol(WSym{i, 0}); };
    switch (family) {
        case Family::A: {
            const int N = n_or_N;
            std::vector<WDiffElement> x;
            for (int i = 1; i <= N; ++i) x.push_back(tau_plus(mu0(i)));
            switch (kind) {
                case HcKind::CdetChain: return ncsf_elementary(x, N);
                case HcKind::Elementary: return ncsf_elementary(x, m);
                case HcKind::Complete: return ncsf_complete(x, m);
                default: throw InputError("type A supports cdet/e/h images");
            }
        }
        case Family::B: {
            if (kind != HcKind::BcdTrace) throw InputError("type B supports the trace image");
            const int n = n_or_N;
            std::vector<WDiffElement> x;
            for (int i = 1; i <= n; ++i) x.push_back(tau_plus(mu0(i)));
            for (int i = n; i >= 1; --i) x.push_back(tau_plus(-mu0(i)));
            return ncsf_complete(x, m);
        }
        case Family::C: {
            if (kind != HcKind::BcdTrace) throw InputError("type C supports the trace image");
            const int n = n_or_N;
            std::vector<WDiffElement> x;
            for (int i = 1; i <= n; ++i) x.push_back(tau_plus(mu0(i)));
            x.push_back(WDiffElement::term(1, one));
            for (int i = n; i >= 1; --i) x.push_back(tau_plus(-mu0(i)));
            return ncsf_elementary(x, m);
        }
        case Family::D: {
            const int n = n_or_N;
            if (kind == HcKind::Pfaffian) {
                // (F_11[-1] - tau)...(F_nn[-1] - tau) . 1
                WDiffElement prod = WDiffElement::term(0, one);
                for (int i = 1; i <= n; ++i) {
                    WDiffElement f = WDiffElement::term(0, mu0(i));
                    f += WDiffElement::term(1, -one);
                    prod = prod * f;
                }
                return prod.slice(0);
            }
            if (kind != HcKind::BcdTrace) throw InputError("type D supports trace/pfaffian images");
            std::vector<WDiffElement> first, second;
            for (int i = 1; i <= n - 1; ++i) first.push_back(tau_plus(mu0(i)));
            for (int i = n; i >= 1; --i) first.push_back(tau_plus(-mu0(i)));
            for (int i = 1; i <= n; ++i) second.push_back(tau_plus(mu0(i)));
            for (int i = n - 1; i >= 1; --i) second.push_back(tau_plus(-mu0(i)));
            WDiffElement sum = ncsf_complete(first, m) + ncsf_complete(second, m);
            return sum * WDiffElement::term(0, WPoly(Rational(1, 2)));
        }
    }
    throw InputError("unreachable hc family");
}

} // namespace gaudin
