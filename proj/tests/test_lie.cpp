#include <doctest.h>

#include "lie.hpp"

using namespace gaudin;

namespace {

LinComb single(int i, int j, Rational c = Rational(1)) {
    LinComb x;
    x[{i, j}] = c;
    return x;
}

LinComb add(LinComb a, const LinComb& b, const Rational& scale = Rational(1)) {
    for (const auto& [p, c] : b) {
        a[p] += c * scale;
        if (a[p] == 0) a.erase(p);
    }
    return a;
}

LinComb chevalley_e(const LieSpec& s, int l) {
    auto ch = s.chevalley(l);
    return single(ch.e.first, ch.e.second, ch.e_coeff);
}
LinComb chevalley_f(const LieSpec& s, int l) {
    auto ch = s.chevalley(l);
    return single(ch.f.first, ch.f.second, ch.f_coeff);
}
LinComb chevalley_h(const LieSpec& s, int l) {
    LinComb h;
    std::vector<Rational> d = s.coroot_diag(l);
    for (int k = 1; k <= s.diag_size; ++k)
        if (d[static_cast<size_t>(k - 1)] != 0) h[{k, k}] = d[static_cast<size_t>(k - 1)];
    return h;
}

} // namespace

TEST_CASE("bracket examples") {
    LieSpec gl2 = LieSpec::make(Family::A, 2);
    CHECK(gl2.bracket(1, 2, 2, 1) == add(single(1, 1), single(2, 2), Rational(-1)));

    LieSpec o3 = LieSpec::make(Family::B, 1);
    CHECK(o3.bracket(1, 2, 2, 1) == single(1, 1));

    LieSpec sp2 = LieSpec::make(Family::C, 1);
    CHECK(sp2.bracket(1, 1, 1, 2) == single(1, 2, Rational(2)));
}

TEST_CASE("antisymmetry and Jacobi hold on all basis triples, N <= 6") {
    std::vector<LieSpec> specs;
    for (int N : {2, 3, 4}) specs.push_back(LieSpec::make(Family::A, N));
    for (int n : {1, 2}) specs.push_back(LieSpec::make(Family::B, n));
    for (int n : {1, 2, 3}) specs.push_back(LieSpec::make(Family::C, n));
    for (int n : {2, 3}) specs.push_back(LieSpec::make(Family::D, n));
    specs.push_back(LieSpec::make(Family::B, 2)); // o_5 twice is harmless

    for (const LieSpec& s : specs) {
        CAPTURE(s.name());
        std::vector<BasisPair> basis = s.all_basis();
        for (const BasisPair& x : basis) {
            for (const BasisPair& y : basis) {
                LinComb xy = s.bracket(x.first, x.second, y.first, y.second);
                LinComb yx = s.bracket(y.first, y.second, x.first, x.second);
                CHECK(xy == add(LinComb{}, yx, Rational(-1)));
            }
        }
        // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        for (const BasisPair& x : basis) {
            LinComb lx = single(x.first, x.second);
            for (const BasisPair& y : basis) {
                LinComb ly = single(y.first, y.second);
                for (const BasisPair& z : basis) {
                    LinComb lz = single(z.first, z.second);
                    LinComb total =
                        add(add(s.bracket_combs(s.bracket_combs(lx, ly), lz),
                                s.bracket_combs(s.bracket_combs(ly, lz), lx)),
                            s.bracket_combs(s.bracket_combs(lz, lx), ly));
                    CHECK(total.empty());
                }
            }
        }
    }
}

TEST_CASE("Chevalley triples satisfy the defining relations") {
    std::vector<LieSpec> specs = {LieSpec::make(Family::A, 3), LieSpec::make(Family::B, 2),
                                  LieSpec::make(Family::C, 2), LieSpec::make(Family::D, 2),
                                  LieSpec::make(Family::B, 1), LieSpec::make(Family::C, 1),
                                  LieSpec::make(Family::D, 3)};
    for (const LieSpec& s : specs) {
        CAPTURE(s.name());
        for (int i = 1; i <= s.rank(); ++i) {
            for (int j = 1; j <= s.rank(); ++j) {
                LinComb ef = s.bracket_combs(chevalley_e(s, i), chevalley_f(s, j));
                if (i == j)
                    CHECK(ef == chevalley_h(s, i));
                else
                    CHECK(ef.empty());
                // [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j
                LinComb he = s.bracket_combs(chevalley_h(s, i), chevalley_e(s, j));
                CHECK(he == add(LinComb{}, chevalley_e(s, j), s.cartan(i, j)));
                LinComb hf = s.bracket_combs(chevalley_h(s, i), chevalley_f(s, j));
                CHECK(hf == add(LinComb{}, chevalley_f(s, j), -s.cartan(i, j)));
            }
        }
    }
}

TEST_CASE("prime map and linear symmetry of the F spanning set") {
    for (const LieSpec& s : {LieSpec::make(Family::B, 2), LieSpec::make(Family::C, 2),
                             LieSpec::make(Family::D, 2)}) {
        CAPTURE(s.name());
        for (int i = 1; i <= s.N; ++i) CHECK(s.prime(s.prime(i)) == i);
        // F_i'j' = -F_ji (orthogonal), -eps_i eps_j F_ji (symplectic)
        for (int i = 1; i <= s.N; ++i) {
            for (int j = 1; j <= s.N; ++j) {
                auto lhs = s.canonicalize(s.prime(i), s.prime(j));
                auto rhs = s.canonicalize(j, i);
                Rational factor = -s.theta(j, i);
                CHECK(lhs.sign == factor * rhs.sign);
                if (lhs.sign != 0) {
                    CHECK(lhs.i == rhs.i);
                    CHECK(lhs.j == rhs.j);
                }
            }
        }
    }
}

TEST_CASE("coroot pairings") {
    LieSpec gl2 = LieSpec::make(Family::A, 2);
    CHECK(gl2.pair_coroot_weight(1, {Rational(1), Rational(0)}) == Rational(1));
    CHECK(gl2.pair_coroot_weight(1, {Rational(0), Rational(0)}) == Rational(0));

    LieSpec o5 = LieSpec::make(Family::B, 2);
    CHECK(o5.pair_coroot_weight(2, {Rational(1), Rational(0)}) == Rational(0));
    CHECK(o5.pair_coroot_weight(2, {Rational(0), Rational(1)}) == Rational(2)); // h_2 = 2 F_22

    SUBCASE("Cartan pairings a_ls = alpha_s(h_l)") {
        for (const LieSpec& s : {LieSpec::make(Family::A, 3), LieSpec::make(Family::B, 2),
                                 LieSpec::make(Family::C, 2), LieSpec::make(Family::D, 3)}) {
            for (int l = 1; l <= s.rank(); ++l) CHECK(s.cartan(l, l) == Rational(2));
        }
        LieSpec a2 = LieSpec::make(Family::A, 3);
        CHECK(a2.cartan(1, 2) == Rational(-1));
        CHECK(a2.cartan(2, 1) == Rational(-1));

        // sp_4: a_12 = alpha_2(h_1) = -2, a_21 = alpha_1(h_2) = -1; B_2 is
        // the transpose. Frozen from [h_l, e_s] = a_ls e_s in the bracket
        // realization.
        LieSpec c2 = LieSpec::make(Family::C, 2);
        CHECK(c2.cartan(1, 2) == Rational(-2));
        CHECK(c2.cartan(2, 1) == Rational(-1));
        LieSpec b2 = LieSpec::make(Family::B, 2);
        CHECK(b2.cartan(1, 2) == Rational(-1));
        CHECK(b2.cartan(2, 1) == Rational(-2));
    }
}

TEST_CASE("simple roots on the diagonal basis") {
    LieSpec gl3 = LieSpec::make(Family::A, 3);
    for (int l = 1; l <= 2; ++l)
        for (int d = 1; d <= 3; ++d)
            CHECK(gl3.simple_root_on_diag(l, d) ==
                  Rational((d == l ? 1 : 0) - (d == l + 1 ? 1 : 0)));

    LieSpec b2 = LieSpec::make(Family::B, 2);
    CHECK(b2.simple_root_on_diag(2, 2) == Rational(1));
    LieSpec d3 = LieSpec::make(Family::D, 3);
    CHECK(d3.simple_root_on_diag(3, 2) == Rational(1)); // alpha_n on F_(n-1,n-1)
    CHECK(d3.simple_root_on_diag(3, 3) == Rational(1));
    LieSpec c2 = LieSpec::make(Family::C, 2);
    CHECK(c2.simple_root_on_diag(2, 2) == Rational(2));
}

TEST_CASE("fixed PBW order: dimensions and height-first layout") {
    CHECK(LieSpec::make(Family::A, 3).neg_basis().size() == 3);
    CHECK(LieSpec::make(Family::B, 2).neg_basis().size() == 4);
    CHECK(LieSpec::make(Family::C, 2).neg_basis().size() == 4);
    CHECK(LieSpec::make(Family::D, 2).neg_basis().size() == 2);
    CHECK(LieSpec::make(Family::D, 3).neg_basis().size() == 6);
    CHECK(LieSpec::make(Family::D, 1).neg_basis().empty()); // degenerate o_2

    LieSpec gl3 = LieSpec::make(Family::A, 3);
    CHECK(gl3.neg_basis()[0] == BasisPair{2, 1});
    CHECK(gl3.neg_basis()[1] == BasisPair{3, 2});
    CHECK(gl3.neg_basis()[2] == BasisPair{3, 1}); // height 2 comes last
}

TEST_CASE("wrong-length weights are rejected") {
    LieSpec o5 = LieSpec::make(Family::B, 2);
    CHECK_THROWS_AS(o5.pair_coroot_weight(1, {Rational(1)}), InputError);
}
