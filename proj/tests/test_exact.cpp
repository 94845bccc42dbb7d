#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffop.hpp"

#include <random>

using namespace gaudin;

namespace {

RatFunc rf(const Rational& c) { return RatFunc(c); }
RatFunc pole(int p) { return RatFunc::simple_pole(Rational(p)); }

RatFunc random_ratfunc(std::mt19937_64& rng) {
    auto small = [&](int lo, int hi) { return Rational(static_cast<int>(rng() % (hi - lo + 1)) + lo); };
    RatFunc f = small(-3, 3) * pole(static_cast<int>(rng() % 5) - 2) + rf(small(-2, 2));
    if (rng() % 2) f = f * RatFunc::variable();
    return f;
}

} // namespace

TEST_CASE("rational function arithmetic canonical forms") {
    RatFunc a = pole(1);                       // 1/(u-1)
    RatFunc b = pole(-1);                      // 1/(u+1)
    RatFunc sum = a + b;                       // 2u/(u^2-1)
    RatFunc expect(Poly::from_coeffs({Rational(0), Rational(2)}),
                   Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)}));
    CHECK(sum == expect);

    CHECK((a * RatFunc()).is_zero());

    RatFunc red(Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)}),
                Poly::from_coeffs({Rational(-1), Rational(1)}));
    CHECK(red == RatFunc(Poly::from_coeffs({Rational(1), Rational(1)}), Poly(Rational(1))));

    SUBCASE("denominator stays monic and reduced") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 50; ++t) {
            RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
            for (const RatFunc& h : {f + g, f - g, f * g}) {
                if (h.is_zero()) continue;
                CHECK(h.den().leading() == Rational(1));
                CHECK(Poly::gcd(h.num(), h.den()).degree() == 0);
            }
            CHECK((f - f).is_zero());
        }
    }

    SUBCASE("division") {
        RatFunc q = a / b; // (u+1)/(u-1)
        CHECK(q == RatFunc(Poly::from_coeffs({Rational(1), Rational(1)}),
                           Poly::from_coeffs({Rational(-1), Rational(1)})));
        CHECK_THROWS(a / RatFunc());
    }
}

TEST_CASE("rational function derivative") {
    Rational z(3);
    RatFunc f = RatFunc::simple_pole(z);
    RatFunc d = f.derivative(); // -1/(u-3)^2
    CHECK(d == -(f * f));

    CHECK(rf(Rational(5)).derivative().is_zero());

    // quotient-rule oracle for u/(u-1)
    RatFunc g(Poly::variable(), Poly::from_coeffs({Rational(-1), Rational(1)}));
    RatFunc expected = (RatFunc(Poly(Rational(1)), Poly(Rational(1))) *
                            RatFunc(Poly::from_coeffs({Rational(-1), Rational(1)}), Poly(Rational(1))) -
                        RatFunc(Poly::variable(), Poly(Rational(1)))) /
                       RatFunc(Poly::from_coeffs({Rational(-1), Rational(1)}), Poly(Rational(1))) /
                       RatFunc(Poly::from_coeffs({Rational(-1), Rational(1)}), Poly(Rational(1)));
    CHECK(g.derivative() == expected);
    CHECK(g.derivative() == -(pole(1) * pole(1)));
}

TEST_CASE("normal-ordered products push d past coefficients") {
    RatFunc f = pole(2);
    DiffOp D = DiffOp::d();
    DiffOp F = DiffOp::term(Word{}, 0, f);
    DiffOp prod = D * F; // f d + f'
    DiffOp expect = DiffOp::term(Word{}, 1, f) + DiffOp::term(Word{}, 0, f.derivative());
    CHECK(prod == expect);

    SUBCASE("d-free products concatenate words") {
        Letter x{1, 2, 1}, y{2, 1, 2};
        DiffOp A = DiffOp::term(Word{x}, 0, rf(Rational(3)));
        DiffOp B = DiffOp::term(Word{y}, 0, rf(Rational(5)));
        CHECK(A * B == DiffOp::term(Word{x, y}, 0, rf(Rational(15))));
        CHECK(B * A == DiffOp::term(Word{y, x}, 0, rf(Rational(15))));
    }

    SUBCASE("(d+f)(d+g) expansion, scalar case") {
        RatFunc g = pole(-1);
        DiffOp A = DiffOp::d() + DiffOp::term(Word{}, 0, f);
        DiffOp B = DiffOp::d() + DiffOp::term(Word{}, 0, g);
        DiffOp expect2 = DiffOp::d(2) + DiffOp::term(Word{}, 1, f + g) +
                         DiffOp::term(Word{}, 0, g.derivative() + f * g);
        CHECK(A * B == expect2);
    }
}

TEST_CASE("scalar differential operators") {
    RatFunc one(Rational(1));
    RatFunc f = pole(0), g = pole(1);
    auto dplus = [&](const RatFunc& h) {
        ScalarDiffOp s = ScalarDiffOp::term(1, one);
        s += ScalarDiffOp::term(0, h);
        return s;
    };
    ScalarDiffOp prod = dplus(f) * dplus(g);
    ScalarDiffOp expect = ScalarDiffOp::term(2, one);
    expect += ScalarDiffOp::term(1, f + g);
    expect += ScalarDiffOp::term(0, g.derivative() + f * g);
    CHECK(prod == expect);

    ScalarDiffOp d = ScalarDiffOp::term(1, one);
    CHECK(d * d == ScalarDiffOp::term(2, one));

    // (d-f)(d+f) = d^2 + f' - f^2
    ScalarDiffOp dm = ScalarDiffOp::term(1, one);
    dm += ScalarDiffOp::term(0, -f);
    ScalarDiffOp prod2 = dm * dplus(f);
    ScalarDiffOp expect2 = ScalarDiffOp::term(2, one);
    expect2 += ScalarDiffOp::term(0, f.derivative() - f * f);
    CHECK(prod2 == expect2);

    SUBCASE("coefficient extraction") {
        ScalarDiffOp A = ScalarDiffOp::term(2, one);
        A += ScalarDiffOp::term(1, rf(Rational(3)));
        A += ScalarDiffOp::term(0, f);
        CHECK(A.coeff(1) == rf(Rational(3)));
        CHECK(ScalarDiffOp::term(2, one).coeff(0).is_zero());
        CHECK((dplus(f) * dplus(g)).coeff(0) == g.derivative() + f * g);
    }
}

TEST_CASE("operator product associativity and Leibniz identity") {
    std::mt19937_64 rng(11);
    auto random_op = [&](int sites) {
        DiffOp op;
        for (int t = 0; t < 3; ++t) {
            Word w;
            int len = static_cast<int>(rng() % 3);
            for (int l = 0; l < len; ++l)
                w.push_back(Letter{static_cast<int>(rng() % 2) + 1, static_cast<int>(rng() % 2) + 1,
                                   static_cast<int>(rng() % static_cast<uint64_t>(sites)) + 1});
            op += DiffOp::term(w, static_cast<int>(rng() % 3), random_ratfunc(rng));
        }
        return op;
    };
    for (int t = 0; t < 10; ++t) {
        DiffOp A = random_op(2), B = random_op(2), C = random_op(2);
        CHECK((A * B) * C == A * (B * C));
    }

    // [d, f] = f'
    RatFunc f = pole(4);
    DiffOp left = DiffOp::d() * DiffOp::term(Word{}, 0, f) - DiffOp::term(Word{}, 1, f);
    CHECK(left == DiffOp::term(Word{}, 0, f.derivative()));

    SUBCASE("slice decomposition reassembles (normal ordering is canonical)") {
        DiffOp A = random_op(2) * random_op(2);
        DiffOp rebuilt;
        for (int k = 0; k <= A.max_ddeg(); ++k) rebuilt += A.slice(k) * DiffOp::d(k);
        CHECK(rebuilt == A);
    }
}

TEST_CASE("jets track truncated Taylor expansions exactly") {
    BigFloat u0(7);
    BigFloat p(2);
    Jet j = Jet::of_simple_pole(4, u0, p);
    RatFunc f = RatFunc::simple_pole(Rational(2));
    CHECK(abs(j.value() - to_big_float(f.eval(Rational(7)))) < BigFloat("1e-55"));
    CHECK(abs(j.derivative().value() - to_big_float(f.derivative().eval(Rational(7)))) <
          BigFloat("1e-55"));

    Jet prod = j * j;
    RatFunc f2 = f * f;
    CHECK(abs(prod.value() - to_big_float(f2.eval(Rational(7)))) < BigFloat("1e-55"));
    CHECK(abs(prod.derivative().derivative().value() -
              to_big_float(f2.derivative().derivative().eval(Rational(7)))) < BigFloat("1e-50"));
}
