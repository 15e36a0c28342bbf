// Randomized and exhaustive property checks. Seeded, so failures reproduce.

#include "doctest.h"

#include "gramcalc/codec.hpp"
#include "gramcalc/families.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/series.hpp"

#include <random>

using namespace gramcalc;

namespace {

const VarTable xyz{"x", "y", "z"};

class PolyGen {
public:
    explicit PolyGen(unsigned seed) : rng_(seed) {}

    Scalar scalar(bool gaussian)
    {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        Rational re(num(rng_), den(rng_));
        re.canonicalize();
        if (!gaussian)
            return Scalar(re);
        Rational im(num(rng_), den(rng_));
        im.canonicalize();
        return Scalar(re, im);
    }

    /// Up to `terms` terms over x,y,z with exponents in [lo_exp, hi_exp].
    LaurentPoly poly(int terms, int lo_exp = -2, bool gaussian = true, int hi_exp = 3)
    {
        std::uniform_int_distribution<int> e(lo_exp, hi_exp), count(0, terms);
        std::bernoulli_distribution coin(0.3);
        LaurentPoly f(xyz);
        int k = count(rng_);
        for (int i = 0; i < k; ++i)
            f.add_term({e(rng_), e(rng_), e(rng_)}, scalar(gaussian && coin(rng_)));
        return f;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

constexpr int trials = 60;

} // namespace

TEST_CASE("ring axioms on random Laurent polynomials")
{
    PolyGen g(20240611);
    LaurentPoly zero(xyz), one = LaurentPoly::constant(xyz, Scalar(1));
    for (int t = 0; t < trials; ++t) {
        LaurentPoly a = g.poly(5), b = g.poly(5), c = g.poly(4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK(a * zero == zero);
        CHECK(parse_poly(render(a), xyz) == a);
        CHECK(from_json(to_json(a)) == a);
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    PolyGen g(7);
    for (int t = 0; t < trials; ++t) {
        LaurentPoly a = g.poly(4, 0), b = g.poly(4, 0);
        SubstitutionMap phi{{"x", g.poly(2, 0, false)}, {"y", LaurentPoly::variable("z") + LaurentPoly(1)}};
        CHECK(substitute(a * b, phi) == substitute(a, phi) * substitute(b, phi));
        CHECK(substitute(a + b, phi) == substitute(a, phi) + substitute(b, phi));
    }
}

TEST_CASE("partial derivatives obey the product rule")
{
    PolyGen g(11);
    for (int t = 0; t < trials; ++t) {
        LaurentPoly a = g.poly(4), b = g.poly(4);
        for (const char* v : {"x", "y", "z"})
            CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
    }
}

TEST_CASE("Leibniz rule for random grammars and pairs, n <= 8")
{
    PolyGen g(99);
    for (int t = 0; t < 12; ++t) {
        std::map<std::string, LaurentPoly> rules;
        for (const char* v : {"x", "y", "z"})
            rules[v] = g.poly(2, 0, false, 1);
        Grammar gr(xyz, rules);
        LaurentPoly f = g.poly(2, -1, false), h = g.poly(2, -1, false);
        int n = 1 + t % 8;
        CHECK_NOTHROW(leibniz_expand(gr, f, h, n));
    }
    for (const auto& gr : {grammars::eulerian(), grammars::dumont(), grammars::peak(), grammars::derivative()}) {
        const auto& vars = gr.vars();
        LaurentPoly f = LaurentPoly::variable(vars[0]), h = LaurentPoly::variable(vars[1]).pow(2);
        for (int n = 0; n <= 8; ++n)
            CHECK_NOTHROW(leibniz_expand(gr, f, h, n));
    }
}

TEST_CASE("Gen is multiplicative, order <= 8")
{
    PolyGen g(5);
    for (int t = 0; t < 8; ++t) {
        std::map<std::string, LaurentPoly> rules;
        for (const char* v : {"x", "y", "z"})
            rules[v] = g.poly(2, 0, false, 1);
        Grammar gr(xyz, rules);
        LaurentPoly f = g.poly(2, 0, false), h = g.poly(2, 0, false);
        int order = 1 + t;
        CHECK(gen_coeffs(gr, f * h, order) == gen_coeffs(gr, f, order) * gen_coeffs(gr, h, order));
    }
}

TEST_CASE("gamma coefficients are nonnegative, n <= 12")
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& [k, c] : gamma_expansion(n).coeffs) {
            CHECK(sgn(c) >= 0);
            CHECK(k >= 1);
        }
}

TEST_CASE("beta coefficients are nonnegative and rebuild the polynomial, n <= 12")
{
    for (int n = 1; n <= 12; ++n)
        for (BetaKind kind : {BetaKind::Q, BetaKind::P, BetaKind::gbeta}) {
            auto t = beta_expansion(kind, n);
            for (const auto& [k, c] : t.coeffs)
                CHECK(sgn(c) >= 0);
            Family f = kind == BetaKind::Q ? Family::deriv_Q : Family::deriv_P;
            CHECK(beta_sum(kind, t) == family_poly(f, n));
        }
}

TEST_CASE("palindromicity and sum rules, n <= 10")
{
    LaurentPoly x = LaurentPoly::variable("x"), y = LaurentPoly::variable("y");
    Integer fact = 1;
    for (int n = 1; n <= 10; ++n) {
        fact *= n;
        Scalar f(fact);
        LaurentPoly a = family_poly(Family::eulerian_biv, n);
        CHECK(substitute(a, {{"x", y}, {"y", x}}) == a);
        LaurentPoly au = family_poly(Family::eulerian_uni, n);
        CHECK(substitute(au, {{"x", x.pow(-1)}}) * x.pow(n + 1) == au);
        CHECK(evaluate(au, {{"x", Scalar(1)}}) == f);

        Point ones_xy{{"x", Scalar(1)}, {"y", Scalar(1)}}, ones_uv{{"u", Scalar(1)}, {"v", Scalar(1)}};
        CHECK(evaluate(family_poly(Family::dumont, n), ones_uv) == f);
        CHECK(evaluate(family_poly(Family::left_peak_biv, n), ones_xy) == f);
        CHECK(evaluate(family_poly(Family::interior_peak_biv, n), ones_xy) == f);
        CHECK(evaluate(family_poly(Family::lr_peak_biv, n), ones_xy) == f);
        CHECK(evaluate(family_poly(Family::R_family, n), ones_xy) == Scalar(2) * f);

        // Homogeneity: A_n of degree n+1; E_n of weight n+1 with u weighted 2.
        CHECK(is_homogeneous(a, n + 1));
        CHECK(is_homogeneous(family_poly(Family::andre_biv, n), n + 1, {{"u", 2}, {"v", 1}}));
        CHECK(is_homogeneous(family_poly(Family::dumont, n), n + 1, {{"u", 2}, {"v", 1}}));

        // P_n has the parity of n+1, Q_n the parity of n.
        for (const auto& [e, c] : univariate_coefficients(family_poly(Family::deriv_P, n), "x"))
            CHECK((e - n - 1) % 2 == 0);
        for (const auto& [e, c] : univariate_coefficients(family_poly(Family::deriv_Q, n), "x"))
            CHECK((e - n) % 2 == 0);
    }
}

TEST_CASE("trigonometric and hyperbolic identities, order <= 16")
{
    for (int order : {0, 1, 5, 16}) {
        auto E = [&](Elementary f) { return elementary_series(f, order); };
        TruncSeries one = TruncSeries::constant(LaurentPoly(1), order);
        CHECK(E(Elementary::cos) * E(Elementary::cos) + E(Elementary::sin) * E(Elementary::sin) == one);
        CHECK(E(Elementary::cosh) * E(Elementary::cosh) - E(Elementary::sinh) * E(Elementary::sinh) == one);
        CHECK(E(Elementary::sec) * E(Elementary::cos) == one);
        CHECK(E(Elementary::tan) * E(Elementary::cos) == E(Elementary::sin));
        CHECK(E(Elementary::exp) * elementary_series(Elementary::exp, order, LaurentPoly(-1)) == one);
        CHECK(E(Elementary::exp) == E(Elementary::cosh) + E(Elementary::sinh));
        if (order >= 1) {
            CHECK(d_dt(E(Elementary::sin)) == E(Elementary::cos).truncated(order - 1));
            CHECK(d_dt(E(Elementary::tan)) ==
                  (one + E(Elementary::tan) * E(Elementary::tan)).truncated(order - 1));
        }
        CHECK(log(E(Elementary::exp)) == integrate(TruncSeries::constant(LaurentPoly(1), order)).truncated(order));
        CHECK(exp(E(Elementary::log1p)) == one + integrate(one).truncated(order));
    }
}
