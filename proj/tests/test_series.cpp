#include "doctest.h"

#include "gramcalc/error.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/series.hpp"

using namespace gramcalc;

namespace {
LaurentPoly P(const char* s, VarTable hint = {}) { return parse_poly(s, hint); }

TruncSeries ints(std::initializer_list<long> v)
{
    std::vector<LaurentPoly> c;
    for (long x : v)
        c.emplace_back(x);
    return TruncSeries(c);
}
} // namespace

TEST_CASE("elementary series")
{
    CHECK(elementary_series(Elementary::cos, 4) == ints({1, 0, -1, 0, 1}));
    CHECK(elementary_series(Elementary::tan, 5) == ints({0, 1, 0, 2, 0, 16}));
    CHECK(elementary_series(Elementary::sec, 6) == ints({1, 0, 1, 0, 5, 0, 61}));
    TruncSeries e = elementary_series(Elementary::exp, 2, P("y - x"));
    CHECK(e[0] == P("1"));
    CHECK(e[1] == P("y - x"));
    CHECK(e[2] == P("(y - x)^2"));
    CHECK(elementary_series(Elementary::log1p, 4) == ints({0, 1, -1, 2, -6}));
}

TEST_CASE("series arithmetic")
{
    auto cos = elementary_series(Elementary::cos, 10);
    auto sin = elementary_series(Elementary::sin, 10);
    CHECK(cos * elementary_series(Elementary::sec, 10) == TruncSeries::constant(LaurentPoly(1), 10));
    CHECK(divide(sin, cos) == elementary_series(Elementary::tan, 10));
    CHECK_THROWS_AS(divide(cos, sin), NonUnitConstantTerm);
    CHECK_THROWS_AS(log(sin), NonUnitConstantTerm);
    CHECK_THROWS_AS(exp(cos), NonUnitConstantTerm);
    auto s = elementary_series(Elementary::exp, 8, P("x"));
    CHECK(exp(log(s)) == s);
    CHECK(d_dt(integrate(s)) == s);
    CHECK(log(s) == integrate(TruncSeries::constant(P("x"), 7)));
}

TEST_CASE("log of Gen(Q) differentiates to Gen(P) shifted")
{
    Grammar g = grammars::derivative();
    TruncSeries q = gen_coeffs(g, P("a"), 9);
    LaurentPoly a = P("a");
    std::vector<LaurentPoly> qc;
    for (const auto& c : q.coeffs())
        qc.push_back(exact_divide(c, a));
    TruncSeries lq = log(TruncSeries(qc));
    TruncSeries p = gen_coeffs(g, P("x"), 8);
    CHECK(d_dt(lq) == p);
}

TEST_CASE("compose_poly_series")
{
    auto tan = elementary_series(Elementary::tan, 8);
    CHECK(compose_poly_series(P("x"), tan) == tan);
    TruncSeries t = ints({0, 1, 0, 0, 0});
    CHECK(compose_poly_series(P("x^2"), t) == ints({0, 0, 2, 0, 0}));
    TruncSeries e = tan + elementary_series(Elementary::sec, 8);
    TruncSeries lhs = compose_poly_series(P("1 + x^2"), e).truncated(7);
    TruncSeries rhs = LaurentPoly(2) * d_dt(e);
    CHECK(lhs == rhs);
}

TEST_CASE("compare_series")
{
    auto cos = elementary_series(Elementary::cos, 5);
    auto sin = elementary_series(Elementary::sin, 5);
    CHECK(compare_series(cos, cos).equal);
    auto c = compare_series(cos, sin);
    CHECK(!c.equal);
    CHECK(c.first_mismatch == 0);
    CHECK_THROWS(compare_series(cos, cos.truncated(3)));
}

TEST_CASE("closed forms")
{
    RadicalPoint g = default_point(ClosedForm::gessel_L);
    CHECK(g.witness("sqrt(1-x)") == Scalar(Rational(1, 2)));
    TruncSeries gl = closed_form_series(ClosedForm::gessel_L, &g, 6);
    Scalar x(Rational(3, 4));
    Scalar l6 = Scalar(1) + Scalar(179) * x + Scalar(479) * x.pow(2) + Scalar(61) * x.pow(3);
    CHECK(gl[6] == LaurentPoly(l6));

    RadicalPoint b = default_point(ClosedForm::bivariate_L);
    TruncSeries bl = closed_form_series(ClosedForm::bivariate_L, &b, 5);
    CHECK(bl[5] == LaurentPoly(Scalar(3 * 3125 + 58 * 27 * 125 + 61 * 243 * 5)));

    TruncSeries hq = closed_form_series(ClosedForm::hoffman_Q, nullptr, 4);
    CHECK(hq[4] == P("5 + 28*x^2 + 24*x^4"));

    RadicalPoint bad = g;
    bad.witnesses["sqrt(1-x)"] = Scalar(Rational(1, 3));
    CHECK_THROWS_AS(closed_form_series(ClosedForm::gessel_L, &bad, 3), InvalidRadicalWitness);
    CHECK_THROWS_AS(radical_point_from_values(ClosedForm::gessel_L, {{"x", Scalar(Rational(1, 2))}}),
                    InvalidRadicalWitness);
}

TEST_CASE("eulerian closed forms match the grammar")
{
    TruncSeries gen = gen_coeffs(grammars::eulerian(), P("y", VarTable{"x", "y"}), 8);
    TruncSeries full = closed_form_series(ClosedForm::eulerian_egf_full, nullptr, 8);
    CHECK(compare_series(gen, full).equal);
    TruncSeries part = closed_form_series(ClosedForm::eulerian_egf, nullptr, 8);
    CHECK(part[0].is_zero());
    for (int n = 1; n <= 8; ++n)
        CHECK(part[n] == gen[n]);
}

TEST_CASE("series json round trip")
{
    auto s = closed_form_series(ClosedForm::hoffman_P, nullptr, 4);
    CHECK(series_from_json(series_to_json(s)) == s);
    CHECK_THROWS_AS(series_from_json(json{{"order", 3}, {"coeffs", json::array()}}), ParseError);
}
