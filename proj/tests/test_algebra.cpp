#include "doctest.h"

#include "gramcalc/codec.hpp"
#include "gramcalc/error.hpp"
#include "gramcalc/laurent.hpp"

using namespace gramcalc;

namespace {
LaurentPoly P(const char* s, VarTable hint = {}) { return parse_poly(s, hint); }
} // namespace

TEST_CASE("scalar basics")
{
    CHECK(Scalar::parse_rational("6/4") == Scalar(Rational(3, 2)));
    CHECK_THROWS_AS(Scalar::parse_rational("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse_rational("1/x"), ParseError);
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(1) + i).pow(2) == Scalar(2) * i);
    CHECK(Scalar(Rational(1), Rational(0)) == Scalar(1));
    CHECK((Scalar(1) + i).inverse() == Scalar(Rational(1, 2), Rational(-1, 2)));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(9) == 362880);
}

TEST_CASE("poly_arith examples")
{
    CHECK(poly_arith(ArithKind::mul, P("x + y"), P("x + y")) == P("x^2 + 2*x*y + y^2"));
    CHECK(poly_arith(ArithKind::add, P("3*x - y"), LaurentPoly()) == P("3*x - y"));
    CHECK(poly_arith(ArithKind::mul, P("x*y"), P("x + y")) == P("x*y^2 + x^2*y"));
    CHECK(poly_arith(ArithKind::sub, P("x"), P("x")).is_zero());
}

TEST_CASE("mixed variable tables merge")
{
    LaurentPoly s = P("x") + P("y");
    CHECK(s.vars().size() == 2);
    CHECK(s == P("y + x"));
}

TEST_CASE("partial derivative examples")
{
    CHECK(partial_derivative(P("x^2*y"), "x") == P("2*x*y"));
    CHECK(partial_derivative(P("x^-1"), "x") == P("-x^-2"));
    CHECK(partial_derivative(P("16 + 136*x^2 + 240*x^4 + 120*x^6"), "x") == P("272*x + 960*x^3 + 720*x^5"));
}

TEST_CASE("substitute examples")
{
    VarTable uv{"u", "v"};
    LaurentPoly d2 = P("2*u*v", uv);
    SubstitutionMap m{{"u", P("x*y")}, {"v", P("1/2*x + 1/2*y")}};
    CHECK(substitute(d2, m) == P("x*y^2 + x^2*y"));

    LaurentPoly f = P("3*x^2 - x*y + 7");
    CHECK(substitute(f, {{"x", P("x")}, {"y", P("y")}}) == f);
    CHECK_THROWS_AS(substitute(P("x^-1"), {{"x", P("x + y")}}), NonInvertibleSubstitution);
    CHECK(substitute(P("x^-2"), {{"x", P("2*y")}}) == P("1/4*y^-2"));
}

TEST_CASE("substitute_rational examples")
{
    // 4x/(1+x)^2 cleared by powers of 1+x
    CHECK(substitute_rational(P("1 + x"), "x", P("4*x"), P("1 + x"), 2, 2) == P("1 + 6*x + x^2"));
    CHECK(substitute_rational(P("2"), "x", P("4*x"), P("1 + x"), 2, 1) == P("2 + 2*x"));
    CHECK(substitute_rational(P("5"), "x", P("4*x"), P("1 + x"), 2, 3) == P("5*(1 + x)^3"));
    CHECK_THROWS_AS(substitute_rational(P("x^2"), "x", P("4*x"), P("1 + x"), 2, 3), InsufficientClearing);

    RationalFunction v(P("4*x"), P("(1 + x)^2"));
    CHECK(substitute_rational(P("1 + x"), "x", v, 1) == P("1 + 6*x + x^2"));
    CHECK_THROWS_AS(substitute_rational(P("x^3"), "x", v, 2), InsufficientClearing);
    CHECK_THROWS_AS(substitute_rational(P("x^-1"), "x", v, 2), InsufficientClearing);
}

TEST_CASE("evaluate examples")
{
    CHECK(evaluate(P("x + 4*x^2 + x^3"), {{"x", Scalar::i()}}) == Scalar(-4));
    CHECK(evaluate(P("3*x*y - 2*y^2 + 5"), {{"x", Scalar(1)}, {"y", Scalar(1)}}) == Scalar(6));
    CHECK(evaluate(P("16*x + 40*x^3 + 24*x^5"), {{"x", Scalar(1)}}) == Scalar(80));
    CHECK_THROWS_AS(evaluate(P("x^-1"), {{"x", Scalar(0)}}), DivisionByZero);
    CHECK(evaluate_partial(P("x*y + y"), {{"y", Scalar(2)}}) == P("2*x + 2"));
}

TEST_CASE("codec examples")
{
    CHECK(render(P("x*y^2 + x^2*y")) == "x^2*y + x*y^2");
    LaurentPoly inv = P("x^-1");
    CHECK(inv.is_monomial());
    CHECK(inv.coefficient({-1}) == Scalar(1));
    json j = to_json(P("2*u*v"));
    CHECK(j.dump() == R"({"terms":[{"coeff":"2","exps":[1,1]}],"vars":["u","v"]})");
    CHECK(from_json(j) == P("2*u*v"));
    CHECK(render(P("6*x^4 + 8*x^2 + 2")) == "6*x^4 + 8*x^2 + 2");
    CHECK(render(P("-x + 1/2")) == "-x + 1/2");
    CHECK(render(P("x*(1 + I)")) == "(1 + I)*x");
    CHECK(parse_poly(render(P("x*(1 + I) - 3/7*y^-2"))) == P("x*(1 + I) - 3/7*y^-2"));
    CHECK_THROWS_AS(parse_poly("x + * y"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x + y)^-1"), ParseError);
    try {
        parse_poly("x + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("exact division")
{
    CHECK(exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
    CHECK_THROWS_AS(exact_divide(P("x^2 + 1"), P("x - 1")), InexactDivision);
    CHECK(exact_divide(P("x^-1*y + y"), P("y")) == P("x^-1 + 1"));
}

TEST_CASE("homogeneity and halving")
{
    CHECK(is_homogeneous(P("x*y^2 + x^2*y"), 3));
    CHECK(!is_homogeneous(P("x*y + x"), 2));
    CHECK(is_homogeneous(P("u*v^2 + u^2"), 4, {{"u", 2}}));
    CHECK(halve_exponents(P("x^4 + x^2"), "x") == P("x^2 + x"));
    CHECK_THROWS(halve_exponents(P("x^3"), "x"));
}

TEST_CASE("rational function equality by cross multiplication")
{
    CHECK(RationalFunction(P("x^2 - 1"), P("x - 1")) == RationalFunction(P("x + 1")));
    CHECK(!(RationalFunction(P("x"), P("y")) == RationalFunction(P("y"), P("x"))));
}
