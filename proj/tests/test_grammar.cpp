#include "doctest.h"

#include "gramcalc/error.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/reference_tables.hpp"

using namespace gramcalc;

namespace {
LaurentPoly P(const char* s, VarTable hint = {}) { return parse_poly(s, hint); }
} // namespace

TEST_CASE("derive examples")
{
    CHECK(derive(grammars::eulerian(), P("y")) == P("x*y"));
    CHECK(derive(grammars::eulerian(), P("7")).is_zero());
    CHECK(derive(grammars::derivative(), P("a^-1")) == P("-a^-1*x"));
}

TEST_CASE("derive_n examples")
{
    CHECK(derive_n(grammars::eulerian(), P("y"), 4) == P(tables::A[3].poly));
    CHECK(derive_n(grammars::eulerian(), P("x*y^3"), 0) == P("x*y^3"));
    CHECK(derive_n(grammars::dumont(), P("v"), 6) == P("32*u*v^5 + 416*u^2*v^3 + 272*u^3*v"));
}

TEST_CASE("gen_coeffs examples")
{
    TruncSeries s = gen_coeffs(grammars::eulerian(), P("x*y^-1"), 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(s[k] == P("x*y^-1") * P("y - x").pow(k));
    TruncSeries one = gen_coeffs(grammars::eulerian(), P("1"), 3);
    CHECK(one == TruncSeries::constant(LaurentPoly(1), 3));
    TruncSeries inv = gen_coeffs(grammars::derivative(), P("a^-1"), 4);
    const char* expected[] = {"a^-1", "-a^-1*x", "-a^-1", "a^-1*x", "a^-1"};
    for (int k = 0; k <= 4; ++k)
        CHECK(inv[k] == P(expected[k]));
}

TEST_CASE("leibniz examples")
{
    CHECK(leibniz_expand(grammars::eulerian(), P("x"), P("y"), 0) == P("x*y"));
    CHECK(leibniz_expand(grammars::eulerian(), P("x"), P("y"), 1) == P("x*y*(x + y)"));
    CHECK(leibniz_expand(grammars::peak(), P("x"), P("x"), 2) == derive_n(grammars::peak(), P("x^2"), 2));
}

TEST_CASE("verify_transformation examples")
{
    SubstitutionMap phi{{"u", P("x*y")}, {"v", P("1/2*x + 1/2*y")}};
    CHECK(verify_transformation(grammars::eulerian(), phi, grammars::dumont()).holds);
    SubstitutionMap id{{"x", P("x")}, {"y", P("y")}};
    CHECK(verify_transformation(grammars::eulerian(), id, grammars::eulerian()).holds);
    auto bad = verify_transformation(grammars::eulerian(), phi, grammars::andre());
    CHECK(!bad.holds);
    CHECK(bad.variable == "u");
    CHECK(bad.derived == P("x^2*y + x*y^2"));
    CHECK(bad.expected == P("1/2*x^2*y + 1/2*x*y^2"));
}

TEST_CASE("extend_sqrt examples")
{
    Grammar g = Grammar::parse("xb -> xb*yb\nyb -> xb*yb\n");
    Grammar e = extend_sqrt(g, "z", P("xb*yb"));
    CHECK(e.rule("z") == P("1/2*z*xb + 1/2*z*yb"));
    CHECK(e.reduce(P("z^3")) == P("z*xb*yb"));
    CHECK(derive(e, P("z^2")) == derive(e, P("xb*yb")));

    Grammar c = extend_sqrt(grammars::eulerian(), "z", P("4"));
    CHECK(c.rule("z").is_zero());

    CHECK_THROWS_AS(extend_sqrt(e, "w", P("xb")), ExtensionConflict);
    CHECK_THROWS_AS(extend_sqrt(g, "xb", P("yb")), ExtensionConflict);
}

TEST_CASE("constant detection")
{
    CHECK(derive(grammars::derivative(), P("(1 + x^2)*a^-2")).is_zero());
}

TEST_CASE("grammar text and json round trip")
{
    Grammar g = Grammar::parse("# comment\na -> a*x\nx -> 1 + x^2\n");
    CHECK(derive_n(g, P("x"), 6) == P(tables::P[5].poly));
    Grammar h = Grammar::from_json(g.to_json());
    CHECK(h.to_text() == g.to_text());
    Grammar s = Grammar::parse("x -> x*y\ny -> x*y\nsqrt z^2 = x*y\n");
    CHECK(s.extension().has_value());
    CHECK(Grammar::from_json(s.to_json()).to_json() == s.to_json());
    CHECK_THROWS_AS(Grammar::parse("x => y"), ParseError);
}
