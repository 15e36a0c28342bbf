#include "doctest.h"

#include "gramcalc/error.hpp"
#include "gramcalc/families.hpp"
#include "gramcalc/reference_tables.hpp"

using namespace gramcalc;

namespace {
LaurentPoly P(const char* s, VarTable hint = {}) { return parse_poly(s, hint); }
} // namespace

TEST_CASE("family_poly examples")
{
    CHECK(family_poly(Family::deriv_P, 6) == P("272*x + 1232*x^3 + 1680*x^5 + 720*x^7"));
    CHECK(family_poly(Family::eulerian_biv, 0) == P("y"));
    CHECK(family_poly(Family::deriv_Q, 2) == P("1 + 2*x^2"));
    CHECK(family_poly(Family::lr_peak_biv, 6) == P("32*x^2*y^5 + 416*x^4*y^3 + 272*x^6*y"));
    CHECK(family_poly(Family::left_peak_biv, 5) == P("x*y^5 + 58*x^3*y^3 + 61*x^5*y"));
    CHECK_THROWS_AS(family_poly("nosuch", 1), UnknownFamily);
}

TEST_CASE("univariate conventions")
{
    CHECK(family_poly(Family::interior_peak_uni, 0) == P("x^-1"));
    CHECK(family_poly(Family::lr_peak_uni, 0) == P("1"));
    CHECK(family_poly(Family::left_peak_uni, 0) == P("1"));
    CHECK(family_poly(Family::left_peak_uni, 2) == P("1 + x"));
    CHECK(family_poly(Family::eulerian_uni, 3) == P("x + 4*x^2 + x^3"));
    CHECK(family_poly(Family::andre_uni, 0) == P("1"));
    CHECK(family_poly(Family::andre_uni, 4) == P("x + 4*x^2"));
    CHECK(family_poly(Family::andre_biv, 0) == P("1"));
    CHECK(family_poly(Family::R_family, 1) == P("x*y + x^2"));
    for (int n = 1; n <= 8; ++n)
        CHECK(family_poly(Family::lr_peak_uni, n) == P("x") * family_poly(Family::interior_peak_uni, n));
}

TEST_CASE("family_number examples")
{
    CHECK(family_number("p_at_one", 6) == 3904);
    CHECK(family_number("tangent", 5) == 16);
    CHECK(family_number("springer", 4) == 57);
    CHECK(family_number("euler", 6) == 61);
    CHECK(family_number("secant", 6) == 61);
    CHECK_THROWS_AS(family_number("nosuch", 1), UnknownSequence);
}

TEST_CASE("gamma_expansion examples")
{
    CHECK(gamma_expansion(5).coeffs == std::map<int, Integer>{{1, 1}, {2, 22}, {3, 16}});
    CHECK(gamma_expansion(1).coeffs == std::map<int, Integer>{{1, 1}});
    CHECK(gamma_expansion(6).coeffs == std::map<int, Integer>{{1, 1}, {2, 52}, {3, 136}});
    CHECK_THROWS_AS(gamma_expansion_of(P("x^2*y + 3*x*y^2"), 2), NotGammaExpressible);
}

TEST_CASE("beta_expansion examples")
{
    CHECK(beta_expansion(BetaKind::Q, 5).coeffs == std::map<int, Integer>{{0, 1}, {1, 58}, {2, 61}});
    CHECK(beta_expansion(BetaKind::P, 1).coeffs == std::map<int, Integer>{{0, 1}});
    CHECK(beta_expansion(BetaKind::Q, 6).coeffs == std::map<int, Integer>{{0, 1}, {1, 179}, {2, 479}, {3, 61}});
    for (int n = 1; n <= 8; ++n) {
        for (BetaKind k : {BetaKind::P, BetaKind::Q, BetaKind::gbeta}) {
            auto t = beta_expansion(k, n);
            CHECK(beta_sum(k, t) == family_poly(k == BetaKind::Q ? Family::deriv_Q : Family::deriv_P, n));
        }
    }
    CHECK_THROWS_AS(beta_expansion_of(BetaKind::Q, P("x^2"), 1), NotBetaExpressible);
}

TEST_CASE("recurrence_poly examples")
{
    CHECK(recurrence_poly(RecurrenceKind::P, 2) == P("2*x + 2*x^3"));
    CHECK(recurrence_poly(RecurrenceKind::Q, 1) == P("x"));
    CHECK(recurrence_poly(RecurrenceKind::P, 0) == P("x"));
    for (int n = 0; n <= 12; ++n) {
        recurrence_poly(RecurrenceKind::P, n);
        recurrence_poly(RecurrenceKind::Q, n);
    }
}

TEST_CASE("reference tables")
{
    VarTable xy{"x", "y"}, uv{"u", "v"};
    for (const auto& r : tables::A)
        CHECK(family_poly(Family::eulerian_biv, r.n) == P(r.poly, xy));
    for (const auto& r : tables::D)
        CHECK(family_poly(Family::dumont, r.n) == P(r.poly, uv));
    for (const auto& r : tables::E)
        CHECK(family_poly(Family::andre_biv, r.n) == P(r.poly, uv));
    for (const auto& r : tables::L)
        CHECK(family_poly(Family::left_peak_biv, r.n) == P(r.poly, xy));
    for (const auto& r : tables::W)
        CHECK(family_poly(Family::lr_peak_biv, r.n) == P(r.poly, xy));
    for (const auto& r : tables::P)
        CHECK(family_poly(Family::deriv_P, r.n) == P(r.poly));
    for (const auto& r : tables::Q) {
        if (r.n == 2) {
            CHECK(family_poly(Family::deriv_Q, 2) != P(r.poly));
            CHECK(family_poly(Family::deriv_Q, 2) == P(tables::Q2_corrected));
        } else {
            CHECK(family_poly(Family::deriv_Q, r.n) == P(r.poly));
        }
    }
    for (const auto& r : tables::gamma) {
        auto t = gamma_expansion(r.n);
        LaurentPoly sum;
        for (const auto& [k, c] : t.coeffs)
            sum += Scalar(c) * P("u").pow(k) * P("v").pow(r.n + 1 - 2 * k);
        CHECK(sum == P(r.poly));
    }
}
