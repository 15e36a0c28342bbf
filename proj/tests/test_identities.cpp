#include "doctest.h"

#include "gramcalc/error.hpp"
#include "gramcalc/identities.hpp"

#include <fstream>
#include <iostream>
#include <set>

using namespace gramcalc;

TEST_CASE("registry is sorted, unique and large enough")
{
    const auto& r = identity_registry();
    CHECK(r.size() >= 30);
    std::set<std::string> names;
    for (std::size_t i = 0; i < r.size(); ++i) {
        names.insert(r[i].name);
        if (i > 0)
            CHECK(r[i - 1].name < r[i].name);
    }
    CHECK(names.size() == r.size());
    for (const char* required : {"petersen", "stembridge", "hoffman_egf", "pq_log", "beta_exp", "ma_composition",
                                 "LM_convolution", "LL_MM", "M_convolution", "R_convolution", "hoffman_conv",
                                 "mfmy_conv", "hoffman_PQQ", "left_peak_convolution", "gessel", "david_barton_pde",
                                 "david_barton_closed", "knuth_buckholtz", "springer", "euler_complex"})
        CHECK(names.count(required) == 1);
}

TEST_CASE("single identities from examples")
{
    auto kb = run_identity("knuth_buckholtz", 4);
    CHECK(kb.pass);
    CHECK(kb.lo == 0);
    CHECK(kb.hi == 4);
    CHECK(run_identity("petersen", 2).pass);
    auto g0 = run_identity("gamma_eulerian", 0);
    CHECK(g0.pass);
    CHECK(g0.hi < g0.lo);
    CHECK(run_identity("left_peak_convolution", 1).pass);
    CHECK_THROWS_AS(run_identity("nosuch", 3), UnknownIdentity);
}

TEST_CASE("oracle-backed checks are capped")
{
    auto r = run_identity("peak_L", 12);
    CHECK(r.hi == default_oracle_cap);
    CHECK(r.pass);
}

TEST_CASE("run_all at max_n 6 passes")
{
    auto reports = run_all(6);
    CHECK(reports.size() == identity_registry().size());
    for (const auto& r : reports) {
        INFO(r.to_text());
        CHECK(r.pass);
        CHECK(!r.witness.has_value());
    }
}

TEST_CASE("run_all at max_n 0 is degenerate but passes")
{
    for (const auto& r : run_all(0))
        CHECK(r.pass);
}

TEST_CASE("radical point overrides")
{
    Point p{{"x", Scalar(Rational(-3))}};
    auto pt = radical_point_from_values(ClosedForm::gessel_L, p); // sqrt(1-x) = 2
    CHECK(run_identity("gessel", 8, {pt}).pass);
    auto pt2 = radical_point_from_values(ClosedForm::bivariate_L, {{"x", Scalar(5)}, {"y", Scalar(13)}});
    CHECK(run_identity("gessel_bivariate", 8, {pt2}).pass);
    CHECK(run_identity("L_squared_egf", 8, {pt2}).pass);
    auto pt3 = radical_point_from_values(ClosedForm::david_barton_L, {{"x", Scalar(Rational(16, 25))}});
    CHECK(run_identity("david_barton_closed", 8, {pt3}).pass);
}

TEST_CASE("report JSON shape")
{
    auto r = run_identity("springer", 5);
    json j = r.to_json();
    CHECK(j["name"] == "springer");
    CHECK(j["range"] == json::array({0, 5}));
    CHECK(j["status"] == "pass");
    CHECK(!j.contains("witness"));
    CHECK(j["millis"].is_number_integer());
}

TEST_CASE("fault injection names the smallest failing n")
{
    CheckContext ctx(corrupted_provider(Family::deriv_P, 5));
    auto reports = run_all(10, ctx);
    int failing = 0;
    for (const auto& r : reports) {
        if (r.pass)
            continue;
        ++failing;
        REQUIRE(r.witness.has_value());
        // P_5 enters at n = 3 (mfmy), 4 (convolutions), 5 (direct), 6 (integrated log)
        CHECK(r.witness->n >= 3);
        CHECK(r.witness->n <= 6);
    }
    CHECK(failing >= 10);
    auto rec = run_identity(find_identity("deriv_recurrence"), 10, ctx);
    REQUIRE(!rec.pass);
    CHECK(rec.witness->n == 4); // P_5 = (1+x^2) P_4'
    CHECK(run_identity(find_identity("deriv_recurrence"), 3, ctx).pass);
    auto kb = run_identity(find_identity("knuth_buckholtz"), 10, ctx);
    REQUIRE(!kb.pass);
    CHECK(kb.witness->n == 5);
    auto pc = run_identity(find_identity("hoffman_conv"), 10, ctx);
    REQUIRE(!pc.pass);
    CHECK(pc.witness->n == 4);
    // unrelated families stay green
    CHECK(run_identity(find_identity("peak_L"), 8, ctx).pass);
    CHECK(run_identity(find_identity("dumont_andre"), 10, ctx).pass);
}

TEST_CASE("fault in a bivariate peak family")
{
    CheckContext ctx(corrupted_provider(Family::left_peak_biv, 3));
    auto conv = run_identity(find_identity("left_peak_convolution"), 8, ctx);
    REQUIRE(!conv.pass);
    CHECK(conv.witness->n == 3);
    auto oracle = run_identity(find_identity("peak_L"), 8, ctx);
    REQUIRE(!oracle.pass);
    CHECK(oracle.witness->n == 3);
}

TEST_CASE("errata are confirmed and match the shipped file")
{
    for (const auto& e : errata()) {
        INFO(e.location);
        CHECK(e.confirm());
        CHECK(e.printed != e.corrected);
    }
    std::ifstream in(std::string(GRAMCALC_DATA_DIR) + "/errata.json");
    REQUIRE(in.good());
    json shipped = json::parse(in);
    CHECK(shipped == errata_to_json());
    bool q2 = false, da = false;
    for (const auto& e : errata()) {
        q2 = q2 || e.corrected == "1 + 2*x^2";
        da = da || e.corrected == "a*(v^2 + u)";
    }
    CHECK(q2);
    CHECK(da);
}
