#include <doctest.h>

#include <json.hpp>

#include "twistknot/report_json.hpp"

using namespace twistknot;

TEST_SUITE("report_json") {

TEST_CASE("rendered schema carries the documented fields") {
    const std::string text = render_report_json(certify(2));
    const auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == "1");
    CHECK(j["q"] == 2);
    CHECK(j["knot"] == "J(2,4)");
    CHECK(j["riley"]["coeffs"] == nlohmann::json({1, -2, 1, -1}));
    CHECK(j["riley"]["degree"] == 3);
    CHECK(j["riley"]["leading"] == -1);
    CHECK(j["gamma"]["coeffs"] == nlohmann::json({4, 0, 1}));
    CHECK(j["delta"]["coeffs"] == nlohmann::json({-4}));
    CHECK(j["alexander"] == nlohmann::json({2, -3, 2}));
    CHECK(j["certificates"]["gcd_gamma"] == nlohmann::json({"1"}));
    CHECK(j["verdicts"]["consistent"] == true);
    CHECK(j["fox_check"]["ran"] == false);
    CHECK(j["fox_check"]["agrees"].is_null());
    CHECK(j["numeric"].is_null());
}

TEST_CASE("zero delta renders a null degree") {
    const auto j = nlohmann::json::parse(render_report_json(certify(1)));
    CHECK(j["delta"]["coeffs"].empty());
    CHECK(j["delta"]["degree"].is_null());
}

TEST_CASE("round trip is byte-exact") {
    CertifyOptions opts;
    opts.run_numeric = true;
    for (int q : {1, -1, 2, -3, 5}) {
        const std::string once = render_report_json(certify(q, opts));
        const std::string twice = render_report_json(parse_report_json(once));
        CHECK(once == twice);
    }
    // also without the numeric block and with the fox oracle
    CertifyOptions fox_only;
    fox_only.run_fox = true;
    fox_only.run_numeric = false;
    const std::string once = render_report_json(certify(-2, fox_only));
    CHECK(render_report_json(parse_report_json(once)) == once);
}

TEST_CASE("rendering is deterministic") {
    CertifyOptions opts;
    opts.run_numeric = true;
    CHECK(render_report_json(certify(3, opts)) == render_report_json(certify(3, opts)));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_report_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_report_json("{\"schema_version\":\"1\"}"), ParseError);
    CHECK_THROWS_AS(parse_report_json("{\"schema_version\":\"99\",\"q\":1}"), ParseError);
}

}  // TEST_SUITE
