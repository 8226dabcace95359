#include "doctest.h"

#include <string>

#include "qhgrass/oracle.hpp"
#include "qhgrass/pieri.hpp"
#include "qhgrass/serialize.hpp"

using namespace qhgrass;

TEST_SUITE("serialize") {

TEST_CASE("polynomial text and latex") {
    const TPoly p = linear_diff(12, 3) * linear_diff(11, 3);
    CHECK(poly_to_text(p) == "t_11*t_12 - t_3*t_12 - t_3*t_11 + t_3^2");
    CHECK(poly_to_latex(p) == "t_{11}t_{12} - t_3t_{12} - t_3t_{11} + t_3^2");
    CHECK(poly_to_text(TPoly::zero()) == "0");
    CHECK(poly_to_text(TPoly::constant(-7)) == "-7");
    CHECK(poly_to_text(TPoly::constant(1)) == "1");
    CHECK(poly_to_text(linear_diff(3, 1)) == "t_3 - t_1");
    CHECK(poly_to_latex(TPoly::monomial(Monomial::var(2, 11), 3)) == "3t_2^{11}");
}

TEST_CASE("polynomial json round trip") {
    SUBCASE("structure of a simple difference") {
        const nlohmann::json j = poly_to_json(linear_diff(3, 1));
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 2);
        // Terms appear in the same canonical order the text renderer uses
        // ("t_3 - t_1"): within a degree, a smaller exponent on the earliest
        // differing variable sorts first.
        CHECK(j[0][0] == 1);
        CHECK(j[0][1] == nlohmann::json::array({{3, 1}}));
        CHECK(j[1][0] == -1);
        CHECK(j[1][1] == nlohmann::json::array({{1, 1}}));
    }
    SUBCASE("round trips") {
        for (const TPoly& p :
             {TPoly::zero(), TPoly::constant(42), linear_diff(5, 2) * linear_diff(11, 2),
              linear_diff(2, 1) * linear_diff(2, 1) * linear_diff(9, 8)})
            CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    SUBCASE("coefficients beyond 64 bits become decimal strings") {
        const Int big = Int("123456789012345678901234567890");
        const TPoly p = TPoly::monomial(Monomial::var(1), big) + TPoly::constant(-big);
        const nlohmann::json j = poly_to_json(p);
        CHECK(j[0][0].is_string());
        CHECK(j[0][0] == "-123456789012345678901234567890");
        CHECK(poly_from_json(j) == p);
    }
}

TEST_CASE("partition rendering") {
    const Rect r{3, 5};
    CHECK(partition_to_text(Partition(r, {2, 1, 1})) == "(2,1,1)");
    CHECK(partition_to_text(Partition::empty(r)) == "()");
    CHECK(partition_to_json(Partition(r, {2, 1})) == nlohmann::json::array({2, 1}));
    CHECK(partition_to_json(Partition::empty(r)) == nlohmann::json::array());
}

TEST_CASE("expansion rendering of the worked product") {
    const Rect r{3, 5};
    const Expansion e = column_pieri(3, Partition(r, {2, 1}));
    CHECK(expansion_to_latex(e) ==
          "(t_5-t_1)(t_3-t_1)\\sigma_{(2,1,1)} + (t_5-t_1)\\sigma_{(2,2,1)} + "
          "q(t_3-t_1)\\sigma_{\\emptyset} + q\\sigma_{(1)}");
    CHECK(expansion_to_text(e) ==
          "(t_5-t_1)(t_3-t_1)*sigma_(2,1,1) + (t_5-t_1)*sigma_(2,2,1) + "
          "q*(t_3-t_1)*sigma_() + q*sigma_(1)");
    // Forced expansion multiplies the factored forms out.
    CHECK(expansion_to_latex(e, true) ==
          "(t_3t_5 - t_1t_5 - t_1t_3 + t_1^2)\\sigma_{(2,1,1)} + "
          "(t_5 - t_1)\\sigma_{(2,2,1)} + q(t_3 - t_1)\\sigma_{\\emptyset} + q\\sigma_{(1)}");
}

TEST_CASE("expansion json round trip") {
    const Rect r{3, 5};
    const Expansion e = column_pieri(3, Partition(r, {2, 1}));
    const nlohmann::json j = expansion_to_json(e, "test");
    CHECK(j["grassmannian"]["m"] == 3);
    CHECK(j["grassmannian"]["n"] == 5);
    CHECK(j["operation"] == "test");
    REQUIRE(j["terms"].is_array());
    REQUIRE(j["terms"].size() == 4);
    // Canonical term order: q-degree, then shape order.
    CHECK(j["terms"][0]["partition"] == nlohmann::json::array({2, 1, 1}));
    CHECK(j["terms"][0]["q"] == 0);
    CHECK(j["terms"][2]["partition"] == nlohmann::json::array());
    CHECK(j["terms"][2]["q"] == 1);

    const Expansion back = expansion_from_json(j);
    CHECK(back == e);
    CHECK(back.rect() == r);

    // Quantum terms and coefficients survive another round.
    CHECK(expansion_from_json(expansion_to_json(back, "test")) == e);
}

TEST_CASE("classical map rendering") {
    const auto cls = huangli_column_pieri(2, Partition(Rect{2, 4}, {1}));
    const std::string text = classical_to_text(cls);
    CHECK(text.find("sigma_") != std::string::npos);
    const nlohmann::json j = classical_to_json(cls, Rect{2, 5}, "classical");
    CHECK(j["terms"].size() == cls.size());
}

TEST_CASE("check report serialization") {
    CheckReport rep;
    rep.checked = 5;
    CHECK(report_to_json(rep) ==
          nlohmann::json({{"status", "ok"},
                          {"checked", 5},
                          {"skipped", 0},
                          {"failures", nlohmann::json::array()}}));
    rep.record_failure(CheckFailure{"route-mismatch", "column rule vs localization",
                                    {1, 1}, {2, 1}, {2, 2, 1}, 1, "0", "t_3 - t_1"});
    const nlohmann::json j = report_to_json(rep);
    CHECK(j["status"] == "fail");
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["kind"] == "route-mismatch");
    CHECK(j["failures"][0]["lambda"] == nlohmann::json::array({1, 1}));
    CHECK(j["failures"][0]["nu"] == nlohmann::json::array({2, 2, 1}));
    CHECK(j["failures"][0]["d"] == 1);
    CHECK(j["failures"][0]["actual"] == "t_3 - t_1");
}

} // TEST_SUITE
