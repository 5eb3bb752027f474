#include <doctest.h>

#include "rrkit/commands.hpp"

using namespace rrkit;

TEST_CASE("cmd_verify") {
    const auto r1 = cmd_verify(Identity::rr1, 4);
    CHECK(r1.status == Status::ok);
    CHECK(exit_code(r1) == 0);
    CHECK(r1.verified_to == 4);
    CHECK(qseries_from_json(r1.payload["sum"]) == QSeries::from_coeffs(4, {1, 1, 1, 1, 2}));
    CHECK(qseries_from_json(r1.payload["product"]) == QSeries::from_coeffs(4, {1, 1, 1, 1, 2}));

    CHECK(cmd_verify(Identity::rr1, 0).status == Status::ok);
    CHECK(cmd_verify(Identity::rr2, 200).status == Status::ok);
}

TEST_CASE("cmd_verify reports the first mismatch") {
    // {1, 3} mod 5 first differs from the sum side at q^3: the sum has 1,
    // 1/((1-q)(1-q^3)) has 2.
    const auto r = cmd_verify(Identity::rr1, ResiduePattern{5, {1, 3}, Integer(-1)}, 20);
    CHECK(r.status == Status::mismatch);
    CHECK(exit_code(r) == 1);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->index == 3);
    CHECK(r.mismatch->expected == 1);
    CHECK(r.mismatch->actual == 2);
    CHECK(r.verified_to == 2);
    const auto j = to_json(r);
    CHECK(j["mismatch"]["index"] == 3);
    CHECK(j["status"] == "mismatch");
    CHECK(render_text(r).find("MISMATCH at q^3") != std::string::npos);
}

TEST_CASE("cmd_discover") {
    const auto r1 = cmd_discover(Identity::rr1, 50, 12);
    CHECK(r1.status == Status::ok);
    CHECK(r1.payload["pattern"]["modulus"] == 5);
    CHECK(r1.payload["pattern"]["residues"] == nlohmann::json::array({1, 4}));
    CHECK(r1.payload["verified_to"] == 50);

    const auto r2 = cmd_discover(Identity::rr2, 50, 12);
    CHECK(r2.payload["pattern"]["residues"] == nlohmann::json::array({2, 3}));

    const auto few = cmd_discover(Identity::rr1, 3, 12);
    CHECK(few.payload["pattern"].is_null());
    CHECK(few.payload["product"]["factors"].size() == 1);
    CHECK(few.status == Status::ok);

    // Too small a modulus bound hides the pattern.
    CHECK(cmd_discover(Identity::rr1, 50, 4).payload["pattern"].is_null());
}

TEST_CASE("cmd_cfrac") {
    const auto g = cmd_cfrac_golden(5);
    const auto &rows = g.payload["convergents"];
    REQUIRE(rows.size() == 5);
    CHECK(rows[4]["numerator"] == "8");
    CHECK(rows[4]["denominator"] == "5");
    CHECK(rows[2]["numerator"] == "3");
    CHECK(rows[2]["denominator"] == "2");

    const auto rr = cmd_cfrac_rr(4, 10);
    CHECK(rr.payload["convergents"][3]["numerator"] ==
          "1+zq+zq^2+zq^3+zq^4+z^2q^4+z^2q^5+z^2q^6");
    CHECK(rr.payload["convergents"][3]["denominator"] == "1+zq^2+zq^3+zq^4+z^2q^6");
    CHECK(rr.payload["convergents"][1]["denominator"] == "1+zq^2");
}

TEST_CASE("cmd_zeta") {
    const auto r = cmd_zeta(30);
    CHECK(r.status == Status::ok);
    CHECK(r.payload["indices"] ==
          nlohmann::json::array({2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    CHECK(r.lines.front() ==
          "zeta(s) = prod over p in {2,3,5,7,11,13,17,19,23,29} of 1/(1 - p^(-s))");
}

TEST_CASE("cmd_sum and cmd_product") {
    const auto s = cmd_sum(Identity::rr1, 4);
    CHECK(s.lines[0] ==
          "1+q/(1-q)+q^4/((1-q)(1-q^2))+q^9/((1-q)(1-q^2)(1-q^3))+q^16/((1-q)(1-q^2)(1-q^3)(1-q^4))+...");
    CHECK(s.lines[1] == "= 1+q+q^2+q^3+2q^4 + O(q^5)");
    CHECK(cmd_sum(Identity::rr2, 4).lines[0].rfind("1+q^2/(1-q)+q^6/", 0) == 0);

    const auto p = cmd_product(rogers_ramanujan_pattern(0), 4);
    CHECK(p.lines[1] == "= 1+q+q^2+q^3+2q^4 + O(q^5)");
}

TEST_CASE("JSON output is deterministic and key-sorted") {
    const auto a = to_json(cmd_discover(Identity::rr2, 40, 12)).dump();
    const auto b = to_json(cmd_discover(Identity::rr2, 40, 12)).dump();
    CHECK(a == b);
    CHECK(a.rfind(R"({"command":"discover","order":40,"payload":)", 0) == 0);
}
