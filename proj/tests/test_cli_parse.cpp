#include "doctest.h"

#include <cmath>

#include "erd/cli_parse.hpp"
#include "erd/errors.hpp"
#include "erd/identities.hpp"
#include "erd/json_io.hpp"

using erd::Complex;

TEST_SUITE_BEGIN("cli_parse");

TEST_CASE("complex literals") {
    CHECK(erd::parse_complex("-1") == Complex{-1.0, 0.0});
    CHECK(erd::parse_complex("2.5") == Complex{2.5, 0.0});
    CHECK(erd::parse_complex("-2.5+1.3i") == Complex{-2.5, 1.3});
    CHECK(erd::parse_complex("0.5-0.5i") == Complex{0.5, -0.5});
    CHECK(erd::parse_complex("1.3i") == Complex{0.0, 1.3});
    CHECK(erd::parse_complex("-1.3i") == Complex{0.0, -1.3});
    CHECK(erd::parse_complex("i") == Complex{0.0, 1.0});
    CHECK(erd::parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(erd::parse_complex("1+i") == Complex{1.0, 1.0});
    CHECK(erd::parse_complex("1e-3+2e-4i") == Complex{1e-3, 2e-4});
    CHECK(erd::parse_complex("-1E2-3E1i") == Complex{-100.0, -30.0});
    CHECK_THROWS_AS(erd::parse_complex(""), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_complex("abc"), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_complex("1+2j"), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_complex("1.2.3i"), erd::DomainError);
}

TEST_CASE("grid specs") {
    CHECK(erd::parse_grid("0.5") == std::vector<double>{0.5});
    CHECK(erd::parse_grid("1,2,3") == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(erd::parse_grid("0.5236,0.7854") == std::vector<double>{0.5236, 0.7854});
    const std::vector<double> lin = erd::parse_grid("-1:1:11");
    CHECK(lin.size() == 11);
    CHECK(lin.front() == -1.0);
    CHECK(lin.back() == 1.0);
    CHECK(lin[5] == doctest::Approx(0.0));
    CHECK(erd::parse_grid("2:2:1") == std::vector<double>{2.0});
    CHECK_THROWS_AS(erd::parse_grid("1:2"), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_grid("1:2:0"), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_grid("1:2:2.5"), erd::DomainError);
    CHECK_THROWS_AS(erd::parse_grid(""), erd::DomainError);
}

TEST_CASE("identity report JSON round trip") {
    const erd::IdentityReport before = erd::check_prop1(0.3, 0.5, 2000, 1e-4);
    const nlohmann::ordered_json j = erd::to_json(before);
    const auto text = j.dump();
    const erd::IdentityReport after =
        erd::identity_report_from_json(nlohmann::ordered_json::parse(text));
    CHECK(after.check_name == before.check_name);
    CHECK(after.lhs == before.lhs);
    CHECK(after.rhs == before.rhs);
    CHECK(after.abs_residual == before.abs_residual);
    CHECK(after.tail_bound == before.tail_bound);
    CHECK(after.terms_used == before.terms_used);
    CHECK(after.tolerance == before.tolerance);
    CHECK(after.pass == before.pass);
    // the recorded verdict reproduces from the recorded fields
    CHECK(after.pass == (after.abs_residual <= after.tail_bound + after.tolerance));
    CHECK(after.inputs == before.inputs);
}

TEST_CASE("uncertified report round trips its vacuous bound") {
    const erd::IdentityReport before = erd::er_product_check(500.0, 0.3, 10, 1e-6);
    REQUIRE(!std::isfinite(before.tail_bound));
    REQUIRE(!before.pass);
    const auto text = erd::to_json(before).dump();
    const erd::IdentityReport after =
        erd::identity_report_from_json(nlohmann::ordered_json::parse(text));
    CHECK(std::isinf(after.tail_bound));
    CHECK(!after.pass);
}

TEST_SUITE_END();
