#include <catch2/catch_amalgamated.hpp>

#include "property_suites.hpp"

TEST_CASE("property suites") {
    for (const auto& r : jkl::testing::run_all_property_suites()) {
        INFO(r.name << ": " << r.failures << " failures in " << r.cases << " cases");
        CHECK(r.failures == 0);
        CHECK(r.cases >= 200);
    }
}
