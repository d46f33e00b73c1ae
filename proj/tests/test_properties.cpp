#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties_common.hpp"

using namespace fjrw;

TEST_CASE("structural invariants hold on every corpus entry") {
    for (auto& e : corpus()) {
        CAPTURE(e.name);
        auto failures = props::entry_properties(e);
        for (auto& f : failures) FAIL_CHECK(f);
        CHECK(failures.empty());
    }
}
