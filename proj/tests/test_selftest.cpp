#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "levar/selftest.hpp"

using namespace levar;

namespace {

void collect_extents(const Shape& s, std::set<std::size_t>& out) {
    if (s.is_unit()) return;
    for (std::size_t e : s.extents()) out.insert(e);
    collect_extents(s.inner(), out);
}

} // namespace

TEST_CASE("the shape universe meets the property-suite contract") {
    const auto shapes = selftest::shape_universe(1024, 20240901);
    CHECK(shapes.size() >= 200);

    std::set<std::size_t> levels;
    for (const Shape& s : shapes) {
        levels.insert(s.level());
        CHECK(s.level() <= 3);
        CHECK(prod(s) <= 1024);
        std::set<std::size_t> extents;
        collect_extents(s, extents);
        for (std::size_t e : extents) CHECK(e <= 3);
    }
    CHECK(levels == std::set<std::size_t>{0, 1, 2, 3});

    // deterministic per seed
    const auto again = selftest::shape_universe(1024, 20240901);
    REQUIRE(again.size() == shapes.size());
    for (std::size_t k = 0; k < shapes.size(); ++k) CHECK(again[k] == shapes[k]);

    // the prod bound is honored when tighter
    for (const Shape& s : selftest::shape_universe(256, 7)) CHECK(prod(s) <= 256);
}
