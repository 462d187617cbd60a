#pragma once

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "levar/shape.hpp"

namespace levar::selftest {

struct Report {
    std::size_t suites_passed = 0;
    std::size_t suites_failed = 0;
    std::size_t checks_passed = 0;
    std::size_t checks_failed = 0;

    bool ok() const noexcept { return suites_failed == 0; }
};

// Deterministic family of shapes driving the property suites: levels 0..2
// enumerated exhaustively over extents {0,1,2,3}, level 3 sampled with the
// given seed; every shape has prod <= max_prod, duplicates removed.
std::vector<Shape> shape_universe(std::size_t max_prod, std::uint64_t seed,
                                  std::size_t level3_target = 150);

// Runs every property suite once, printing one line per suite.
Report run_all(std::uint64_t seed, std::ostream& out);

} // namespace levar::selftest
