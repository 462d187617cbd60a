#pragma once

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "levar/array.hpp"

// Asserts that the statement throws levar::Error with the given kind.
#define CHECK_FAILS(want, ...)                                    \
    do {                                                          \
        try {                                                     \
            __VA_ARGS__;                                          \
            FAIL("expected " #want ", nothing was thrown");       \
        } catch (const levar::Error& e_) {                        \
            CHECK(e_.kind() == levar::ErrorKind::want);           \
        }                                                         \
    } while (0)

namespace levar_tests {

inline levar::Array<std::int64_t> vec_array(std::vector<std::int64_t> v) {
    const std::size_t n = v.size();
    return levar::Array<std::int64_t>::from_buffer(levar::Shape::vector_of(n), std::move(v));
}

inline levar::Array<std::int64_t> mat_array(
    const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<std::int64_t> flat;
    for (const auto& row : rows) {
        REQUIRE(row.size() == cols);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return levar::Array<std::int64_t>::from_buffer(
        levar::Shape::matrix_of(rows.size(), cols), std::move(flat));
}

} // namespace levar_tests
