#include <cstdint>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "levar/io.hpp"
#include "levar/kernels.hpp"

using namespace levar;
using levar_tests::mat_array;
using levar_tests::vec_array;
using std::int64_t;

namespace {

// Independent matmul oracle: plain triple loop over flat row-major buffers.
std::vector<int64_t> matmul_oracle(const std::vector<int64_t>& a,
                                   const std::vector<int64_t>& b, std::size_t m,
                                   std::size_t p, std::size_t n) {
    std::vector<int64_t> out(m * n, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < p; ++k) out[i * n + j] += a[i * p + k] * b[k * n + j];
    return out;
}

} // namespace

TEST_CASE("plus") {
    const auto a = vec_array({1, 2});
    CHECK(tabulate(plus(a, vec_array({3, 4}))).buffer() == std::vector<int64_t>{4, 6});
    CHECK(elementwise_equal(plus(a, vec_array({0, 0})), a));

    const auto sca = Array<int64_t>::from_buffer(Shape::unit(), {42});
    CHECK(tabulate(plus(sca, sca)).buffer() == std::vector<int64_t>{84});

    CHECK_FAILS(ShapeMismatch, plus(a, vec_array({1, 2, 3})));

    // any level
    const Shape s3 = make_shape(3, {{2}, {2, 2}, {1, 2, 2, 1}});
    const auto x = generate(s3, Rand{5});
    CHECK(elementwise_equal(plus(x, generate(s3, Const{0})), x));
}

TEST_CASE("matmul matches the worked example") {
    const auto a = mat_array({{1, 2}, {3, 4}});
    const auto b = mat_array({{5, 6}, {7, 8}});
    const auto got = tabulate(matmul(a, b));
    CHECK(got.buffer() == std::vector<int64_t>{19, 22, 43, 50});
    CHECK(got.buffer() == matmul_oracle({1, 2, 3, 4}, {5, 6, 7, 8}, 2, 2, 2));
}

TEST_CASE("matmul identity and errors") {
    const auto a = mat_array({{2, 9, 1}, {4, 0, 5}, {7, 3, 6}});
    const auto eye = mat_array({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(elementwise_equal(matmul(eye, a), a));
    CHECK(elementwise_equal(matmul(a, eye), a));

    CHECK_FAILS(DimMismatch, matmul(mat_array({{1, 2}}), mat_array({{1, 2}})));
    CHECK_FAILS(LevelMismatch, matmul(vec_array({1, 2}), vec_array({1, 2})));
    const auto rank3 = Array<int64_t>::from_buffer(Shape::of_axes({1, 1, 2}), {1, 2});
    CHECK_FAILS(DimMismatch, matmul(rank3, rank3));
}

TEST_CASE("matmul agrees with the triple-loop oracle") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 500; ++round) {
        const std::size_t m = 1 + rng() % 5, p = 1 + rng() % 5, n = 1 + rng() % 5;
        const auto a = generate(Shape::matrix_of(m, p), Rand{rng()});
        const auto b = generate(Shape::matrix_of(p, n), Rand{rng()});
        // keep the products in range
        const auto small = [](int64_t x) { return x % 1000; };
        const auto as = tabulate(map(small, a));
        const auto bs = tabulate(map(small, b));
        CHECK(tabulate(matmul(as, bs)).buffer() ==
              matmul_oracle(as.buffer(), bs.buffer(), m, p, n));
    }
}

TEST_CASE("average pooling reproduces the worked figure") {
    const auto a = mat_array({{1, 2, 5, 6}, {3, 4, 7, 8}});
    const auto direct = tabulate(avgp_direct(a));
    const auto nested = tabulate(avgp_nested(a));
    CHECK(direct.shape() == Shape::matrix_of(1, 2));
    CHECK(direct.buffer() == std::vector<int64_t>{2, 6});
    CHECK(nested.shape() == Shape::matrix_of(1, 2));
    CHECK(nested.buffer() == std::vector<int64_t>{2, 6});
}

TEST_CASE("average pooling of constants and the 2x2 case") {
    const auto c = generate(Shape::matrix_of(4, 6), Const{9});
    CHECK(elementwise_equal(avgp_direct(c), generate(Shape::matrix_of(2, 3), Const{9})));
    CHECK(elementwise_equal(avgp_nested(c), generate(Shape::matrix_of(2, 3), Const{9})));

    const auto ones = mat_array({{1, 1}, {1, 1}});
    CHECK(tabulate(avgp_direct(ones)).buffer() == std::vector<int64_t>{1});
    CHECK(tabulate(avgp_nested(ones)).buffer() == std::vector<int64_t>{1});
}

TEST_CASE("average pooling validates its input") {
    CHECK_FAILS(OddExtent, avgp_direct(mat_array({{1, 2, 3}, {4, 5, 6}})));
    CHECK_FAILS(OddExtent, avgp_nested(mat_array({{1, 2, 3}, {4, 5, 6}})));
    CHECK_FAILS(LevelMismatch, avgp_direct(vec_array({1, 2, 3, 4})));
    CHECK_FAILS(LevelMismatch, avgp_nested(vec_array({1, 2, 3, 4})));
}

TEST_CASE("nested and direct pooling agree") {
    std::mt19937_64 rng(7);
    // exhaustive over small even shapes, including empty ones
    for (std::size_t m = 0; m <= 4; ++m)
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto a = generate(Shape::matrix_of(2 * m, 2 * n), Rand{rng()});
            CHECK(elementwise_equal(avgp_nested(a), avgp_direct(a)));
        }
    for (int round = 0; round < 200; ++round) {
        const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
        const auto a = generate(Shape::matrix_of(2 * m, 2 * n), Rand{rng()});
        CHECK(elementwise_equal(avgp_nested(a), avgp_direct(a)));
    }
}
